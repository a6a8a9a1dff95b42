#include <doctest.h>

#include "floqlat/lattice_models.hpp"
#include "support.hpp"

using namespace floqlat;

namespace {

DriveParams drive(int n, BoundaryCondition bc) { return DriveParams{0.0, 0.0, n, bc}; }

// Translation by two sites on a ring of n sites.
RealMatrix shift2(int n) {
  RealMatrix t = RealMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) t((i + 2) % n, i) = 1.0;
  return t;
}

}  // namespace

TEST_CASE("H0 on two cells is the pair of dimers") {
  for (auto bc : {BoundaryCondition::kPeriodic, BoundaryCondition::kOpen}) {
    RealMatrix expected = RealMatrix::Zero(4, 4);
    expected(0, 1) = expected(1, 0) = expected(2, 3) = expected(3, 2) = 2.0;
    CHECK((build_h0(drive(2, bc)).real() - expected).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("H0 spectrum is +-2 with N-fold degeneracy and commutes with two-site shifts") {
  for (int n : {2, 3, 5, 8}) {
    const RealMatrix h = build_h0(drive(n, BoundaryCondition::kPeriodic)).real();
    const RealVector ev = eigvalsh(h);
    for (int i = 0; i < n; ++i) {
      CHECK(ev(i) == doctest::Approx(-2.0).epsilon(1e-12));
      CHECK(ev(n + i) == doctest::Approx(2.0).epsilon(1e-12));
    }
    const RealMatrix t = shift2(2 * n);
    CHECK((t * h - h * t).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("H1 bonds for OBC and PBC") {
  RealMatrix obc = RealMatrix::Zero(4, 4);
  obc(1, 2) = obc(2, 1) = 2.0;
  CHECK((build_h1(drive(2, BoundaryCondition::kOpen)).real() - obc).cwiseAbs().maxCoeff() == 0.0);
  RealMatrix pbc = obc;
  pbc(3, 0) = pbc(0, 3) = 2.0;
  CHECK((build_h1(drive(2, BoundaryCondition::kPeriodic)).real() - pbc).cwiseAbs().maxCoeff() == 0.0);
  CHECK(h1_bond_count(drive(5, BoundaryCondition::kOpen)) == 4);
  CHECK(h1_bond_count(drive(5, BoundaryCondition::kPeriodic)) == 5);
}

TEST_CASE("OBC H1 leaves both end sites decoupled") {
  const RealVector ev = eigvalsh(build_h1(drive(4, BoundaryCondition::kOpen)).real());
  int zeros = 0;
  for (double e : ev) zeros += std::abs(e) < 1e-12;
  CHECK(zeros == 2);
}

TEST_CASE("build_h1_scaled profiles") {
  const DriveParams p = drive(6, BoundaryCondition::kOpen);
  const int bonds = h1_bond_count(p);
  std::vector<double> twos(bonds, 2.0);
  CHECK((build_h1_scaled(p, twos).matrix - build_h1(p).matrix).cwiseAbs().maxCoeff() < 1e-15);
  std::vector<double> zeros(bonds, 0.0);
  CHECK(build_h1_scaled(p, zeros).matrix.cwiseAbs().maxCoeff() == 0.0);

  const double right = 2.0 * (kPi / 8) / (3 * kPi / 8);
  CHECK(right == doctest::Approx(0.66667).epsilon(1e-5));
  std::vector<double> step(bonds, 2.0);
  for (int j = bonds / 2; j < bonds; ++j) step[j] = right;
  const HermitianOperator h = build_h1_scaled(p, step);
  CHECK(h.hermiticity_error() < kHermiticityTolerance);
  CHECK(h.real()(1, 2) == 2.0);
  CHECK(h.real()(2 * bonds - 1, 2 * bonds) == doctest::Approx(right));

  std::vector<double> wrong(bonds + 1, 2.0);
  FLOQLAT_CHECK_ERROR(build_h1_scaled(p, wrong), ErrorCode::kProfileLength);
}

TEST_CASE("drive parameters are validated") {
  FLOQLAT_CHECK_ERROR((DriveParams{-0.1, 0.0, 4, BoundaryCondition::kOpen}.validate()), ErrorCode::kInvalidArgument);
  FLOQLAT_CHECK_ERROR((DriveParams{0.1, 0.1, 1, BoundaryCondition::kOpen}.validate()), ErrorCode::kInvalidArgument);
}

TEST_CASE("SSH spectra") {
  const RealVector dimers = eigvalsh(build_ssh(SSHParams{0.0, 1.0, 6, BoundaryCondition::kPeriodic}).real());
  for (int i = 0; i < 6; ++i) {
    CHECK(dimers(i) == doctest::Approx(-1.0));
    CHECK(dimers(6 + i) == doctest::Approx(1.0));
  }
  const RealVector gapped =
      eigvalsh(build_ssh(SSHParams{0.85355339059327373, 0.14644660940672627, 8, BoundaryCondition::kPeriodic}).real());
  CHECK(gapped.cwiseAbs().minCoeff() == doctest::Approx(0.70711).epsilon(1e-5));
  CHECK(std::abs(gapped.cwiseAbs().minCoeff() - std::sqrt(0.5)) < 1e-9);
  const RealVector gapless = eigvalsh(build_ssh(SSHParams{1.0, 1.0, 8, BoundaryCondition::kPeriodic}).real());
  CHECK(gapless.cwiseAbs().minCoeff() < 1e-12);
}

TEST_CASE("SSH PBC spectrum follows the two-band dispersion") {
  auto g = test::rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const double u = test::uniform(g, 0, 1), v = test::uniform(g, 0, 1);
    const int n = 3 + trial;
    std::vector<double> expected;
    for (int j = 0; j < n; ++j) {
      const double e = ssh_dispersion(u, v, kPi * j / n);
      expected.push_back(e);
      expected.push_back(-e);
    }
    const RealVector ev = eigvalsh(build_ssh(SSHParams{u, v, n, BoundaryCondition::kPeriodic}).real());
    CHECK(test::sorted_max_diff(expected, std::vector<double>(ev.begin(), ev.end())) < 1e-12);
  }
}

TEST_CASE("WD spectra") {
  const double m = -std::sqrt(0.5), r = (1 + std::sqrt(0.5)) / 2;
  const RealVector ev = eigvalsh(build_wd(WDParams{m, r, 8, BoundaryCondition::kPeriodic}).matrix);
  int near = 0;
  for (double e : ev) near += std::abs(std::abs(e) - 0.70711) < 1e-5;
  CHECK(near >= 2);
  CHECK(wd_dispersion(m, r, 0.0) == doctest::Approx(std::abs(m)));

  const RealVector massless = eigvalsh(build_wd(WDParams{0.0, 0.5, 8, BoundaryCondition::kPeriodic}).matrix);
  CHECK(massless.maxCoeff() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(wd_dispersion(0.0, 0.5, kPi) == doctest::Approx(1.0));

  FLOQLAT_CHECK_ERROR(build_wd(WDParams{0.1, 0.4, 1, BoundaryCondition::kOpen}), ErrorCode::kDim);
}

TEST_CASE("WD with positive mass has no mid-gap state under OBC") {
  const double m = 0.1, r = 0.45;
  const RealVector ev = eigvalsh(build_wd(WDParams{m, r, 64, BoundaryCondition::kOpen}).matrix);
  const double bulk_gap = std::abs(m);
  CHECK(ev.cwiseAbs().minCoeff() > 0.9 * bulk_gap);
}

TEST_CASE("WD PBC spectrum follows the dispersion for random parameters") {
  auto g = test::rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const double m = test::uniform(g, -1, 1), r = test::uniform(g, 0, 1);
    const int n = 2 + trial;
    std::vector<double> expected;
    for (int j = 0; j < n; ++j) {
      const double e = wd_dispersion(m, r, 2 * kPi * j / n);
      expected.push_back(e);
      expected.push_back(-e);
    }
    const HermitianOperator h = build_wd(WDParams{m, r, n, BoundaryCondition::kPeriodic});
    CHECK(h.hermiticity_error() < kHermiticityTolerance);
    const RealVector ev = eigvalsh(h.matrix);
    CHECK(test::sorted_max_diff(expected, std::vector<double>(ev.begin(), ev.end())) < 1e-12);
  }
}

TEST_CASE("chiral and particle-hole symmetry of the static models") {
  auto g = test::rng(99);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 4 + 2 * trial;
    const auto bc = trial % 2 ? BoundaryCondition::kOpen : BoundaryCondition::kPeriodic;
    const ComplexMatrix ssh =
        build_ssh(SSHParams{test::uniform(g, 0, 1), test::uniform(g, 0, 1), n, bc}).matrix;
    const ComplexMatrix gamma = sublattice_chirality(2 * n).cast<Complex>().asDiagonal();
    CHECK((gamma * ssh * gamma + ssh).cwiseAbs().maxCoeff() < 1e-14);

    const ComplexMatrix wd = build_wd(WDParams{test::uniform(g, -1, 1), test::uniform(g, 0, 1), n, bc}).matrix;
    const RealVector ev = eigvalsh(wd);
    for (int i = 0; i < ev.size(); ++i) CHECK(std::abs(ev(i) + ev(ev.size() - 1 - i)) < 1e-12);
  }
}
