// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "floqlat/domain_wall.hpp"
#include "floqlat/doubling.hpp"
#include "floqlat/floquet.hpp"
#include "floqlat/scaling.hpp"

using namespace floqlat;

namespace {

constexpr BoundaryCondition kPBC = BoundaryCondition::kPeriodic;
constexpr BoundaryCondition kOBC = BoundaryCondition::kOpen;
constexpr double kNoLimit = std::numeric_limits<double>::infinity();

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;
  std::function<Outcome()> check;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

int count_below(const RealVector& ev, double cut) {
  int n = 0;
  for (double e : ev) n += std::abs(e) < cut;
  return n;
}

const std::vector<double> kEtas{-kPi / 8, 0.05, kPi / 8, 0.2};
const std::vector<int> kSizes{8, 16, 64};

Outcome round_trip() {
  double worst = 0.0;
  for (double eta : kEtas) {
    for (int n : kSizes) {
      const QuasienergySpectrum eps = quasienergies(build_floquet(DriveParams{kPi / 4, kPi / 4 + eta, n, kPBC}));
      for (StaticModel model : {StaticModel::kSSH, StaticModel::kWD}) {
        const PoleSpectrum poles = double_poles(static_spectrum(model, eta, n, kPBC));
        worst = std::max(worst, compare_spectra(poles.values, eps.values));
      }
    }
  }
  return {worst < 1e-10, fmt("max mismatch %.2e", worst)};
}

Outcome dispersion_oracle() {
  constexpr int kGrid = 10, kCells = 16;
  double worst = 0.0;
  for (int i = 0; i < kGrid; ++i) {
    for (int j = 0; j < kGrid; ++j) {
      // Axes offset by a quarter step so no grid point sits on a gap closure.
      const double t0 = (i + 0.5) * (kPi / 2) / kGrid;
      const double t1 = (j + 0.25) * (kPi / 2) / kGrid;
      const QuasienergySpectrum direct = quasienergies(build_floquet(DriveParams{t0, t1, kCells, kPBC}));
      std::vector<double> formula;
      for (int m = 0; m < kCells; ++m) {
        const double e = analytic_dispersion_general(t0, t1, kPi * m / kCells);
        formula.push_back(e);
        formula.push_back(-e);
      }
      worst = std::max(worst, circular_max_mismatch(direct.values, formula));
    }
  }
  return {worst < 1e-10, fmt("max mismatch %.2e over 10x10 grid, N=16", worst)};
}

Outcome pi_pairing() {
  double worst = 0.0;
  bool all_paired = true;
  for (double eta : kEtas) {
    for (int n : kSizes) {
      const PiPairing p = check_pi_pairing(floquet_spectrum(DriveParams{kPi / 4, kPi / 4 + eta, n, kPBC}), 1e-10);
      all_paired = all_paired && p.paired;
      worst = std::max(worst, p.mismatch);
    }
  }
  const DriveParams zero_phase{0.2, kPi / 4, 64, kOBC};
  const Phase phase = classify_phase(zero_phase).label;
  const PiPairing obc = check_pi_pairing(floquet_spectrum(zero_phase), 1e-10);
  const bool pass = all_paired && worst < 1e-10 && phase == Phase::kZero && !obc.paired;
  return {pass, fmt("PBC max mismatch %.2e", worst) + fmt("; OBC 0-phase mismatch %.3f (pairing broken)", obc.mismatch)};
}

Outcome phase_diagram() {
  constexpr int kGrid = 8;
  const double lo = 0.05, hi = kPi / 2 - 0.05;
  const auto cells = scan_phase_diagram(kGrid, 64, lo, hi);
  std::set<Phase> seen;
  int boundary = 0;
  bool lines_ok = true;
  for (int r = 0; r < kGrid; ++r) {      // theta1 index
    for (int c = 0; c < kGrid; ++c) {    // theta0 index
      const PhaseCell& cell = cells[r * kGrid + c];
      if (!cell.label) {
        ++boundary;
        continue;
      }
      const Phase p = cell.label->label;
      seen.insert(p);
      if (r == 0) lines_ok = lines_ok && p == Phase::kTrivial;
      if (c == 0) lines_ok = lines_ok && p == Phase::kZero;
      if (c == kGrid - 1) lines_ok = lines_ok && p == Phase::kPi;
      if (r == kGrid - 1) lines_ok = lines_ok && p == Phase::kZeroPi;
    }
  }
  const bool pass = seen.size() == 4 && lines_ok;
  return {pass, std::to_string(seen.size()) + " labels, " + std::to_string(boundary) +
                    " boundary cells, representative lines " + (lines_ok ? "correct" : "WRONG")};
}

Outcome edge_modes() {
  const auto count_modes = [](double eta) {
    int zero = 0, pi = 0;
    bool weights = true;
    for (const auto& m : find_edge_modes(DriveParams{kPi / 4, kPi / 4 + eta, 64, kOBC})) {
      (m.kind == ModeKind::kZero ? zero : pi)++;
      weights = weights && m.edge_weight >= 0.5;
    }
    const int ssh = count_below(eigvalsh(build_ssh(mapped_ssh_params(eta, 64, kOBC)).real()), 1e-6);
    const int wd = count_below(eigvalsh(build_wd(mapped_wd_params(eta, 64, kOBC)).matrix), 1e-6);
    return std::array<int, 5>{zero, pi, ssh, wd, weights ? 1 : 0};
  };
  const auto top = count_modes(kPi / 8);
  const auto triv = count_modes(-kPi / 8);
  const bool pass = top[0] == 2 && top[1] == 2 && top[2] == 2 && top[3] == 2 && top[4] == 1 && triv[0] == 0 &&
                    triv[1] == 0 && triv[2] == 0 && triv[3] == 0;
  char buf[200];
  std::snprintf(buf, sizeof buf, "eta=pi/8: zero=%d pi=%d ssh=%d wd=%d; eta=-pi/8: zero=%d pi=%d ssh=%d wd=%d", top[0],
                top[1], top[2], top[3], triv[0], triv[1], triv[2], triv[3]);
  return {pass, buf};
}

Outcome scaling() {
  const auto sizes = default_scaling_sizes();
  const PowerLawFit obc = fit_power_law(run_scaling(ScalingConfig::kOpen, kPi / 8, StaticModel::kSSH, sizes));
  const PowerLawFit wall = fit_power_law(run_scaling(ScalingConfig::kDomainWall, kPi / 8, StaticModel::kSSH, sizes));
  const auto ok = [](const PowerLawFit& f) { return f.exponent >= 0.85 && f.exponent <= 1.15 && f.r_squared > 0.98; };
  char buf[200];
  std::snprintf(buf, sizeof buf, "OBC exponent %.4f r2 %.5f; wall exponent %.4f r2 %.5f", obc.exponent, obc.r_squared,
                wall.exponent, wall.r_squared);
  return {ok(obc) && ok(wall), buf};
}

Outcome wall_state() {
  constexpr double kXi = 0.56729;
  const DomainWallProfile profile{WallModel::kWD, -kPi / 8, kPi / 8, std::nullopt};
  const BoundState s = extract_wall_state(build_wd_wall(profile, 200), 2, profile.wall_site(200));
  const double closed_form = -1.0 / std::log(wd_wall_decay_factors(kPi / 8).right);
  const double residual = analytic_wd_residual(kPi / 8, 200);
  const double rel = std::abs(s.xi_right - kXi) / kXi;
  const bool pass = std::abs(closed_form - kXi) < 1e-5 && rel < 0.05 && s.energy < 1e-6 && residual < 1e-12;
  char buf[200];
  std::snprintf(buf, sizeof buf, "xi_right %.5f (%.2f%% off), |E| %.1e, residual %.1e", s.xi_right, 100 * rel,
                s.energy, residual);
  return {pass, buf};
}

Outcome properties() {
  std::mt19937_64 g(8);
  std::uniform_real_distribution<double> angle(0.0, kPi / 2), unit(0.0, 1.0), sym(-1.0, 1.0);
  double herm = 0.0, unit_err = 0.0, chiral = 0.0, ph = 0.0, recip = 0.0;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 12;
    const auto bc = trial % 2 ? kOBC : kPBC;
    const DriveParams d{angle(g), angle(g), n, bc};
    herm = std::max({herm, build_h0(d).hermiticity_error(), build_h1(d).hermiticity_error()});
    unit_err = std::max(unit_err, build_floquet(d).unitarity_error());

    const HermitianOperator ssh = build_ssh(SSHParams{unit(g), unit(g), n, bc});
    const HermitianOperator wd = build_wd(WDParams{sym(g), unit(g), n, bc});
    herm = std::max({herm, ssh.hermiticity_error(), wd.hermiticity_error()});
    const ComplexMatrix gamma = sublattice_chirality(2 * n).cast<Complex>().asDiagonal();
    chiral = std::max(chiral, (gamma * ssh.matrix * gamma + ssh.matrix).cwiseAbs().maxCoeff());
    for (const auto* h : {&ssh, &wd}) {
      const RealVector ev = eigvalsh(h->matrix);
      for (int i = 0; i < ev.size(); ++i) ph = std::max(ph, std::abs(ev(i) + ev(ev.size() - 1 - i)));
    }
    const QuasienergySpectrum q = floquet_spectrum(d);
    for (std::size_t i = 0; i < q.size(); ++i) {
      ph = std::max(ph, wrap_distance(q.values[i], -q.values[q.size() - 1 - i]));
    }
    const double eta = 1e-3 + unit(g) * (kPi / 4 - 2e-3);
    const DecayFactors f = wd_wall_decay_factors(eta);
    recip = std::max(recip, std::abs(f.left * f.right - 1.0));
  }
  double pbc = 0.0;
  for (StaticModel target : {StaticModel::kSSH, StaticModel::kWD}) {
    for (double m : run_scaling(ScalingConfig::kPeriodic, kPi / 8, target, default_scaling_sizes()).metric_values) {
      pbc = std::max(pbc, m);
    }
  }
  const bool pass = herm < 1e-12 && unit_err < 1e-10 && chiral < 1e-14 && ph < 1e-10 && recip < 1e-12 && pbc < 1e-10;
  char buf[300];
  std::snprintf(buf, sizeof buf, "herm %.1e unitary %.1e chiral %.1e p-h %.1e reciprocal %.1e pbc-control %.1e", herm,
                unit_err, chiral, ph, recip, pbc);
  return {pass, buf};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "round-trip spectral identity (PBC)", 1.0, round_trip},
      {2, "six-cosine dispersion vs direct diagonalization", 5.0, dispersion_oracle},
      {3, "pi-pairing on the pi/4 line, broken under OBC", kNoLimit, pi_pairing},
      {4, "8x8 phase diagram at N=64", 30.0, phase_diagram},
      {5, "edge-mode counts in the 0pi phase", kNoLimit, edge_modes},
      {6, "finite-size scaling exponents", 120.0, scaling},
      {7, "WD domain-wall bound state", kNoLimit, wall_state},
      {8, "property suites", 60.0, properties},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.time_limit_s;
    const bool pass = o.pass && in_time;
    failures += !pass;
    const std::string limit = std::isinf(c.time_limit_s) ? "no limit" : fmt("limit %.0f s", c.time_limit_s);
    std::printf("[%s] criterion %d: %s | %s | %.2f s (%s)%s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                o.detail.c_str(), secs, limit.c_str(), in_time ? "" : " TIMEOUT");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
