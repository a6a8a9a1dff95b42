#include "floqlat/lattice_models.hpp"

#include <cmath>
#include <string>

#include "floqlat/error.hpp"

namespace floqlat {
namespace {

constexpr double kAngleSlack = 1e-12;

void add_bond(ComplexMatrix& m, int a, int b, double value) {
  m(a, b) += value;
  m(b, a) += value;
}

}  // namespace

void DriveParams::validate() const {
  if (!(theta0 >= -kAngleSlack && theta0 <= kPi / 2 + kAngleSlack) ||
      !(theta1 >= -kAngleSlack && theta1 <= kPi / 2 + kAngleSlack)) {
    throw Error(ErrorCode::kInvalidArgument, "theta0 and theta1 must lie in [0, pi/2]");
  }
  if (n_cells < 2) throw Error(ErrorCode::kInvalidArgument, "n_cells must be >= 2");
}

void SSHParams::validate() const {
  if (!(u >= 0.0) || !(v >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "SSH couplings must be >= 0");
  if (n_cells < 1) throw Error(ErrorCode::kInvalidArgument, "SSH chain needs at least one cell");
}

void WDParams::validate() const {
  if (n_sites < 2) {
    throw Error(ErrorCode::kDim, "Wilson-Dirac chain needs n_sites >= 2, got " + std::to_string(n_sites));
  }
  if (!(r >= 0.0) || !std::isfinite(m)) {
    throw Error(ErrorCode::kInvalidArgument, "Wilson parameter must be >= 0 and mass finite");
  }
}

int h1_bond_count(const DriveParams& params) {
  return params.bc == BoundaryCondition::kPeriodic ? params.n_cells : params.n_cells - 1;
}

HermitianOperator build_h0(const DriveParams& params) {
  params.validate();
  const int n = params.n_sites();
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (int j = 0; j < params.n_cells; ++j) add_bond(m, 2 * j, 2 * j + 1, 2.0);
  return {std::move(m)};
}

HermitianOperator build_h1(const DriveParams& params) {
  const std::vector<double> uniform(static_cast<std::size_t>(h1_bond_count(params)), 2.0);
  return build_h1_scaled(params, uniform);
}

HermitianOperator build_h1_scaled(const DriveParams& params, std::span<const double> coeff_profile) {
  params.validate();
  const int bonds = h1_bond_count(params);
  if (static_cast<int>(coeff_profile.size()) != bonds) {
    throw Error(ErrorCode::kProfileLength, "expected " + std::to_string(bonds) + " H1 bond coefficients, got " +
                                               std::to_string(coeff_profile.size()));
  }
  const int n = params.n_sites();
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (int j = 0; j < bonds; ++j) add_bond(m, 2 * j + 1, (2 * j + 2) % n, coeff_profile[j]);
  return {std::move(m)};
}

HermitianOperator build_chain(int n_sites, std::span<const double> bonds) {
  if (n_sites < 2) throw Error(ErrorCode::kDim, "chain needs at least two sites");
  const auto nb = static_cast<int>(bonds.size());
  if (nb != n_sites && nb != n_sites - 1) {
    throw Error(ErrorCode::kProfileLength, "chain of " + std::to_string(n_sites) + " sites cannot carry " +
                                               std::to_string(nb) + " bonds");
  }
  ComplexMatrix m = ComplexMatrix::Zero(n_sites, n_sites);
  for (int i = 0; i < nb; ++i) add_bond(m, i, (i + 1) % n_sites, bonds[i]);
  return {std::move(m)};
}

HermitianOperator build_ssh(const SSHParams& params) {
  params.validate();
  const int n = params.n_sites();
  const int nb = params.bc == BoundaryCondition::kPeriodic ? n : n - 1;
  std::vector<double> bonds(static_cast<std::size_t>(nb));
  for (int i = 0; i < nb; ++i) bonds[i] = (i % 2 == 0) ? params.v : params.u;
  return build_chain(n, bonds);
}

HermitianOperator build_wd(const WDParams& params) {
  params.validate();
  const std::vector<double> mass(static_cast<std::size_t>(params.n_sites), params.m);
  const std::vector<double> wilson(static_cast<std::size_t>(params.n_sites), params.r);
  return build_wd_profile(mass, wilson, params.bc);
}

// h = gamma0 K with gamma0 = sigma2, gamma1 = -i sigma1 and
// K = R gamma1 (-i nabla) - (R/2) nabla^2 + m. Per site this gives
// sigma2 (m + R) on the diagonal and (i R sigma3 - R sigma2) / 2 on the
// forward hop x -> x+1.
HermitianOperator build_wd_profile(std::span<const double> mass, std::span<const double> wilson,
                                   BoundaryCondition bc) {
  const auto n = static_cast<int>(mass.size());
  if (n < 2) throw Error(ErrorCode::kDim, "Wilson-Dirac chain needs n_sites >= 2, got " + std::to_string(n));
  if (static_cast<int>(wilson.size()) != n) {
    throw Error(ErrorCode::kProfileLength, "mass and Wilson profiles differ in length");
  }
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd sigma2;
  sigma2 << 0.0, -i, i, 0.0;
  Eigen::Matrix2cd sigma3;
  sigma3 << 1.0, 0.0, 0.0, -1.0;

  ComplexMatrix h = ComplexMatrix::Zero(2 * n, 2 * n);
  for (int x = 0; x < n; ++x) {
    if (!(wilson[x] >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "Wilson parameter must be >= 0");
    h.block<2, 2>(2 * x, 2 * x) += sigma2 * (mass[x] + wilson[x]);
  }
  const int hops = bc == BoundaryCondition::kPeriodic ? n : n - 1;
  for (int x = 0; x < hops; ++x) {
    const int y = (x + 1) % n;
    const double r = 0.5 * (wilson[x] + wilson[y]);
    const Eigen::Matrix2cd forward = 0.5 * r * (i * sigma3 - sigma2);
    h.block<2, 2>(2 * x, 2 * y) += forward;
    h.block<2, 2>(2 * y, 2 * x) += forward.adjoint();
  }
  return {std::move(h)};
}

RealVector sublattice_chirality(int n_sites) {
  RealVector g(n_sites);
  for (int i = 0; i < n_sites; ++i) g[i] = (i % 2 == 0) ? 1.0 : -1.0;
  return g;
}

double ssh_dispersion(double u, double v, double k) {
  return std::sqrt(std::max(0.0, u * u + v * v + 2.0 * u * v * std::cos(2.0 * k)));
}

double wd_dispersion(double m, double r, double p) {
  const double s = r * std::sin(p);
  const double mass = m + r * (1.0 - std::cos(p));
  return std::sqrt(s * s + mass * mass);
}

}  // namespace floqlat
