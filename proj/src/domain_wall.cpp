#include "floqlat/domain_wall.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "floqlat/doubling.hpp"
#include "floqlat/error.hpp"

namespace floqlat {
namespace {

constexpr double kFitAmplitudeFloor = 1e-10;
constexpr int kWallExclusion = 2;
constexpr double kEndExclusion = 0.1;
constexpr int kMinFitPoints = 4;

void require_wall(int wall, int n_sites) {
  if (wall < 1 || wall >= n_sites) {
    throw Error(ErrorCode::kInvalidArgument,
                "wall position " + std::to_string(wall) + " outside chain of " + std::to_string(n_sites));
  }
}

// Slope of the least-squares line through (x, y).
std::optional<double> fitted_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (static_cast<int>(x.size()) < kMinFitPoints) return std::nullopt;
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) return std::nullopt;
  return sxy / sxx;
}

std::vector<double> site_weights(const ComplexVector& psi, int components_per_site) {
  const auto n_sites = static_cast<std::size_t>(psi.size() / components_per_site);
  std::vector<double> w(n_sites, 0.0);
  const double norm = psi.squaredNorm();
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    w[static_cast<std::size_t>(i / components_per_site)] += std::norm(psi[i]) / norm;
  }
  return w;
}

BoundState bound_state_from(const ComplexVector& psi, int components_per_site, int wall, double energy) {
  BoundState state;
  state.energy = energy;
  state.weights = site_weights(psi, components_per_site);
  state.peak_site = static_cast<int>(std::max_element(state.weights.begin(), state.weights.end()) -
                                     state.weights.begin());
  std::vector<double> amplitudes(state.weights.size());
  std::transform(state.weights.begin(), state.weights.end(), amplitudes.begin(),
                 [](double w) { return std::sqrt(w); });
  try {
    const LocalizationFit fit = fit_localization_length(amplitudes, wall);
    state.xi_left = fit.xi_left;
    state.xi_right = fit.xi_right;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kFit) throw;
    state.xi_left = state.xi_right = std::numeric_limits<double>::quiet_NaN();
  }
  return state;
}

}  // namespace

const char* wall_model_name(WallModel model) {
  switch (model) {
    case WallModel::kFloquet: return "floquet";
    case WallModel::kSSH: return "ssh";
    case WallModel::kWD: return "wd";
  }
  return "unknown";
}

double floquet_wall_coefficient(double eta_left, double eta_right) {
  if (!(eta_left > -kPi / 4)) throw Error(ErrorCode::kInvalidArgument, "eta_left must exceed -pi/4");
  return 2.0 * (kPi / 4 + eta_right) / (kPi / 4 + eta_left);
}

FloquetDrive floquet_wall_drive(const DomainWallProfile& profile, int n_cells) {
  const DriveParams params{kPi / 4, kPi / 4 + profile.eta_left, n_cells, BoundaryCondition::kOpen};
  params.validate();
  const int wall = profile.wall_site(params.n_sites());
  require_wall(wall, params.n_sites());

  const double right = floquet_wall_coefficient(profile.eta_left, profile.eta_right);
  std::vector<double> coeff(static_cast<std::size_t>(h1_bond_count(params)));
  for (std::size_t j = 0; j < coeff.size(); ++j) {
    coeff[j] = (2 * static_cast<int>(j) + 1 >= wall) ? right : 2.0;
  }
  return {build_h0(params), build_h1_scaled(params, coeff), params.theta0, params.theta1};
}

UnitaryOperator build_floquet_wall(const DomainWallProfile& profile, int n_cells) {
  const FloquetDrive drive = floquet_wall_drive(profile, n_cells);
  return build_floquet(drive.h0, drive.h1, drive.theta0, drive.theta1);
}

HermitianOperator build_ssh_wall(const DomainWallProfile& profile, int n_cells) {
  const int n = 2 * n_cells;
  const int wall = profile.wall_site(n);
  require_wall(wall, n);
  const SSHParams left = solve_ssh_params(profile.eta_left, Branch::kPlus);
  const SSHParams right = solve_ssh_params(profile.eta_right, Branch::kPlus);
  std::vector<double> bonds(static_cast<std::size_t>(n - 1));
  for (int i = 0; i < n - 1; ++i) {
    const SSHParams& side = i < wall ? left : right;
    bonds[i] = (i % 2 == 0) ? side.v : side.u;
  }
  return build_chain(n, bonds);
}

HermitianOperator build_wd_wall(const DomainWallProfile& profile, int n_sites) {
  const int wall = profile.wall_site(n_sites);
  require_wall(wall, n_sites);
  const WDParams left = solve_wd_params(profile.eta_left, Branch::kMinus);
  const WDParams right = solve_wd_params(profile.eta_right, Branch::kMinus);
  std::vector<double> mass(static_cast<std::size_t>(n_sites));
  std::vector<double> wilson(static_cast<std::size_t>(n_sites));
  for (int x = 0; x < n_sites; ++x) {
    const WDParams& side = x < wall ? left : right;
    mass[x] = side.m;
    wilson[x] = side.r;
  }
  return build_wd_profile(mass, wilson, BoundaryCondition::kOpen);
}

DecayFactors wd_wall_decay_factors(double eta) {
  if (!(eta > 0.0 && eta < kPi / 4)) {
    throw Error(ErrorCode::kEtaRange, "analytic wall mode needs 0 < eta < pi/4");
  }
  // 1 + m/R on each side, simplified so the two factors stay exact reciprocals near eta = pi/4.
  const double s = std::sin(2.0 * eta);
  return {(1.0 - s) / (1.0 + s), (1.0 + s) / (1.0 - s)};
}

BoundState analytic_wd_zero_mode(double eta, int x_min, int x_max) {
  const DecayFactors f = wd_wall_decay_factors(eta);
  if (x_min > 0 || x_max < 0) throw Error(ErrorCode::kInvalidArgument, "x range must contain the wall");

  BoundState state;
  state.energy = 0.0;
  state.peak_site = -x_min;
  state.weights.resize(static_cast<std::size_t>(x_max - x_min + 1));
  double total = 0.0;
  for (int x = x_min; x <= x_max; ++x) {
    const double phi = std::pow(x >= 0 ? f.right : f.left, x);
    state.weights[static_cast<std::size_t>(x - x_min)] = phi * phi;
    total += phi * phi;
  }
  for (double& w : state.weights) w /= total;
  state.xi_right = -1.0 / std::log(f.right);
  state.xi_left = 1.0 / std::log(f.left);
  return state;
}

double analytic_wd_residual(double eta, int n_sites) {
  const DomainWallProfile profile{WallModel::kWD, -eta, eta, std::nullopt};
  const int wall = profile.wall_site(n_sites);
  const HermitianOperator h = build_wd_wall(profile, n_sites);
  const DecayFactors f = wd_wall_decay_factors(eta);

  ComplexVector psi(2 * n_sites);
  for (int site = 0; site < n_sites; ++site) {
    const int x = site - wall;
    const double phi = std::pow(x >= 0 ? f.right : f.left, x);
    psi[2 * site] = psi[2 * site + 1] = phi;
  }
  psi.normalize();
  const ComplexVector r = h.matrix * psi;

  // The wall bond and the two chain ends (where the open boundary truncates the stencil) are skipped.
  double worst = 0.0;
  for (int site = 1; site + 1 < n_sites; ++site) {
    const int x = site - wall;
    if (x == -1 || x == 0) continue;
    worst = std::max(worst, std::hypot(std::abs(r[2 * site]), std::abs(r[2 * site + 1])));
  }
  return worst;
}

LocalizationFit fit_localization_length(std::span<const double> amplitudes, int wall_position) {
  const auto n = static_cast<int>(amplitudes.size());
  require_wall(wall_position, n);
  const int end_margin = static_cast<int>(std::ceil(kEndExclusion * n));

  std::vector<double> dl, yl, dr, yr;
  for (int site = end_margin; site < n - end_margin; ++site) {
    const double a = amplitudes[static_cast<std::size_t>(site)];
    if (!(a > kFitAmplitudeFloor)) continue;
    const int x = site - wall_position;
    if (x >= kWallExclusion) {
      dr.push_back(x);
      yr.push_back(std::log(a));
    } else if (x < -kWallExclusion) {
      dl.push_back(-x);
      yl.push_back(std::log(a));
    }
  }
  const auto left = fitted_slope(dl, yl);
  const auto right = fitted_slope(dr, yr);
  if (!left || !right) {
    throw Error(ErrorCode::kFit, "need at least " + std::to_string(kMinFitPoints) + " usable sites per side (" +
                                     std::to_string(dl.size()) + " left, " + std::to_string(dr.size()) + " right)");
  }
  if (!(*left < 0.0) || !(*right < 0.0)) throw Error(ErrorCode::kFit, "amplitude does not decay away from the wall");
  return {-1.0 / *left, -1.0 / *right};
}

ComplexVector most_wall_localized(const ComplexMatrix& subspace, int components_per_site, int wall_position) {
  RealVector distance2(subspace.rows());
  for (Eigen::Index i = 0; i < subspace.rows(); ++i) {
    const double d = static_cast<double>(i / components_per_site - wall_position);
    distance2[i] = d * d;
  }
  ComplexMatrix spread = subspace.adjoint() * distance2.asDiagonal() * subspace;
  spread = 0.5 * (spread + spread.adjoint()).eval();
  const HermitianEigen es = eigh(spread);
  ComplexVector psi = subspace * es.vectors.col(0);
  psi.normalize();
  return psi;
}

BoundState extract_wall_state(const HermitianOperator& h, int components_per_site, int wall_position,
                              double max_energy) {
  const HermitianEigen es = eigh(h.matrix);
  std::vector<Eigen::Index> picked;
  Eigen::Index closest = 0;
  for (Eigen::Index i = 0; i < es.values.size(); ++i) {
    if (std::abs(es.values[i]) < max_energy) picked.push_back(i);
    if (std::abs(es.values[i]) < std::abs(es.values[closest])) closest = i;
  }
  if (picked.empty()) picked.push_back(closest);

  ComplexMatrix subspace(h.dim(), static_cast<Eigen::Index>(picked.size()));
  double energy = 0.0;
  for (std::size_t c = 0; c < picked.size(); ++c) {
    subspace.col(static_cast<Eigen::Index>(c)) = es.vectors.col(picked[c]);
    energy = std::max(energy, std::abs(es.values[picked[c]]));
  }
  return bound_state_from(most_wall_localized(subspace, components_per_site, wall_position), components_per_site,
                          wall_position, energy);
}

BoundState extract_floquet_wall_state(const FloquetDrive& drive, int wall_position, double target, double tol) {
  const FloquetEigensystem es =
      solve_floquet(drive.h0.real(), drive.h1.real(), drive.theta0, drive.theta1, true);
  std::vector<Eigen::Index> picked;
  double energy = 0.0;
  for (std::size_t i = 0; i < es.quasienergies.size(); ++i) {
    const double d = wrap_distance(es.quasienergies[i], target);
    if (d < tol) {
      picked.push_back(static_cast<Eigen::Index>(i));
      energy = std::max(energy, d);
    }
  }
  if (picked.empty()) {
    throw Error(ErrorCode::kFit, "no Floquet states within " + std::to_string(tol) + " of " + std::to_string(target));
  }
  ComplexMatrix subspace(es.states.rows(), static_cast<Eigen::Index>(picked.size()));
  for (std::size_t c = 0; c < picked.size(); ++c) subspace.col(static_cast<Eigen::Index>(c)) = es.states.col(picked[c]);
  return bound_state_from(most_wall_localized(subspace, 1, wall_position), 1, wall_position, energy);
}

}  // namespace floqlat
