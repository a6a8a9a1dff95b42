#include "floqlat/doubling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "floqlat/error.hpp"

namespace floqlat {
namespace {

constexpr double kLineTolerance = 1e-12;

void require_mod4(int floquet_cells) {
  if (floquet_cells < 4 || floquet_cells % 4 != 0) {
    throw Error(ErrorCode::kNMod4,
                "N = " + std::to_string(floquet_cells) + " must be a positive multiple of 4 (N % 4 == 0)");
  }
}

void require_eta(double eta) {
  if (!(std::abs(eta) <= kPi / 4 + kLineTolerance)) {
    throw Error(ErrorCode::kInvalidArgument, "|eta| must not exceed pi/4");
  }
}

}  // namespace

const char* static_model_name(StaticModel model) { return model == StaticModel::kSSH ? "ssh" : "wd"; }

QuasienergySpectrum partition_tilde(const DriveParams& params) {
  params.validate();
  if (std::abs(params.theta0 - kPi / 4) > kLineTolerance) {
    throw Error(ErrorCode::kNotOnLine, "theta0 must equal pi/4 for the doubling map");
  }
  if (params.bc != BoundaryCondition::kPeriodic) {
    throw Error(ErrorCode::kInvalidArgument, "the eps-tilde partition is defined for periodic chains");
  }
  const int n = params.n_cells;
  require_mod4(n);
  const double eta = params.theta1 - kPi / 4;

  std::vector<double> eps;
  eps.reserve(static_cast<std::size_t>(n));
  for (int j = n / 4; j < 3 * n / 4; ++j) {
    const double e = analytic_dispersion_line(eta, kPi * j / n);
    eps.push_back(e);
    eps.push_back(-e);
  }
  return QuasienergySpectrum::from_unsorted(std::move(eps));
}

EnergySpectrum sine_transform(const QuasienergySpectrum& tilde) {
  std::vector<double> e;
  e.reserve(tilde.size());
  for (double x : tilde.values) e.push_back(std::sin(x));
  return EnergySpectrum::from_unsorted(std::move(e));
}

SSHParams solve_ssh_params(double eta, Branch branch) {
  require_eta(eta);
  const double s = std::sin(2.0 * eta);
  SSHParams p;
  p.u = 0.5 * (1.0 + (branch == Branch::kPlus ? s : -s));
  p.v = 1.0 - p.u;
  return p;
}

WDParams solve_wd_params(double eta, Branch branch) {
  require_eta(eta);
  const double s = std::sin(2.0 * eta);
  WDParams p;
  p.m = branch == Branch::kPlus ? s : -s;
  p.r = 0.5 - 0.5 * p.m;
  return p;
}

SSHParams mapped_ssh_params(double eta, int floquet_cells, BoundaryCondition bc) {
  require_mod4(floquet_cells);
  SSHParams p = solve_ssh_params(eta, Branch::kPlus);
  p.n_cells = floquet_cells / 2;
  p.bc = bc;
  return p;
}

WDParams mapped_wd_params(double eta, int floquet_cells, BoundaryCondition bc) {
  require_mod4(floquet_cells);
  WDParams p = solve_wd_params(eta, Branch::kMinus);
  p.n_sites = floquet_cells / 2;
  p.bc = bc;
  return p;
}

EnergySpectrum static_spectrum_ssh(double eta, int floquet_cells, BoundaryCondition bc) {
  const RealVector e = eigvalsh(build_ssh(mapped_ssh_params(eta, floquet_cells, bc)).real());
  return EnergySpectrum::from_unsorted({e.data(), e.data() + e.size()});
}

EnergySpectrum static_spectrum_wd(double eta, int floquet_cells, BoundaryCondition bc) {
  const RealVector e = eigvalsh(build_wd(mapped_wd_params(eta, floquet_cells, bc)).matrix);
  return EnergySpectrum::from_unsorted({e.data(), e.data() + e.size()});
}

EnergySpectrum static_spectrum(StaticModel model, double eta, int floquet_cells, BoundaryCondition bc) {
  return model == StaticModel::kSSH ? static_spectrum_ssh(eta, floquet_cells, bc)
                                    : static_spectrum_wd(eta, floquet_cells, bc);
}

PoleSpectrum double_poles(const EnergySpectrum& energies) {
  PoleSpectrum poles;
  poles.values.reserve(2 * energies.size());
  for (double e : energies.values) {
    if (!(std::abs(e) <= 1.0 + kAsinSnap)) {
      throw Error(ErrorCode::kAsinDomain, "|E T| = " + std::to_string(std::abs(e)) + " exceeds 1");
    }
    if (std::abs(std::abs(e) - 1.0) <= kAsinSnap) e = std::copysign(1.0, e);
    const double p = std::asin(e);
    poles.values.push_back(fold_angle(p));
    poles.values.push_back(fold_angle(kPi - p));
  }
  std::sort(poles.values.begin(), poles.values.end());
  return poles;
}

double compare_spectra(std::span<const double> a, std::span<const double> b) {
  return circular_max_mismatch(a, b);
}

}  // namespace floqlat
