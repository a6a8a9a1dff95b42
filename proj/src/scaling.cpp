#include "floqlat/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "floqlat/domain_wall.hpp"
#include "floqlat/error.hpp"

namespace floqlat {
namespace {

EnergySpectrum static_wall_spectrum(StaticModel target, double eta, int n_cells) {
  const DomainWallProfile profile{target == StaticModel::kSSH ? WallModel::kSSH : WallModel::kWD, -eta, eta,
                                  std::nullopt};
  const HermitianOperator h =
      target == StaticModel::kSSH ? build_ssh_wall(profile, n_cells / 2) : build_wd_wall(profile, n_cells / 2);
  const RealVector e = eigvalsh(h.matrix);
  return EnergySpectrum::from_unsorted({e.data(), e.data() + e.size()});
}

}  // namespace

const char* scaling_config_name(ScalingConfig config) {
  switch (config) {
    case ScalingConfig::kOpen: return "obc";
    case ScalingConfig::kDomainWall: return "wall";
    case ScalingConfig::kPeriodic: return "pbc";
  }
  return "unknown";
}

std::vector<int> default_scaling_sizes() { return {100, 200, 300, 400, 500, 600, 700, 800, 900}; }

double scaling_metric(ScalingConfig config, double eta, StaticModel target, int n_cells) {
  if (n_cells < 4 || n_cells % 4 != 0) {
    throw Error(ErrorCode::kNMod4, "N = " + std::to_string(n_cells) + " must be a positive multiple of 4 (N % 4 == 0)");
  }
  RealMatrix h0, h1;
  double theta1 = kPi / 4 + eta;
  EnergySpectrum energies;
  if (config == ScalingConfig::kDomainWall) {
    const FloquetDrive drive =
        floquet_wall_drive({WallModel::kFloquet, -eta, eta, std::nullopt}, n_cells);
    h0 = drive.h0.real();
    h1 = drive.h1.real();
    theta1 = drive.theta1;
    energies = static_wall_spectrum(target, eta, n_cells);
  } else {
    const BoundaryCondition bc =
        config == ScalingConfig::kOpen ? BoundaryCondition::kOpen : BoundaryCondition::kPeriodic;
    const DriveParams params{kPi / 4, theta1, n_cells, bc};
    h0 = build_h0(params).real();
    h1 = build_h1(params).real();
    energies = static_spectrum(target, eta, n_cells, bc);
  }
  const FloquetEigensystem floquet = solve_floquet(h0, h1, kPi / 4, theta1, false);
  PoleSpectrum poles;
  try {
    poles = double_poles(energies);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kAsinDomain) throw;
    // A static wall can bind a state above the band; it has no pole counterpart.
    throw Error(ErrorCode::kAsinDomain, std::string(static_model_name(target)) + " spectrum at N = " +
                                            std::to_string(n_cells) + " leaves [-1, 1]: " + e.what());
  }
  return compare_spectra(poles.values, floquet.quasienergies);
}

ScalingRun run_scaling(ScalingConfig config, double eta, StaticModel target, const std::vector<int>& sizes,
                       Execution execution) {
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 4 || sizes[i] % 4 != 0) {
      throw Error(ErrorCode::kNMod4,
                  "size " + std::to_string(sizes[i]) + " must be a positive multiple of 4 (N % 4 == 0)");
    }
    if (i > 0 && sizes[i] <= sizes[i - 1]) {
      throw Error(ErrorCode::kInvalidArgument, "sizes must be strictly increasing");
    }
  }
  ScalingRun run{sizes, std::vector<double>(sizes.size(), 0.0), config, eta, target};
  for_each_index(static_cast<int>(sizes.size()), execution, [&](int i) {
    run.metric_values[static_cast<std::size_t>(i)] = scaling_metric(config, eta, target, sizes[i]);
  });
  return run;
}

PowerLawFit fit_power_law(const ScalingRun& run) {
  const std::size_t n = run.sizes.size();
  if (n < 4 || run.metric_values.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "power-law fit needs at least 4 (N, metric) points");
  }
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(run.metric_values[i] > 0.0)) {
      throw Error(ErrorCode::kNonPositive, "metric value at N = " + std::to_string(run.sizes[i]) + " is not positive");
    }
    x[i] = std::log(1.0 / run.sizes[i]);
    y[i] = std::log(run.metric_values[i]);
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  PowerLawFit fit;
  fit.exponent = sxy / sxx;
  fit.prefactor = std::exp(my - fit.exponent * mx);
  double ss_res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (my + fit.exponent * (x[i] - mx));
    ss_res += r * r;
  }
  fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
  return fit;
}

}  // namespace floqlat
