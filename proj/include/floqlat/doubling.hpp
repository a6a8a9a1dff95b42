#pragma once

#include "floqlat/floquet.hpp"
#include "floqlat/lattice_models.hpp"
#include "floqlat/spectrum.hpp"

namespace floqlat {

enum class Branch { kPlus, kMinus };

enum class StaticModel { kSSH, kWD };

const char* static_model_name(StaticModel model);

// |E T| values within this distance of 1 are snapped onto +-1 before asin.
inline constexpr double kAsinSnap = 1e-12;

// The eps-tilde half of the PBC spectrum on the theta0 = pi/4 line: both
// branches +-eps(k) for k = pi j / N with N/4 <= j < 3N/4 (N values).
QuasienergySpectrum partition_tilde(const DriveParams& params);

// E T = sin(eps T).
EnergySpectrum sine_transform(const QuasienergySpectrum& tilde);

// u = (1 +- sin 2 eta) / 2, v = 1 - u. Plus is the branch with u > v for eta > 0.
SSHParams solve_ssh_params(double eta, Branch branch = Branch::kPlus);
// m = +-sin 2 eta, R = (1 - m) / 2. Minus is the branch with m < 0 for eta > 0.
WDParams solve_wd_params(double eta, Branch branch = Branch::kMinus);

// Mapped static models for a Floquet chain of n_cells = N cells: the SSH
// chain has N sites, the WD chain N/2 sites. Both use the canonical branch.
SSHParams mapped_ssh_params(double eta, int floquet_cells, BoundaryCondition bc);
WDParams mapped_wd_params(double eta, int floquet_cells, BoundaryCondition bc);

EnergySpectrum static_spectrum_ssh(double eta, int floquet_cells,
                                   BoundaryCondition bc = BoundaryCondition::kPeriodic);
EnergySpectrum static_spectrum_wd(double eta, int floquet_cells,
                                  BoundaryCondition bc = BoundaryCondition::kPeriodic);
EnergySpectrum static_spectrum(StaticModel model, double eta, int floquet_cells, BoundaryCondition bc);

// Each E gives the two discrete-time poles asin(E T) and fold(pi - asin(E T)).
PoleSpectrum double_poles(const EnergySpectrum& energies);

// Wrap-aware maximum difference between two spectra taken as sorted lists.
double compare_spectra(std::span<const double> a, std::span<const double> b);

}  // namespace floqlat
