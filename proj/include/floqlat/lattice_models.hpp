#pragma once

#include <span>
#include <vector>

#include "floqlat/linalg.hpp"

namespace floqlat {

// Periodic identifies site L with site 0; Open drops every bond that would
// wrap around.
enum class BoundaryCondition { kPeriodic, kOpen };

// Configuration of the two-step drive: H0 for a phase theta0 = t0/T, then
// H1 for theta1 = t1/T (T = 1). The chain has 2 * n_cells sites.
struct DriveParams {
  double theta0 = 0.0;
  double theta1 = 0.0;
  int n_cells = 2;
  BoundaryCondition bc = BoundaryCondition::kPeriodic;

  int n_sites() const { return 2 * n_cells; }
  void validate() const;
};

// Static SSH chain with intra-cell hopping v and inter-cell hopping u.
struct SSHParams {
  double u = 0.0;
  double v = 0.0;
  int n_cells = 1;
  BoundaryCondition bc = BoundaryCondition::kPeriodic;

  int n_sites() const { return 2 * n_cells; }
  void validate() const;
};

// Wilson-Dirac chain: mass m, Wilson parameter r, two spinor components per site.
struct WDParams {
  double m = 0.0;
  double r = 0.0;
  int n_sites = 2;
  BoundaryCondition bc = BoundaryCondition::kPeriodic;

  void validate() const;
};

// Dense single-particle Hamiltonian.
struct HermitianOperator {
  ComplexMatrix matrix;

  Eigen::Index dim() const { return matrix.rows(); }
  double hermiticity_error() const { return floqlat::hermiticity_error(matrix); }
  // Real symmetric view; only meaningful when every entry is real.
  RealMatrix real() const { return matrix.real(); }
};

inline constexpr double kHermiticityTolerance = 1e-12;

// Number of H1 bonds for the given chain: n_cells (PBC) or n_cells - 1 (OBC).
int h1_bond_count(const DriveParams& params);

HermitianOperator build_h0(const DriveParams& params);
HermitianOperator build_h1(const DriveParams& params);
// H1 with bond j (sites 2j+1, 2j+2) carrying coeff_profile[j] instead of 2.
HermitianOperator build_h1_scaled(const DriveParams& params, std::span<const double> coeff_profile);

HermitianOperator build_ssh(const SSHParams& params);
// Nearest-neighbour chain with bond i joining sites i and i+1 (the last bond
// wraps to site 0 when its length equals the number of sites).
HermitianOperator build_chain(int n_sites, std::span<const double> bonds);

HermitianOperator build_wd(const WDParams& params);
// Wilson-Dirac chain with site-resolved mass and Wilson parameter. Hopping
// between x and x+1 uses the bond average (R(x) + R(x+1)) / 2.
HermitianOperator build_wd_profile(std::span<const double> mass, std::span<const double> wilson,
                                   BoundaryCondition bc);

// Sublattice operator diag(+1, -1, +1, ...).
RealVector sublattice_chirality(int n_sites);

// Closed forms of the PBC dispersions, used as oracles.
double ssh_dispersion(double u, double v, double k);
double wd_dispersion(double m, double r, double p);

}  // namespace floqlat
