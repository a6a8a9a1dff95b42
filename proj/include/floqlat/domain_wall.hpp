#pragma once

#include <optional>
#include <span>
#include <vector>

#include "floqlat/floquet.hpp"
#include "floqlat/lattice_models.hpp"

namespace floqlat {

enum class WallModel { kFloquet, kSSH, kWD };

const char* wall_model_name(WallModel model);

// A step in eta at wall_position: sites with index < wall_position belong to
// the left region, the rest to the right region. An empty wall_position
// means the chain midpoint. For the Floquet and SSH chains the bond that
// straddles the wall takes the left-region value.
struct DomainWallProfile {
  WallModel model = WallModel::kWD;
  double eta_left = 0.0;
  double eta_right = 0.0;
  std::optional<int> wall_position;

  int wall_site(int n_sites) const { return wall_position.value_or(n_sites / 2); }
};

// A state bound to the wall: per-site probability weights (summing to 1)
// and the localization lengths on either side.
struct BoundState {
  double energy = 0.0;
  int peak_site = 0;
  std::vector<double> weights;
  double xi_left = 0.0;
  double xi_right = 0.0;
};

// Generators and phases of a Floquet drive; consumed by solve_floquet.
struct FloquetDrive {
  HermitianOperator h0;
  HermitianOperator h1;
  double theta0 = 0.0;
  double theta1 = 0.0;
};

// Floquet chain of 2 n_cells sites (OBC) on the theta0 = pi/4 line with
// theta1 = pi/4 + eta_left. Right-region H1 bonds carry
// 2 (pi/4 + eta_right) / (pi/4 + eta_left) instead of 2, which for
// eta_right = -eta_left is 2 (pi/4 - eta) / (pi/4 + eta).
FloquetDrive floquet_wall_drive(const DomainWallProfile& profile, int n_cells);
UnitaryOperator build_floquet_wall(const DomainWallProfile& profile, int n_cells);
double floquet_wall_coefficient(double eta_left, double eta_right);

// SSH chain of 2 n_cells sites (OBC), couplings solve_ssh_params(eta, Plus) per region.
HermitianOperator build_ssh_wall(const DomainWallProfile& profile, int n_cells);

// Wilson-Dirac chain (OBC) with (m, R) = solve_wd_params(eta, Minus) per region.
HermitianOperator build_wd_wall(const DomainWallProfile& profile, int n_sites);

// Closed-form zero mode psi = (1, 1) phi(x) of the WD wall with
// eta_right = eta = -eta_left, phi(x) = (1 + m/R)^x taking the right-region
// (m, R) for x > 0 and the left-region values for x < 0. Weights are
// normalized over x in [x_min, x_max].
BoundState analytic_wd_zero_mode(double eta, int x_min, int x_max);

struct DecayFactors {
  double right = 0.0;  // phi(x+1)/phi(x) for x > 0
  double left = 0.0;   // phi(x+1)/phi(x) for x < 0
};
DecayFactors wd_wall_decay_factors(double eta);

// Max |(h psi)_x| of the analytic zero mode on a WD wall chain of n_sites
// (wall at the midpoint), skipping the two sites whose equations contain
// the wall bond.
double analytic_wd_residual(double eta, int n_sites);

struct LocalizationFit {
  double xi_left = 0.0;
  double xi_right = 0.0;
};

// Least-squares fit of log|amplitude| against distance on each side of the
// wall. Uses sites with amplitude > 1e-10, skipping the two sites nearest
// the wall on each side and 10% of the chain at either end.
LocalizationFit fit_localization_length(std::span<const double> amplitudes, int wall_position);

// Picks the combination of the given (near-degenerate) columns that is most
// concentrated at the wall, by diagonalizing the squared distance from the
// wall inside their span. components_per_site groups vector entries into sites.
ComplexVector most_wall_localized(const ComplexMatrix& subspace, int components_per_site, int wall_position);

// Bound state of a static wall Hamiltonian: eigenstates with |E| < max_energy
// (or the single state closest to zero if none qualify) are localized at the
// wall; energy reports the largest |E| in that set.
BoundState extract_wall_state(const HermitianOperator& h, int components_per_site, int wall_position,
                              double max_energy = 1e-4);

// Floquet wall states with quasienergy within tol of target (0 or pi).
BoundState extract_floquet_wall_state(const FloquetDrive& drive, int wall_position, double target, double tol);

}  // namespace floqlat
