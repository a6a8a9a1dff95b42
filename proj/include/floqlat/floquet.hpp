#pragma once

#include <optional>
#include <vector>

#include "floqlat/lattice_models.hpp"
#include "floqlat/parallel.hpp"
#include "floqlat/spectrum.hpp"

namespace floqlat {

struct UnitaryOperator {
  ComplexMatrix matrix;

  Eigen::Index dim() const { return matrix.rows(); }
  double unitarity_error() const { return floqlat::unitarity_error(matrix); }
};

inline constexpr double kUnitarityTolerance = 1e-10;
inline constexpr double kEigenModulusTolerance = 1e-6;

enum class Phase { kTrivial, kZero, kPi, kZeroPi };

const char* phase_name(Phase phase);

struct PhaseLabel {
  Phase label = Phase::kTrivial;
  int n_zero_modes = 0;
  int n_pi_modes = 0;
};

enum class ModeKind { kZero, kPi };

struct EdgeModeReport {
  ModeKind kind = ModeKind::kZero;
  double quasienergy = 0.0;
  double ipr = 0.0;
  double edge_weight = 0.0;
};

struct EdgeModeOptions {
  double tol_mode = 0.05;
  double min_edge_weight = 0.5;
  // Fraction of the chain, counted from each end, that makes up the edge.
  double edge_fraction = 0.1;
};

// U_F = exp(-i theta1 H1) exp(-i theta0 H0).
UnitaryOperator build_floquet(const DriveParams& params);
UnitaryOperator build_floquet(const HermitianOperator& h0, const HermitianOperator& h1, double theta0,
                              double theta1);

// Quasienergies eps = -arg(lambda) of a unitary through the general
// (non-Hermitian) eigensolver. Throws kNotUnitary when |lambda| drifts from 1.
QuasienergySpectrum quasienergies(const UnitaryOperator& u);

// Eigen-decomposition of U_F for real symmetric generators.
//
// The symmetrized operator V = e^{-i theta0 H0 / 2} e^{-i theta1 H1} e^{-i theta0 H0 / 2}
// is similar to U_F, complex symmetric and unitary, so C = Re V and S = Im V
// are commuting real symmetric matrices with joint eigenvalues
// (cos eps, -sin eps). C is diagonalized, S is diagonalized inside each
// cluster of (nearly) degenerate C eigenvalues, and eps follows from atan2.
// Eigenstates of U_F are recovered as e^{+i theta0 H0 / 2} applied to those of V.
struct FloquetEigensystem {
  std::vector<double> quasienergies;  // unsorted, paired with columns of states
  ComplexMatrix states;               // empty unless requested
};

FloquetEigensystem solve_floquet(const RealMatrix& h0, const RealMatrix& h1, double theta0, double theta1,
                                 bool want_states);

// Spectrum of build_floquet(params) via solve_floquet.
QuasienergySpectrum floquet_spectrum(const DriveParams& params);

// exp(-i t H) for a real symmetric H made of disjoint two-site bonds (no
// diagonal, at most one partner per site); std::nullopt otherwise.
std::optional<ComplexMatrix> bond_dimer_propagator(const RealMatrix& h, double t);

// +eps(k) >= 0 of the bulk PBC dispersion for general (theta0, theta1).
double analytic_dispersion_general(double theta0, double theta1, double k);
// +eps(k) on the theta0 = pi/4 line, eta = theta1 - pi/4.
double analytic_dispersion_line(double eta, double k);

// Both branches +-eps(k) over the PBC momentum grid k = pi j / n_cells.
QuasienergySpectrum analytic_spectrum(double theta0, double theta1, int n_cells);

struct PiPairing {
  bool paired = false;
  double mismatch = 0.0;
};

// Compares {eps} with {fold(pi - eps)} under optimal sorted matching.
PiPairing check_pi_pairing(const QuasienergySpectrum& spectrum, double tol);

struct BulkGaps {
  double zero = 0.0;  // min_k |eps(k)|
  double pi = 0.0;    // min_k (pi - |eps(k)|)
};

BulkGaps bulk_gaps(double theta0, double theta1, int k_samples = 4096);

// Fraction of a normalized state's weight on the outer edge_fraction of the
// chain at each end; the IPR of the same state.
double edge_weight(const ComplexVector& state, double edge_fraction);
double inverse_participation_ratio(const ComplexVector& state);

std::vector<EdgeModeReport> find_edge_modes(const DriveParams& params, const EdgeModeOptions& options = {});

// Forces OBC. Throws kGapless when a bulk gap is below 4 * tol_mode or the
// mode counts do not match any of the four phases.
PhaseLabel classify_phase(const DriveParams& params, const EdgeModeOptions& options = {});

struct PhaseCell {
  double theta0 = 0.0;
  double theta1 = 0.0;
  std::optional<PhaseLabel> label;  // empty on (or too close to) a phase boundary
};

// grid_n x grid_n cells spanning [lo, hi]^2, row-major with theta1 as the
// slow index.
std::vector<PhaseCell> scan_phase_diagram(int grid_n, int n_cells, double lo, double hi,
                                          Execution execution = Execution::kParallel,
                                          const EdgeModeOptions& options = {});

}  // namespace floqlat
