#include "floqlat/floquet.hpp"

#include <Eigen/SparseCore>

#include <algorithm>
#include <cmath>
#include <string>

#include "floqlat/error.hpp"
#include "floqlat/parallel.hpp"

namespace floqlat {
namespace {

// C eigenvalues closer than this are diagonalized jointly with S.
constexpr double kClusterTolerance = 1e-8;
constexpr double kArccosSlack = 1e-12;

// exp(-i t H) for H a direct sum of two-site bonds.
struct DimerPropagator {
  std::vector<int> partner;  // -1 for an isolated site
  std::vector<double> angle;  // t * bond weight, per site

  static std::optional<DimerPropagator> from(const RealMatrix& h, double t) {
    const auto n = static_cast<int>(h.rows());
    DimerPropagator out{std::vector<int>(n, -1), std::vector<double>(n, 0.0)};
    for (int a = 0; a < n; ++a) {
      if (h(a, a) != 0.0) return std::nullopt;
      for (int b = 0; b < n; ++b) {
        if (b == a || h(a, b) == 0.0) continue;
        if (out.partner[a] != -1 || h(a, b) != h(b, a)) return std::nullopt;
        out.partner[a] = b;
        out.angle[a] = t * h(a, b);
      }
    }
    return out;
  }

  int size() const { return static_cast<int>(partner.size()); }

  ComplexMatrix dense() const {
    ComplexMatrix m = ComplexMatrix::Identity(size(), size());
    for (int a = 0; a < size(); ++a) {
      if (partner[a] < 0) continue;
      m(a, a) = std::cos(angle[a]);
      m(a, partner[a]) = Complex(0.0, -std::sin(angle[a]));
    }
    return m;
  }

  // m <- P m
  void apply_left(ComplexMatrix& m) const {
    for (int a = 0; a < size(); ++a) {
      const int b = partner[a];
      if (b <= a) continue;
      const double c = std::cos(angle[a]);
      const Complex s(0.0, -std::sin(angle[a]));
      const Eigen::RowVectorXcd ra = m.row(a);
      m.row(a) = c * ra + s * m.row(b);
      m.row(b) = s * ra + c * m.row(b);
    }
  }

  // m <- m P (P is symmetric)
  void apply_right(ComplexMatrix& m) const {
    for (int a = 0; a < size(); ++a) {
      const int b = partner[a];
      if (b <= a) continue;
      const double c = std::cos(angle[a]);
      const Complex s(0.0, -std::sin(angle[a]));
      const ComplexVector ca = m.col(a);
      m.col(a) = c * ca + s * m.col(b);
      m.col(b) = s * ca + c * m.col(b);
    }
  }
};

ComplexMatrix propagator(const RealMatrix& h, double t) {
  if (auto dimer = DimerPropagator::from(h, t)) return dimer->dense();
  return expm_hermitian(h.cast<Complex>(), t);
}

double clamped_acos(double x) {
  if (std::abs(x) > 1.0 + kArccosSlack) {
    throw Error(ErrorCode::kDomain, "arccos argument " + std::to_string(x) + " outside [-1, 1]");
  }
  return std::acos(std::clamp(x, -1.0, 1.0));
}

}  // namespace

const char* phase_name(Phase phase) {
  switch (phase) {
    case Phase::kTrivial: return "Trivial";
    case Phase::kZero: return "Zero";
    case Phase::kPi: return "Pi";
    case Phase::kZeroPi: return "ZeroPi";
  }
  return "Unknown";
}

UnitaryOperator build_floquet(const HermitianOperator& h0, const HermitianOperator& h1, double theta0,
                              double theta1) {
  if (h0.dim() != h1.dim()) throw Error(ErrorCode::kDim, "H0 and H1 differ in dimension");
  return {expm_hermitian(h1.matrix, theta1) * expm_hermitian(h0.matrix, theta0)};
}

UnitaryOperator build_floquet(const DriveParams& params) {
  return build_floquet(build_h0(params), build_h1(params), params.theta0, params.theta1);
}

QuasienergySpectrum quasienergies(const UnitaryOperator& u) {
  const ComplexVector lambda = eigvals(u.matrix);
  std::vector<double> eps(static_cast<std::size_t>(lambda.size()));
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (std::abs(std::abs(lambda[i]) - 1.0) > kEigenModulusTolerance) {
      throw Error(ErrorCode::kNotUnitary,
                  "eigenvalue modulus " + std::to_string(std::abs(lambda[i])) + " deviates from 1");
    }
    eps[i] = -std::arg(lambda[i]);
  }
  return QuasienergySpectrum::from_unsorted(std::move(eps));
}

std::optional<ComplexMatrix> bond_dimer_propagator(const RealMatrix& h, double t) {
  if (auto dimer = DimerPropagator::from(h, t)) return dimer->dense();
  return std::nullopt;
}

FloquetEigensystem solve_floquet(const RealMatrix& h0, const RealMatrix& h1, double theta0, double theta1,
                                 bool want_states) {
  if (h0.rows() != h1.rows() || h0.rows() != h0.cols() || h1.rows() != h1.cols()) {
    throw Error(ErrorCode::kDim, "H0 and H1 must be square and of equal dimension");
  }
  const auto n = h0.rows();

  // V = A B A with A = exp(-i theta0 H0 / 2), B = exp(-i theta1 H1).
  const auto half_step = DimerPropagator::from(h0, 0.5 * theta0);
  ComplexMatrix v = propagator(h1, theta1);
  ComplexMatrix a_dense;
  if (half_step) {
    half_step->apply_left(v);
    half_step->apply_right(v);
  } else {
    a_dense = expm_hermitian(h0.cast<Complex>(), 0.5 * theta0);
    v = a_dense * v * a_dense;
  }

  const RealMatrix c = 0.5 * (v.real() + v.real().transpose());
  const RealMatrix s_dense = 0.5 * (v.imag() + v.imag().transpose());
  const Eigen::SparseMatrix<double> s = s_dense.sparseView(0.0, 0.0);

  const SymmetricEigen ce = eigh(c);
  const RealMatrix s_q = s * ce.vectors;

  FloquetEigensystem out;
  out.quasienergies.resize(static_cast<std::size_t>(n));
  RealMatrix rotated;
  if (want_states) rotated.resize(n, n);

  Eigen::Index begin = 0;
  while (begin < n) {
    Eigen::Index end = begin + 1;
    while (end < n && ce.values[end] - ce.values[end - 1] < kClusterTolerance) ++end;
    const Eigen::Index width = end - begin;
    const auto q = ce.vectors.middleCols(begin, width);
    RealMatrix s_block = q.transpose() * s_q.middleCols(begin, width);
    s_block = 0.5 * (s_block + s_block.transpose()).eval();
    const SymmetricEigen se = eigh(s_block);
    for (Eigen::Index j = 0; j < width; ++j) {
      double cos_eps = 0.0;
      for (Eigen::Index l = 0; l < width; ++l) {
        cos_eps += se.vectors(l, j) * se.vectors(l, j) * ce.values[begin + l];
      }
      out.quasienergies[static_cast<std::size_t>(begin + j)] = std::atan2(-se.values[j], cos_eps);
    }
    if (want_states) rotated.middleCols(begin, width) = q * se.vectors;
    begin = end;
  }

  if (want_states) {
    // Eigenvectors of U_F = A^dagger V A are A^dagger applied to those of V.
    out.states = rotated.cast<Complex>();
    if (half_step) {
      DimerPropagator inverse = *half_step;
      for (double& angle : inverse.angle) angle = -angle;
      inverse.apply_left(out.states);
    } else {
      out.states = a_dense.adjoint() * out.states;
    }
  }
  return out;
}

QuasienergySpectrum floquet_spectrum(const DriveParams& params) {
  const FloquetEigensystem es =
      solve_floquet(build_h0(params).real(), build_h1(params).real(), params.theta0, params.theta1, false);
  return QuasienergySpectrum::from_unsorted(es.quasienergies);
}

double analytic_dispersion_general(double theta0, double theta1, double k) {
  const double a = 2.0 * theta0 + 2.0 * theta1;
  const double b = 2.0 * theta0 - 2.0 * theta1;
  const double x = 0.25 * (std::cos(2.0 * k - a) + 2.0 * std::cos(b) - std::cos(2.0 * k + b) -
                           std::cos(2.0 * k - b) + 2.0 * std::cos(a) + std::cos(2.0 * k + a));
  return clamped_acos(x);
}

double analytic_dispersion_line(double eta, double k) {
  return clamped_acos(-std::cos(2.0 * eta) * std::cos(2.0 * k));
}

QuasienergySpectrum analytic_spectrum(double theta0, double theta1, int n_cells) {
  std::vector<double> eps;
  eps.reserve(2 * static_cast<std::size_t>(n_cells));
  for (int j = 0; j < n_cells; ++j) {
    const double e = analytic_dispersion_general(theta0, theta1, kPi * j / n_cells);
    eps.push_back(e);
    eps.push_back(-e);
  }
  return QuasienergySpectrum::from_unsorted(std::move(eps));
}

PiPairing check_pi_pairing(const QuasienergySpectrum& spectrum, double tol) {
  std::vector<double> partners;
  partners.reserve(spectrum.size());
  for (double e : spectrum.values) partners.push_back(fold_angle(kPi - e));
  const double mismatch = circular_max_mismatch(spectrum.values, partners);
  return {mismatch <= tol, mismatch};
}

BulkGaps bulk_gaps(double theta0, double theta1, int k_samples) {
  BulkGaps gaps{kPi, kPi};
  for (int j = 0; j < k_samples; ++j) {
    const double e = analytic_dispersion_general(theta0, theta1, kPi * j / k_samples);
    gaps.zero = std::min(gaps.zero, e);
    gaps.pi = std::min(gaps.pi, kPi - e);
  }
  return gaps;
}

double edge_weight(const ComplexVector& state, double edge_fraction) {
  const auto n = state.size();
  const auto edge = std::max<Eigen::Index>(1, static_cast<Eigen::Index>(std::ceil(edge_fraction * n)));
  const double norm = state.squaredNorm();
  if (norm == 0.0) return 0.0;
  double w = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i < edge || i >= n - edge) w += std::norm(state[i]);
  }
  return std::min(1.0, w / norm);
}

double inverse_participation_ratio(const ComplexVector& state) {
  const double norm = state.squaredNorm();
  if (norm == 0.0) return 0.0;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < state.size(); ++i) sum += std::pow(std::norm(state[i]), 2);
  return sum / (norm * norm);
}

std::vector<EdgeModeReport> find_edge_modes(const DriveParams& params, const EdgeModeOptions& options) {
  if (params.bc != BoundaryCondition::kOpen) {
    throw Error(ErrorCode::kInvalidArgument, "edge modes need open boundary conditions");
  }
  const FloquetEigensystem es =
      solve_floquet(build_h0(params).real(), build_h1(params).real(), params.theta0, params.theta1, true);

  std::vector<EdgeModeReport> modes;
  for (std::size_t i = 0; i < es.quasienergies.size(); ++i) {
    const double eps = fold_angle(es.quasienergies[i]);
    ModeKind kind;
    if (std::abs(eps) < options.tol_mode) {
      kind = ModeKind::kZero;
    } else if (kPi - std::abs(eps) < options.tol_mode) {
      kind = ModeKind::kPi;
    } else {
      continue;
    }
    const ComplexVector psi = es.states.col(static_cast<Eigen::Index>(i));
    const double weight = edge_weight(psi, options.edge_fraction);
    if (weight < options.min_edge_weight) continue;
    modes.push_back({kind, eps, inverse_participation_ratio(psi), weight});
  }
  std::sort(modes.begin(), modes.end(),
            [](const EdgeModeReport& a, const EdgeModeReport& b) { return a.quasienergy < b.quasienergy; });
  return modes;
}

PhaseLabel classify_phase(const DriveParams& params, const EdgeModeOptions& options) {
  DriveParams open = params;
  open.bc = BoundaryCondition::kOpen;
  open.validate();

  const BulkGaps gaps = bulk_gaps(open.theta0, open.theta1);
  if (std::min(gaps.zero, gaps.pi) < 4.0 * options.tol_mode) {
    throw Error(ErrorCode::kGapless, "bulk gaps (" + std::to_string(gaps.zero) + ", " +
                                         std::to_string(gaps.pi) + ") too small to classify");
  }

  PhaseLabel label;
  for (const EdgeModeReport& mode : find_edge_modes(open, options)) {
    (mode.kind == ModeKind::kZero ? label.n_zero_modes : label.n_pi_modes)++;
  }
  const bool zero = label.n_zero_modes >= 2;
  const bool pi = label.n_pi_modes >= 2;
  if ((!zero && label.n_zero_modes != 0) || (!pi && label.n_pi_modes != 0)) {
    throw Error(ErrorCode::kGapless, "unpaired boundary mode count (" + std::to_string(label.n_zero_modes) +
                                         ", " + std::to_string(label.n_pi_modes) + ")");
  }
  label.label = zero ? (pi ? Phase::kZeroPi : Phase::kZero) : (pi ? Phase::kPi : Phase::kTrivial);
  return label;
}

std::vector<PhaseCell> scan_phase_diagram(int grid_n, int n_cells, double lo, double hi, Execution execution,
                                          const EdgeModeOptions& options) {
  if (grid_n < 2) throw Error(ErrorCode::kInvalidArgument, "phase grid needs at least 2 points per axis");
  const double step = (hi - lo) / (grid_n - 1);
  std::vector<PhaseCell> cells(static_cast<std::size_t>(grid_n) * grid_n);
  for_each_index(static_cast<int>(cells.size()), execution, [&](int idx) {
    PhaseCell& cell = cells[static_cast<std::size_t>(idx)];
    cell.theta0 = lo + step * (idx % grid_n);
    cell.theta1 = lo + step * (idx / grid_n);
    try {
      cell.label = classify_phase({cell.theta0, cell.theta1, n_cells, BoundaryCondition::kOpen}, options);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kGapless) throw;
    }
  });
  return cells;
}

}  // namespace floqlat
