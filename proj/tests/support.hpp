#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "floqlat/error.hpp"
#include "floqlat/linalg.hpp"

namespace floqlat::test {

inline std::mt19937_64 rng(unsigned seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

// Bloch oracle for the two-step drive: 2x2 product of dimer exponentials at momentum k
// (k measured per site pair, bonds (2j,2j+1) intra and (2j+1,2j+2) inter). Returns |eps|.
inline double bloch_quasienergy(double theta0, double theta1, double k) {
  using C = std::complex<double>;
  Eigen::Matrix2cd h0, h1;
  h0 << 0, 2, 2, 0;
  const C phase = std::exp(C(0, 2 * k));
  h1 << 0, 2.0 * std::conj(phase), 2.0 * phase, 0;
  const auto expm = [](const Eigen::Matrix2cd& h, double t) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(h);
    Eigen::Vector2cd d;
    for (int i = 0; i < 2; ++i) d(i) = std::exp(C(0, -t * es.eigenvalues()(i)));
    return Eigen::Matrix2cd(es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint());
  };
  const Eigen::Matrix2cd u = expm(h1, theta1) * expm(h0, theta0);
  const C lambda = u.eigenvalues()(0);
  return std::abs(std::arg(lambda));
}

// Full PBC spectrum from the Bloch oracle on the grid k = pi j / N, both branches.
inline std::vector<double> bloch_spectrum(double theta0, double theta1, int n_cells) {
  std::vector<double> out;
  for (int j = 0; j < n_cells; ++j) {
    const double e = bloch_quasienergy(theta0, theta1, kPi * j / n_cells);
    out.push_back(e);
    out.push_back(-e);
  }
  return out;
}

inline double sorted_max_diff(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace floqlat::test

#define FLOQLAT_CHECK_ERROR(expr, expected)        \
  do {                                             \
    bool thrown_ = false;                          \
    try {                                          \
      (void)(expr);                                \
    } catch (const ::floqlat::Error& e_) {         \
      thrown_ = true;                              \
      CHECK(e_.code() == (expected));              \
    }                                              \
    CHECK(thrown_);                                \
  } while (0)
