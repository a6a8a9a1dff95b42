#include "floqlat/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "floqlat/error.hpp"
#include "floqlat/linalg.hpp"

namespace floqlat {

double fold_angle(double phase) {
  double folded = phase - 2.0 * kPi * std::floor((phase + kPi) / (2.0 * kPi));
  if (folded >= kPi - kFoldTolerance) folded -= 2.0 * kPi;
  if (folded < -kPi) folded = -kPi;
  return folded;
}

double wrap_distance(double a, double b) {
  const double d = std::fmod(std::abs(a - b), 2.0 * kPi);
  return std::min(d, 2.0 * kPi - d);
}

QuasienergySpectrum QuasienergySpectrum::from_unsorted(std::vector<double> raw) {
  for (double& v : raw) v = fold_angle(v);
  std::sort(raw.begin(), raw.end());
  return QuasienergySpectrum{std::move(raw)};
}

EnergySpectrum EnergySpectrum::from_unsorted(std::vector<double> raw) {
  std::sort(raw.begin(), raw.end());
  return EnergySpectrum{std::move(raw)};
}

double circular_max_mismatch(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kLengthMismatch, "spectra have lengths " + std::to_string(a.size()) +
                                                " and " + std::to_string(b.size()));
  }
  const std::size_t n = a.size();
  if (n == 0) return 0.0;

  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  for (double& v : sa) v = fold_angle(v);
  for (double& v : sb) v = fold_angle(v);
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());

  double best = std::numeric_limits<double>::infinity();
  for (std::size_t shift = 0; shift < n; ++shift) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n && worst < best; ++i) {
      worst = std::max(worst, wrap_distance(sa[i], sb[(i + shift) % n]));
    }
    best = std::min(best, worst);
  }
  return best;
}

}  // namespace floqlat
