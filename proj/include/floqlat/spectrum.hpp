#pragma once

#include <span>
#include <vector>

namespace floqlat {

// Values within this distance below +pi are folded onto -pi, keeping every
// phase in the half-open interval [-pi, pi).
inline constexpr double kFoldTolerance = 1e-12;

double fold_angle(double phase);

// Distance on the circle of circumference 2*pi.
double wrap_distance(double a, double b);

// Sorted (ascending) multiset of dimensionless quasienergies eps*T in [-pi, pi).
struct QuasienergySpectrum {
  std::vector<double> values;

  static QuasienergySpectrum from_unsorted(std::vector<double> raw);
  std::size_t size() const { return values.size(); }
};

// Sorted energies E*T of a static lattice model.
struct EnergySpectrum {
  std::vector<double> values;

  static EnergySpectrum from_unsorted(std::vector<double> raw);
  std::size_t size() const { return values.size(); }
};

// Sorted discrete-time pole frequencies p0*T in [-pi, pi).
struct PoleSpectrum {
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
};

// Bottleneck distance between two equal-length multisets of phases: both
// are sorted and matched index by index under every cyclic rotation, using
// the wrap-aware distance; the smallest of the per-rotation maxima is
// returned. Rotation 0 is the plain ordered-list comparison.
double circular_max_mismatch(std::span<const double> a, std::span<const double> b);

}  // namespace floqlat
