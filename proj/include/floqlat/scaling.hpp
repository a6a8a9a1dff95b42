#pragma once

#include <vector>

#include "floqlat/doubling.hpp"
#include "floqlat/parallel.hpp"

namespace floqlat {

// kPeriodic is the control configuration: there the mapping is exact.
enum class ScalingConfig { kOpen, kDomainWall, kPeriodic };

const char* scaling_config_name(ScalingConfig config);

struct ScalingRun {
  std::vector<int> sizes;
  std::vector<double> metric_values;
  ScalingConfig config = ScalingConfig::kOpen;
  double eta = 0.0;
  StaticModel target = StaticModel::kSSH;
};

// metric ~ prefactor * (1/N)^exponent
struct PowerLawFit {
  double exponent = 0.0;
  double prefactor = 0.0;
  double r_squared = 0.0;
};

std::vector<int> default_scaling_sizes();

// Max wrap-aware difference between the Floquet quasienergies of a chain of
// n_cells cells and the doubled poles of the mapped static model in the
// same configuration. The domain wall pairs eta on the left with -eta on
// the right in both models.
double scaling_metric(ScalingConfig config, double eta, StaticModel target, int n_cells);

ScalingRun run_scaling(ScalingConfig config, double eta, StaticModel target, const std::vector<int>& sizes,
                       Execution execution = Execution::kParallel);

PowerLawFit fit_power_law(const ScalingRun& run);

}  // namespace floqlat
