#pragma once

#include <vector>

#include "duckgrid/network.hpp"

namespace duckgrid {

// Synthetic profile generator parameters. Shapes are per-hour multipliers of
// the per-bus daily-average load; defaults give a residential double peak, a
// midday commercial plateau, a midday solar bell, and an afternoon/evening
// demand-response availability hump.
struct ProfileParams {
  std::vector<double> residential_shape;  // size = horizon, mean 1
  std::vector<double> commercial_shape;   // size = horizon, mean 1
  std::vector<double> solar_shape;        // size = horizon, in [0,1]
  std::vector<double> alpha_base;         // size = horizon, in [0,1]
  double pv_penetration = 0.38;  // sum of nameplate / mean system load
  double alpha_time_var = 0.075; // variance of the per-bus time shift (h^2)
  double alpha_mag_var = 0.1;    // variance of the per-bus magnitude factor

  static ProfileParams defaults(int horizon);
};

// Deterministic in (seed, net, params). Throws ValidationError when the
// penetration target is set but no bus declares a PV device.
ProfileSet generate_profiles(uint64_t seed, const Network& net,
                             const ProfileParams& params);

}  // namespace duckgrid
