#pragma once

#include <map>
#include <vector>

#include "duckgrid/network.hpp"

namespace duckgrid {

struct Range {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x, double tol = 0.0) const {
    return x >= lo - tol && x <= hi + tol;
  }
  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  Range operator+(const Range& o) const { return {lo + o.lo, hi + o.hi}; }
  Range operator-() const { return {-hi, -lo}; }
};

// Pre-processed per-unit variable bounds for the relaxed CI-OPF. Voltage
// boxes are static per bus-phase; current and power boxes are per hour.
struct Bounds {
  using BP = std::pair<int, Phase>;  // (bus id, phase)
  using LP = std::pair<int, Phase>;  // (line index, phase)

  std::map<BP, Range> v_re, v_im;
  std::map<BP, std::vector<Range>> i_re, i_im;  // injection current, per hour
  std::map<BP, std::vector<Range>> p, q;        // net injection, per hour
  std::map<LP, std::vector<Range>> f_re, f_im;  // line flow current, per hour

  // Battery boxes (per-unit power / energy), keyed by bus id.
  struct BatteryBox {
    Range charge, discharge, energy;
  };
  std::map<int, BatteryBox> battery;
};

// Builds finite bounds for every bilinear participant:
//  - voltage components: rectangle enclosing the (magnitude band x angle
//    window) arc around each phase's nominal angle; the PCC bus is pinned to
//    the nominal phasor (reference);
//  - injection currents: component intervals of (P - jQ) e^{j theta} / v over
//    the node's power box, the angle window, and the magnitude band (so
//    |I component| <= S_max / V_min always holds);
//  - flow currents: interval sums of downstream injection intervals along the
//    radial tree.
// Throws ValidationError if the voltage band degenerates (v_min <= 0).
Bounds preprocess_bounds(const Network& net, const ProfileSet& profiles,
                         const BoundsOptions& options);

inline Bounds preprocess_bounds(const Network& net,
                                const ProfileSet& profiles) {
  return preprocess_bounds(net, profiles, net.bounds_options);
}

}  // namespace duckgrid
