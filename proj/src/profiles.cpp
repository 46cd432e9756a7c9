#include "duckgrid/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "duckgrid/errors.hpp"

namespace duckgrid {

namespace {

std::vector<double> normalized_to_mean_one(std::vector<double> v) {
  double s = 0;
  for (double x : v) s += x;
  const double mean = s / v.size();
  for (double& x : v) x /= mean;
  return v;
}

// Piecewise-linear periodic interpolation of a 24h shape at fractional hours.
double shape_at(const std::vector<double>& shape, double hour) {
  const int n = static_cast<int>(shape.size());
  double h = std::fmod(hour, n);
  if (h < 0) h += n;
  const int i0 = static_cast<int>(std::floor(h));
  const int i1 = (i0 + 1) % n;
  const double f = h - i0;
  return (1 - f) * shape[i0] + f * shape[i1];
}

}  // namespace

ProfileParams ProfileParams::defaults(int horizon) {
  ProfileParams p;
  // Residential: morning shoulder, evening peak near 19h.
  // Commercial: business-hours plateau.
  static const double res24[24] = {0.62, 0.56, 0.53, 0.52, 0.54, 0.62,
                                   0.78, 0.92, 0.95, 0.93, 0.92, 0.93,
                                   0.95, 0.94, 0.96, 1.02, 1.18, 1.40,
                                   1.62, 1.72, 1.60, 1.36, 1.05, 0.78};
  static const double com24[24] = {0.55, 0.52, 0.50, 0.50, 0.52, 0.60,
                                   0.80, 1.05, 1.25, 1.38, 1.44, 1.46,
                                   1.45, 1.44, 1.42, 1.38, 1.30, 1.15,
                                   0.95, 0.82, 0.72, 0.65, 0.60, 0.57};
  p.residential_shape.resize(horizon);
  p.commercial_shape.resize(horizon);
  p.solar_shape.resize(horizon);
  p.alpha_base.resize(horizon);
  for (int t = 0; t < horizon; ++t) {
    const double h = 24.0 * t / horizon;
    p.residential_shape[t] = shape_at(std::vector<double>(res24, res24 + 24), h);
    p.commercial_shape[t] = shape_at(std::vector<double>(com24, com24 + 24), h);
    // Solar bell between 7h and 19h peaking at 13h.
    p.solar_shape[t] =
        (h > 7.0 && h < 19.0) ? std::pow(std::sin(M_PI * (h - 7.0) / 12.0), 2.0)
                              : 0.0;
    // Residential cooling DR availability: afternoon/evening hump.
    p.alpha_base[t] =
        (h > 11.0 && h < 23.0)
            ? 0.25 * std::pow(std::sin(M_PI * (h - 11.0) / 12.0), 2.0)
            : 0.0;
  }
  p.residential_shape = normalized_to_mean_one(p.residential_shape);
  p.commercial_shape = normalized_to_mean_one(p.commercial_shape);
  return p;
}

ProfileSet generate_profiles(uint64_t seed, const Network& net,
                             const ProfileParams& params) {
  const int T = net.horizon;
  auto expect_len = [&](const std::vector<double>& v, const char* what) {
    if (static_cast<int>(v.size()) != T)
      throw ValidationError(std::string("profile param ") + what +
                            " length != horizon");
  };
  expect_len(params.residential_shape, "residential_shape");
  expect_len(params.commercial_shape, "commercial_shape");
  expect_len(params.solar_shape, "solar_shape");
  expect_len(params.alpha_base, "alpha_base");

  ProfileSet ps;
  ps.horizon = T;
  ps.solar_shape = params.solar_shape;
  const double tan_phi = std::tan(std::acos(net.base.pf_load));

  // One RNG stream per bus, keyed by (seed, bus id): draws do not depend on
  // bus ordering or on which other buses exist.
  const double sd_time = std::sqrt(params.alpha_time_var);
  const double sd_mag = std::sqrt(params.alpha_mag_var);

  double total_nameplate = 0.0;
  std::vector<double> system_load(T, 0.0);

  for (const Bus& b : net.buses) {
    const std::vector<double>& shape = (b.kind == BusKind::Commercial)
                                           ? params.commercial_shape
                                           : params.residential_shape;
    for (auto& [ph, avg_kw] : b.load_kw) {
      if (avg_kw <= 0) continue;
      std::vector<double> p(T), q(T);
      for (int t = 0; t < T; ++t) {
        p[t] = avg_kw * shape[t];
        q[t] = p[t] * tan_phi;
        system_load[t] += p[t];
      }
      ps.load_p_kw[{b.id, ph}] = std::move(p);
      ps.load_q_kvar[{b.id, ph}] = std::move(q);
    }

    if (b.flex()) {
      std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + uint64_t(b.id));
      std::normal_distribution<double> gauss(0.0, 1.0);
      const double dt = sd_time > 0 ? sd_time * gauss(rng) : 0.0;
      const double dm = sd_mag > 0 ? sd_mag * gauss(rng) : 0.0;
      std::vector<double> a(T);
      for (int t = 0; t < T; ++t) {
        const double hour = 24.0 * t / T - dt;
        a[t] = std::clamp(shape_at(params.alpha_base, hour * T / 24.0) *
                              (1.0 + dm),
                          0.0, 1.0);
      }
      ps.alpha[b.id] = std::move(a);
    }

    if (const PvSpec* pv = b.pv())
      total_nameplate += pv->capacity_kw_per_phase * b.phases.count();
  }

  if (params.pv_penetration > 0) {
    if (total_nameplate <= 0)
      throw ValidationError(
          "PV penetration target set but no bus declares a PV device");
    double mean_load = 0.0;
    for (double x : system_load) mean_load += x;
    mean_load /= T;
    ps.pv_scale = params.pv_penetration * mean_load / total_nameplate;
  }
  return ps;
}

}  // namespace duckgrid
