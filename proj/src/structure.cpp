#include "duckgrid/structure.hpp"

namespace duckgrid {

SiteOrder SiteOrder::build(const Network& net) {
  SiteOrder o;
  for (const Bus& b : net.buses) {
    auto phs = b.phases.phases();
    for (int i = 0; i < b.phases.count(); ++i) {
      o.bus_phase_pos[{b.id, phs[i]}] = static_cast<int>(o.bus_phase.size());
      o.bus_phase.emplace_back(b.id, phs[i]);
    }
  }
  for (size_t l = 0; l < net.lines.size(); ++l) {
    auto phs = net.lines[l].phases.phases();
    for (int i = 0; i < net.lines[l].phases.count(); ++i) {
      o.line_phase_pos[{static_cast<int>(l), phs[i]}] =
          static_cast<int>(o.line_phase.size());
      o.line_phase.emplace_back(static_cast<int>(l), phs[i]);
    }
  }
  return o;
}

SparseMat incidence_matrix(const Network& net, const SiteOrder& order) {
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(order.line_phase.size() * 2);
  for (size_t r = 0; r < order.line_phase.size(); ++r) {
    auto [l, ph] = order.line_phase[r];
    const Line& ln = net.lines[l];
    trip.emplace_back(static_cast<int>(r), order.bus_phase_pos.at({ln.from, ph}),
                      +1.0);
    trip.emplace_back(static_cast<int>(r), order.bus_phase_pos.at({ln.to, ph}),
                      -1.0);
  }
  SparseMat A(static_cast<int>(order.line_phase.size()),
              static_cast<int>(order.bus_phase.size()));
  A.setFromTriplets(trip.begin(), trip.end());
  return A;
}

SparseMatC impedance_blockmatrix(const Network& net, const SiteOrder& order,
                                 bool per_unit) {
  const double scale = per_unit ? 1.0 / net.base.z_base_ohm() : 1.0;
  std::vector<Eigen::Triplet<Complex>> trip;
  for (size_t l = 0; l < net.lines.size(); ++l) {
    const Line& ln = net.lines[l];
    auto phs = ln.phases.phases();
    const int np = ln.phases.count();
    for (int i = 0; i < np; ++i)
      for (int j = 0; j < np; ++j)
        if (ln.z_ohm[i][j] != Complex(0, 0))
          trip.emplace_back(
              order.line_phase_pos.at({static_cast<int>(l), phs[i]}),
              order.line_phase_pos.at({static_cast<int>(l), phs[j]}),
              ln.z_ohm[i][j] * scale);
  }
  SparseMatC Z(static_cast<int>(order.line_phase.size()),
               static_cast<int>(order.line_phase.size()));
  Z.setFromTriplets(trip.begin(), trip.end());
  return Z;
}

}  // namespace duckgrid
