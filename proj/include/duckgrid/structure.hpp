#pragma once

#include <Eigen/SparseCore>
#include <vector>

#include "duckgrid/network.hpp"

namespace duckgrid {

using SparseMat = Eigen::SparseMatrix<double>;
using SparseMatC = Eigen::SparseMatrix<Complex>;

// Canonical orderings shared by all structural matrices: bus-phase entries
// ordered by (bus position in file, phase a<b<c), line-phase entries by
// (line position in file, phase a<b<c).
struct SiteOrder {
  std::vector<std::pair<int, Phase>> bus_phase;   // (bus id, phase)
  std::vector<std::pair<int, Phase>> line_phase;  // (line index, phase)
  std::map<std::pair<int, Phase>, int> bus_phase_pos;
  std::map<std::pair<int, Phase>, int> line_phase_pos;

  static SiteOrder build(const Network& net);
};

// Edge-by-node incidence over (line,phase) rows and (bus,phase) columns:
// +1 at the from end, -1 at the to end. A*V gives per-line phase voltage
// differences.
SparseMat incidence_matrix(const Network& net, const SiteOrder& order);

// Block-diagonal complex impedance, one block per line over its phases,
// rows/columns aligned with the incidence rows. Values in ohms unless
// per_unit, then divided by the network impedance base.
SparseMatC impedance_blockmatrix(const Network& net, const SiteOrder& order,
                                 bool per_unit);

}  // namespace duckgrid
