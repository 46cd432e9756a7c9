#include "duckgrid/phase.hpp"

#include <cmath>

namespace duckgrid {

double nominal_angle(Phase p) {
  constexpr double deg120 = 2.0 * M_PI / 3.0;
  switch (p) {
    case Phase::A: return 0.0;
    case Phase::B: return -deg120;
    case Phase::C: return deg120;
  }
  return 0.0;
}

PhaseSet PhaseSet::parse(const std::string& s) {
  PhaseSet ps;
  for (char c : s) {
    switch (c) {
      case 'a': case 'A': ps.add(Phase::A); break;
      case 'b': case 'B': ps.add(Phase::B); break;
      case 'c': case 'C': ps.add(Phase::C); break;
      default:
        throw ValidationError("unknown phase character '" + std::string(1, c) +
                              "' in phase set \"" + s + "\"");
    }
  }
  if (ps.empty()) throw ValidationError("empty phase set \"" + s + "\"");
  return ps;
}

int PhaseSet::count() const {
  return (mask_ & 1) + ((mask_ >> 1) & 1) + ((mask_ >> 2) & 1);
}

std::string PhaseSet::str() const {
  std::string s;
  for (int i = 0; i < 3; ++i)
    if (mask_ & (1u << i)) s += "abc"[i];
  return s;
}

std::array<Phase, 3> PhaseSet::phases() const {
  std::array<Phase, 3> out{Phase::A, Phase::A, Phase::A};
  int k = 0;
  for (int i = 0; i < 3; ++i)
    if (mask_ & (1u << i)) out[k++] = static_cast<Phase>(i);
  return out;
}

}  // namespace duckgrid
