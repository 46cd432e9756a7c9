#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "duckgrid/errors.hpp"

namespace duckgrid {

enum class Phase : uint8_t { A = 0, B = 1, C = 2 };

inline char phase_char(Phase p) { return "abc"[static_cast<int>(p)]; }

// Nominal phase angle in radians (a = 0, b = -120deg, c = +120deg).
double nominal_angle(Phase p);

// Non-empty subset of {a,b,c}, stored as a 3-bit mask.
class PhaseSet {
 public:
  PhaseSet() = default;
  static PhaseSet parse(const std::string& s);  // e.g. "abc", "b", "ac"
  static PhaseSet all() { return PhaseSet(0b111); }

  void add(Phase p) { mask_ |= (1u << static_cast<int>(p)); }
  bool has(Phase p) const { return mask_ & (1u << static_cast<int>(p)); }
  bool contains(PhaseSet other) const { return (other.mask_ & ~mask_) == 0; }
  bool empty() const { return mask_ == 0; }
  int count() const;
  std::string str() const;

  // Phases in fixed a,b,c order.
  std::array<Phase, 3> phases() const;  // first count() entries valid

  bool operator==(const PhaseSet&) const = default;

 private:
  explicit PhaseSet(uint8_t mask) : mask_(mask) {}
  uint8_t mask_ = 0;
};

}  // namespace duckgrid
