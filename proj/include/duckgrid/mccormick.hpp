#pragma once

#include <array>

#include "duckgrid/errors.hpp"

namespace duckgrid {

// One half-space c_w*w + c_x*x + c_y*y <= rhs over the product triple
// (x, y, w ~ x*y).
struct McPlane {
  double c_w = 0, c_x = 0, c_y = 0, rhs = 0;
  double eval(double x, double y, double w) const {
    return c_w * w + c_x * x + c_y * y - rhs;  // <= 0 when satisfied
  }
};

// Convex-hull envelope of w = x*y over the box [xL,xU] x [yL,yU]:
//   w >= xL*y + yL*x - xL*yL
//   w >= xU*y + yU*x - xU*yU
//   w <= xU*y + yL*x - xU*yL
//   w <= xL*y + yU*x - xL*yU
// Throws ValidationError on an empty or unbounded input interval.
std::array<McPlane, 4> mccormick_planes(double xL, double xU, double yL,
                                        double yU);

// Range of x*y over the box corners (the exact range the envelope permits).
std::pair<double, double> product_range(double xL, double xU, double yL,
                                        double yU);

}  // namespace duckgrid
