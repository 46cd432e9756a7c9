#include "duckgrid/mccormick.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace duckgrid {

std::array<McPlane, 4> mccormick_planes(double xL, double xU, double yL,
                                        double yU) {
  if (!(xL <= xU) || !(yL <= yU))
    throw ValidationError("McCormick box is empty or NaN");
  if (!std::isfinite(xL) || !std::isfinite(xU) || !std::isfinite(yL) ||
      !std::isfinite(yU))
    throw ValidationError("McCormick box must be finite");
  // Written as c_w*w + c_x*x + c_y*y <= rhs.
  return {
      McPlane{-1.0, yL, xL, xL * yL},   // w >= xL*y + yL*x - xL*yL
      McPlane{-1.0, yU, xU, xU * yU},   // w >= xU*y + yU*x - xU*yU
      McPlane{+1.0, -yL, -xU, -xU * yL},  // w <= xU*y + yL*x - xU*yL
      McPlane{+1.0, -yU, -xL, -xL * yU},  // w <= xL*y + yU*x - xL*yU
  };
}

std::pair<double, double> product_range(double xL, double xU, double yL,
                                        double yU) {
  const double c[4] = {xL * yL, xL * yU, xU * yL, xU * yU};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

}  // namespace duckgrid
