#pragma once

#include <stdexcept>
#include <string>

namespace duckgrid {

// Error classes map one-to-one onto CLI exit codes.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
  static constexpr int exit_code = 2;
};

struct InfeasibleError : std::runtime_error {
  explicit InfeasibleError(const std::string& msg) : std::runtime_error(msg) {}
  static constexpr int exit_code = 3;
};

struct DivergenceError : std::runtime_error {
  explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
  static constexpr int exit_code = 4;
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
  static constexpr int exit_code = 5;
};

}  // namespace duckgrid
