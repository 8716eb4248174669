#pragma once

#include <cstddef>

namespace mrep {

/// Guards for the exponential parts of the library. Exceeding any of them
/// raises Error(CapExceeded); nothing is ever silently truncated.
struct Limits {
  std::size_t max_factors = 20;          // 2^p enumerations
  std::size_t max_oracle_points = 64;    // distinct points handed to the hull oracle
  std::size_t max_oracle_dimension = 6;
  std::size_t max_zonotope_points = 12;  // zonotope detection / subset search
};

}  // namespace mrep
