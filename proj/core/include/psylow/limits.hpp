#pragma once

#include <cstddef>
#include <cstdint>

namespace psylow {

// Hard ceilings for exhaustive work. Exceeding one raises CapError.
// Both are per-call knobs; the defaults match the CLI defaults.
struct Limits {
  std::uint64_t max_elements = 1'000'000;  // explicit element enumeration
  std::size_t max_subgroups = 200'000;     // distinct subgroups per count
};

// permutation degree ceiling; constructors never exceed it
inline constexpr unsigned kMaxDegree = 1024;

// largest field table the field module will build
inline constexpr unsigned kMaxFieldSize = 512;

}  // namespace psylow
