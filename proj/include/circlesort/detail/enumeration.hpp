#pragma once

// Enumeration kernels over canonical class representatives (map[0] = 0),
// indexed by the lexicographic rank of map[1..n-1]. Serial versions are the
// reference for the OpenMP ones.

#include <cstdint>
#include <vector>

namespace circlesort::detail {

struct MaxTResult {
  std::size_t t = 0;
  std::uint64_t rank = 0;  // smallest rank attaining t
};

MaxTResult max_t_serial(std::size_t n);
MaxTResult max_t_parallel(std::size_t n);

/// Ranks (ascending) of classes whose best shift has exactly `max_cycles` cycles.
std::vector<std::uint64_t> classes_with_max_cycles_serial(std::size_t n, std::size_t max_cycles);
std::vector<std::uint64_t> classes_with_max_cycles_parallel(std::size_t n, std::size_t max_cycles);

/// Canonical representative for a rank, as a map on 0..n-1.
std::vector<std::uint32_t> representative(std::size_t n, std::uint64_t rank);

}  // namespace circlesort::detail
