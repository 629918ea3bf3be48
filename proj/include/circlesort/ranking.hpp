#pragma once

// Lexicographic ranking of permutations of 0..m-1 (Lehmer code in the
// factorial number system). Supports m <= 20 so every rank fits in 64 bits.

#include <cstdint>
#include <span>

namespace circlesort {

inline constexpr std::size_t kMaxRankedSize = 20;

/// m! for m <= 20.
std::uint64_t factorial(std::size_t m);

/// Rank of a permutation of 0..values.size()-1 in lexicographic order.
std::uint64_t rank_permutation(std::span<const std::uint8_t> values);

/// Inverse of rank_permutation; writes out.size() values.
void unrank_permutation(std::uint64_t rank, std::span<std::uint8_t> out);

}  // namespace circlesort
