#pragma once

// Constructive sorting of a cyclic arrangement by adjacent swaps within
// floor((n-1)^2 / 4) moves.
//
// Labels are split into "small" (the lower half) and "large". The circle is
// cut into two arcs A1, A2 with prescribed small/large counts. Two candidate
// processes gather the small labels of each arc either at its top end or at
// its bottom end, so the smalls form one contiguous block; each block is then
// bubble sorted. The cheaper process is emitted.
//
// Orientation: A1 runs clockwise from its top vertex a1_start to its bottom
// vertex. A2 follows A1 clockwise, from its bottom vertex to its top vertex,
// which is adjacent to A1's top. The top half of the circle is therefore the
// clockwise tail of A2 followed by the clockwise head of A1.

#include <array>
#include <cstdint>
#include <vector>

#include "circlesort/core.hpp"

namespace circlesort {

/// n = 4m (A), 4m+2 (B), 4m+1 (C), 4m+3 (D).
enum class Case : std::uint8_t { A, B, C, D };

struct CaseTag {
  Case tag = Case::A;
  std::size_t m = 0;

  std::size_t n() const noexcept;
  friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

CaseTag case_of(std::size_t n);

/// floor((n-1)^2 / 4), the adjacent-swap diameter of the class graph.
std::uint64_t f_formula(std::uint64_t n);

struct ArcSplit {
  std::size_t a1_start = 0;
  std::size_t a1_len = 0;
  std::size_t a2_len = 0;
  /// Labels <= small_threshold are small.
  Label small_threshold = 0;
  /// (#small in A1, #large in A1, #small in A2, #large in A2)
  std::array<std::size_t, 4> counts{};

  std::size_t n() const noexcept { return a1_len + a2_len; }
  std::size_t a2_start() const noexcept { return (a1_start + a1_len) % n(); }
};

/// First clockwise window (from vertex 0) with the case's small/large counts.
/// For n = 4m+3 only windows avoiding the vertex that holds label n are scanned.
/// Requires n >= 4. Throws std::logic_error if no window qualifies.
ArcSplit find_balanced_split(const Arrangement& a);

enum class Direction : std::uint8_t { Top, Bottom };

struct ProcessPlan {
  Direction direction = Direction::Top;
  std::size_t shift_cost = 0;
  std::size_t residual_cost = 0;
  SwapSequence shift_moves;
  SwapSequence residual_moves;
  /// Clockwise label order of the small and large blocks after the shift.
  std::vector<Label> small_block;
  std::vector<Label> large_block;

  std::size_t total_cost() const noexcept { return shift_cost + residual_cost; }
};

/// Throws std::invalid_argument when split does not describe a.
ProcessPlan plan(const Arrangement& a, const ArcSplit& split, Direction direction);

/// Adjacent-swap sequence taking a to the trivial class, of length <= f_formula(n).
/// Arrangements with n <= 3 are solved by exhaustive search.
SwapSequence sort_cyclic(const Arrangement& a);

std::size_t circular_distance(std::size_t n, std::size_t i, std::size_t j);

/// Vertex i carries the residue (k - i) mod n, with residue 0 written as label n.
Arrangement w_perm(std::size_t n, std::int64_t k);

/// Sorted gaps d(i, w(i)) of the involution i -> k - i on Z_n.
std::vector<std::size_t> gap_multiset(std::size_t n, std::int64_t k);

/// Lower bound on affine-swap sorting of w_{n,k} for even n.
/// Throws std::domain_error for odd n.
std::uint64_t n_lower_table(std::size_t n, std::int64_t k);

}  // namespace circlesort
