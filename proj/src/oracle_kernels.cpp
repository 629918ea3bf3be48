#include <array>
#include <atomic>
#include <bit>
#include <stdexcept>

#include "circlesort/oracle.hpp"
#include "circlesort/ranking.hpp"

namespace circlesort {

namespace {

using State = std::array<std::uint8_t, kMaxRankedSize>;

// Rank of the class whose arrangement is s after rotating label 0 to vertex 0.
std::uint64_t class_rank(const State& s, std::size_t n) {
  std::size_t zero = 0;
  while (s[zero] != 0) ++zero;
  const std::size_t m = n - 1;
  std::uint32_t unused = (1u << m) - 1u;
  std::uint64_t rank = 0;
  for (std::size_t v = 1; v < n; ++v) {
    std::size_t idx = zero + v;
    if (idx >= n) idx -= n;
    const unsigned value = s[idx] - 1u;
    rank += static_cast<std::uint64_t>(std::popcount(unused & ((1u << value) - 1u))) *
            factorial(m - v);
    unused &= ~(1u << value);
  }
  return rank;
}

std::uint64_t affine_rank(const State& s, std::size_t n) {
  return rank_permutation(std::span<const std::uint8_t>(s.data(), n));
}

void load_state(std::uint64_t rank, std::size_t n, Mode mode, State& s) {
  if (mode == Mode::Affine) {
    unrank_permutation(rank, std::span<std::uint8_t>(s.data(), n));
    return;
  }
  s[0] = 0;
  unrank_permutation(rank, std::span<std::uint8_t>(s.data() + 1, n - 1));
  for (std::size_t v = 1; v < n; ++v) s[v] += 1;
}

template <class Visit>
void for_each_neighbor(State& s, std::size_t n, Mode mode, Visit&& visit) {
  auto rank_of = [&]() { return mode == Mode::Affine ? affine_rank(s, n) : class_rank(s, n); };
  if (mode == Mode::AllSwap) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        std::swap(s[i], s[j]);
        visit(rank_of());
        std::swap(s[i], s[j]);
      }
    }
    return;
  }
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t q = (p + 1 == n) ? 0 : p + 1;
    std::swap(s[p], s[q]);
    visit(rank_of());
    std::swap(s[p], s[q]);
  }
}

void check_size(std::size_t n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (n > kMaxRankedSize) throw std::invalid_argument("n too large for 64-bit state ranks");
}

}  // namespace

std::vector<std::uint8_t> bfs_serial(std::size_t n, Mode mode) {
  check_size(n);
  const std::uint64_t count = state_count(n, mode);
  std::vector<std::uint8_t> dist(count, kUnvisited);
  dist[0] = 0;
  std::vector<std::uint64_t> frontier{0};
  std::vector<std::uint64_t> next;
  State s{};
  for (unsigned level = 0; !frontier.empty(); ++level) {
    if (level + 1 >= kUnvisited) throw std::logic_error("distance exceeds one byte");
    next.clear();
    for (std::uint64_t r : frontier) {
      load_state(r, n, mode, s);
      for_each_neighbor(s, n, mode, [&](std::uint64_t nb) {
        if (dist[nb] == kUnvisited) {
          dist[nb] = static_cast<std::uint8_t>(level + 1);
          next.push_back(nb);
        }
      });
    }
    frontier.swap(next);
  }
  return dist;
}

// Level-synchronous: each sweep expands every state at the current level. The
// distance of a state is the first level that reaches it, independent of
// thread interleaving, so the result equals the serial kernel.
std::vector<std::uint8_t> bfs_parallel(std::size_t n, Mode mode) {
  check_size(n);
  const std::uint64_t count = state_count(n, mode);
  std::vector<std::uint8_t> dist(count, kUnvisited);
  dist[0] = 0;
  std::uint8_t* data = dist.data();
  const auto total = static_cast<std::int64_t>(count);

  for (unsigned level = 0;; ++level) {
    if (level + 1 >= kUnvisited) throw std::logic_error("distance exceeds one byte");
    const auto here = static_cast<std::uint8_t>(level);
    const auto there = static_cast<std::uint8_t>(level + 1);
    std::uint64_t discovered = 0;

#pragma omp parallel for schedule(dynamic, 4096) reduction(+ : discovered)
    for (std::int64_t r = 0; r < total; ++r) {
      if (std::atomic_ref<std::uint8_t>(data[r]).load(std::memory_order_relaxed) != here) continue;
      State s{};
      load_state(static_cast<std::uint64_t>(r), n, mode, s);
      for_each_neighbor(s, n, mode, [&](std::uint64_t nb) {
        std::atomic_ref<std::uint8_t> slot(data[nb]);
        std::uint8_t expected = kUnvisited;
        if (slot.load(std::memory_order_relaxed) == kUnvisited &&
            slot.compare_exchange_strong(expected, there, std::memory_order_relaxed)) {
          ++discovered;
        }
      });
    }
    if (discovered == 0) break;
  }
  return dist;
}

}  // namespace circlesort
