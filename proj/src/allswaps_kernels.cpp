#include "circlesort/detail/enumeration.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "circlesort/ranking.hpp"

namespace circlesort::detail {

namespace {

using Map = std::array<std::uint8_t, kMaxRankedSize>;

constexpr std::uint64_t kChunk = 1 << 14;

// max over j of cyc(i -> map[(i + j) mod n])
std::size_t best_shift_cycles(const Map& map, std::size_t n) {
  std::size_t best = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::uint32_t seen = 0;
    std::size_t cycles = 0;
    for (std::size_t start = 0; start < n; ++start) {
      if (seen & (1u << start)) continue;
      ++cycles;
      std::size_t i = start;
      while (!(seen & (1u << i))) {
        seen |= 1u << i;
        std::size_t k = i + j;
        if (k >= n) k -= n;
        i = map[k];
      }
    }
    best = std::max(best, cycles);
  }
  return best;
}

void load(std::uint64_t rank, std::size_t n, Map& map) {
  map[0] = 0;
  unrank_permutation(rank, std::span<std::uint8_t>(map.data() + 1, n - 1));
  for (std::size_t v = 1; v < n; ++v) map[v] += 1;
}

// map[1..n-1] to its lexicographic successor; false after the last one
bool advance(Map& map, std::size_t n) {
  return std::next_permutation(map.begin() + 1, map.begin() + static_cast<std::ptrdiff_t>(n));
}

void check_n(std::size_t n) {
  if (n < 1 || n > kMaxRankedSize) throw std::invalid_argument("n out of range for enumeration");
}

// Calls visit(rank, best_cycles) for every rank in [begin, end).
template <class Visit>
void scan_range(std::size_t n, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  Map map{};
  load(begin, n, map);
  for (std::uint64_t r = begin; r < end; ++r) {
    visit(r, best_shift_cycles(map, n));
    advance(map, n);
  }
}

}  // namespace

std::vector<std::uint32_t> representative(std::size_t n, std::uint64_t rank) {
  check_n(n);
  Map map{};
  load(rank, n, map);
  return std::vector<std::uint32_t>(map.begin(), map.begin() + static_cast<std::ptrdiff_t>(n));
}

MaxTResult max_t_serial(std::size_t n) {
  check_n(n);
  MaxTResult best;
  scan_range(n, 0, factorial(n - 1), [&](std::uint64_t r, std::size_t cycles) {
    const std::size_t t = n - cycles;
    if (t > best.t) best = {t, r};
  });
  return best;
}

MaxTResult max_t_parallel(std::size_t n) {
  check_n(n);
  const std::uint64_t total = factorial(n - 1);
  const auto chunks = static_cast<std::int64_t>((total + kChunk - 1) / kChunk);
  MaxTResult best;

#pragma omp parallel
  {
    MaxTResult local;
#pragma omp for schedule(dynamic)
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
      const std::uint64_t end = std::min(total, begin + kChunk);
      scan_range(n, begin, end, [&](std::uint64_t r, std::size_t cycles) {
        const std::size_t t = n - cycles;
        if (t > local.t || (t == local.t && r < local.rank)) local = {t, r};
      });
    }
#pragma omp critical
    {
      if (local.t > best.t || (local.t == best.t && local.rank < best.rank)) best = local;
    }
  }
  return best;
}

std::vector<std::uint64_t> classes_with_max_cycles_serial(std::size_t n, std::size_t max_cycles) {
  check_n(n);
  std::vector<std::uint64_t> out;
  scan_range(n, 0, factorial(n - 1), [&](std::uint64_t r, std::size_t cycles) {
    if (cycles == max_cycles) out.push_back(r);
  });
  return out;
}

std::vector<std::uint64_t> classes_with_max_cycles_parallel(std::size_t n,
                                                            std::size_t max_cycles) {
  check_n(n);
  const std::uint64_t total = factorial(n - 1);
  const auto chunks = static_cast<std::int64_t>((total + kChunk - 1) / kChunk);
  std::vector<std::uint64_t> out;

#pragma omp parallel
  {
    std::vector<std::uint64_t> local;
#pragma omp for schedule(dynamic) nowait
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
      const std::uint64_t end = std::min(total, begin + kChunk);
      scan_range(n, begin, end, [&](std::uint64_t r, std::size_t cycles) {
        if (cycles == max_cycles) local.push_back(r);
      });
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace circlesort::detail
