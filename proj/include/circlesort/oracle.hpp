#pragma once

// Exact breadth-first search from the trivial element.
//
// Adjacent and AllSwap modes search the (n-1)! rotation classes. A class is
// stored as its canonical arrangement (label 1 at vertex 0) and indexed by the
// lexicographic rank of the labels on vertices 1..n-1.
//
// Affine mode searches all n! permutations of Z_n under the position swaps
// (0 1), (1 2), ..., (n-2 n-1), (n-1 0), indexed by the rank of the map
// i -> p(i). An arrangement enters Affine mode with label n read as residue 0.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "circlesort/core.hpp"

namespace circlesort {

enum class Mode : std::uint8_t { Adjacent = 0, AllSwap = 1, Affine = 2 };

std::string to_string(Mode mode);
/// "adjacent", "allswap" or "affine"; throws std::invalid_argument otherwise.
Mode parse_mode(std::string_view text);

inline constexpr std::uint8_t kUnvisited = 0xff;

struct SearchConfig {
  std::uint64_t max_states = 500'000'000;
  /// Directory for cached tables; no persistence when empty.
  std::optional<std::filesystem::path> cache_dir;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t cap);
  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

/// (n-1)! for class modes, n! for Affine.
std::uint64_t state_count(std::size_t n, Mode mode);

class DistanceTable {
 public:
  /// Takes ownership of a finished distance array. Throws std::invalid_argument
  /// if the array has the wrong length, an unvisited entry, or dist[trivial] != 0.
  DistanceTable(std::size_t n, Mode mode, std::vector<std::uint8_t> dist);

  std::size_t n() const noexcept { return n_; }
  Mode mode() const noexcept { return mode_; }
  std::size_t size() const noexcept { return dist_.size(); }
  std::span<const std::uint8_t> distances() const noexcept { return dist_; }
  std::uint8_t at_rank(std::uint64_t rank) const { return dist_.at(rank); }

  /// histogram()[d] = number of states at distance d.
  const std::vector<std::uint64_t>& histogram() const noexcept { return histogram_; }
  unsigned diameter() const noexcept { return static_cast<unsigned>(histogram_.size() - 1); }

  unsigned distance_of(const Arrangement& a) const;

 private:
  std::size_t n_;
  Mode mode_;
  std::vector<std::uint8_t> dist_;
  std::vector<std::uint64_t> histogram_;
};

/// Index of a class (Adjacent/AllSwap) or of a map on Z_n (Affine) in the table.
std::uint64_t state_rank(const Arrangement& a, Mode mode);

// Kernels. Both produce identical arrays; the serial one is the reference.
std::vector<std::uint8_t> bfs_serial(std::size_t n, Mode mode);
std::vector<std::uint8_t> bfs_parallel(std::size_t n, Mode mode);

/// Cached or freshly computed table. Throws BudgetExceeded when state_count > max_states.
DistanceTable distance_table(std::size_t n, Mode mode, const SearchConfig& cfg = {});

unsigned distance(const Arrangement& a, Mode mode, const SearchConfig& cfg = {});
unsigned diameter(std::size_t n, Mode mode, const SearchConfig& cfg = {});

/// Affine-swap distance of w_{n,k} (i -> k - i mod n) to the identity map.
unsigned affine_distance_w(std::size_t n, std::int64_t k, const SearchConfig& cfg = {});

// Cache files: "CSRT", u16 version, u16 n, u8 mode (little endian), then one byte per state.
inline constexpr std::uint16_t kCacheVersion = 1;
std::filesystem::path cache_file(const std::filesystem::path& dir, std::size_t n, Mode mode);
void save_table(const DistanceTable& table, const std::filesystem::path& file);
/// Throws std::runtime_error on a malformed or inconsistent file.
DistanceTable load_table(const std::filesystem::path& file);

}  // namespace circlesort
