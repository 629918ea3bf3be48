#include "circlesort/oracle.hpp"

#include <algorithm>
#include <array>
#include <fstream>

#include "circlesort/adjsort.hpp"
#include "circlesort/ranking.hpp"

namespace circlesort {

namespace {

constexpr std::array<char, 4> kMagic = {'C', 'S', 'R', 'T'};

void put_u16(std::ostream& os, std::uint16_t v) {
  const char bytes[2] = {static_cast<char>(v & 0xff), static_cast<char>(v >> 8)};
  os.write(bytes, 2);
}

std::uint16_t get_u16(std::istream& is) {
  unsigned char bytes[2] = {0, 0};
  is.read(reinterpret_cast<char*>(bytes), 2);
  return static_cast<std::uint16_t>(bytes[0] | (bytes[1] << 8));
}

void enforce_budget(std::size_t n, Mode mode, const SearchConfig& cfg) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (n > kMaxRankedSize) {
    throw BudgetExceeded(std::numeric_limits<std::uint64_t>::max(), cfg.max_states);
  }
  const std::uint64_t required = state_count(n, mode);
  if (required > cfg.max_states) throw BudgetExceeded(required, cfg.max_states);
}

}  // namespace

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::Adjacent: return "adjacent";
    case Mode::AllSwap: return "allswap";
    case Mode::Affine: return "affine";
  }
  return "unknown";
}

Mode parse_mode(std::string_view text) {
  if (text == "adjacent") return Mode::Adjacent;
  if (text == "allswap") return Mode::AllSwap;
  if (text == "affine") return Mode::Affine;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "'");
}

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t cap)
    : std::runtime_error("search needs " + std::to_string(required) + " states, budget is " +
                         std::to_string(cap)),
      required_(required),
      cap_(cap) {}

std::uint64_t state_count(std::size_t n, Mode mode) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  return mode == Mode::Affine ? factorial(n) : factorial(n - 1);
}

DistanceTable::DistanceTable(std::size_t n, Mode mode, std::vector<std::uint8_t> dist)
    : n_(n), mode_(mode), dist_(std::move(dist)) {
  if (dist_.size() != state_count(n, mode)) {
    throw std::invalid_argument("distance array has the wrong number of states");
  }
  if (dist_.front() != 0) throw std::invalid_argument("trivial state must have distance 0");
  for (std::uint8_t d : dist_) {
    if (d == kUnvisited) throw std::invalid_argument("distance array has unvisited states");
    if (d >= histogram_.size()) histogram_.resize(d + 1, 0);
    ++histogram_[d];
  }
}

unsigned DistanceTable::distance_of(const Arrangement& a) const {
  if (a.size() != n_) throw std::invalid_argument("arrangement size does not match table");
  return dist_[state_rank(a, mode_)];
}

std::uint64_t state_rank(const Arrangement& a, Mode mode) {
  const std::size_t n = a.size();
  if (n > kMaxRankedSize) throw std::invalid_argument("n too large for 64-bit state ranks");
  std::array<std::uint8_t, kMaxRankedSize> values{};
  if (mode == Mode::Affine) {
    for (std::size_t v = 0; v < n; ++v) values[v] = static_cast<std::uint8_t>(a[v] % n);
    return rank_permutation(std::span<const std::uint8_t>(values.data(), n));
  }
  const CyclicPerm cls = canonicalize(a);
  const Arrangement& canon = cls.canon();
  for (std::size_t v = 1; v < n; ++v) values[v - 1] = static_cast<std::uint8_t>(canon[v] - 2);
  return rank_permutation(std::span<const std::uint8_t>(values.data(), n - 1));
}

DistanceTable distance_table(std::size_t n, Mode mode, const SearchConfig& cfg) {
  enforce_budget(n, mode, cfg);
  if (cfg.cache_dir) {
    const auto file = cache_file(*cfg.cache_dir, n, mode);
    if (std::filesystem::exists(file)) {
      try {
        DistanceTable table = load_table(file);
        if (table.n() == n && table.mode() == mode) return table;
      } catch (const std::exception&) {
        // unusable cache entry; recompute and overwrite below
      }
    }
  }
  DistanceTable table(n, mode, bfs_parallel(n, mode));
  if (cfg.cache_dir) {
    std::filesystem::create_directories(*cfg.cache_dir);
    save_table(table, cache_file(*cfg.cache_dir, n, mode));
  }
  return table;
}

unsigned distance(const Arrangement& a, Mode mode, const SearchConfig& cfg) {
  return distance_table(a.size(), mode, cfg).distance_of(a);
}

unsigned diameter(std::size_t n, Mode mode, const SearchConfig& cfg) {
  return distance_table(n, mode, cfg).diameter();
}

unsigned affine_distance_w(std::size_t n, std::int64_t k, const SearchConfig& cfg) {
  return distance_table(n, Mode::Affine, cfg).distance_of(w_perm(n, k));
}

std::filesystem::path cache_file(const std::filesystem::path& dir, std::size_t n, Mode mode) {
  return dir / ("csrt-" + to_string(mode) + "-" + std::to_string(n) + ".bin");
}

void save_table(const DistanceTable& table, const std::filesystem::path& file) {
  std::ofstream os(file, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot write cache file " + file.string());
  os.write(kMagic.data(), kMagic.size());
  put_u16(os, kCacheVersion);
  put_u16(os, static_cast<std::uint16_t>(table.n()));
  os.put(static_cast<char>(table.mode()));
  const auto dist = table.distances();
  os.write(reinterpret_cast<const char*>(dist.data()), static_cast<std::streamsize>(dist.size()));
  if (!os) throw std::runtime_error("failed writing cache file " + file.string());
}

DistanceTable load_table(const std::filesystem::path& file) {
  std::ifstream is(file, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open cache file " + file.string());
  std::array<char, 4> magic{};
  is.read(magic.data(), magic.size());
  if (!is || magic != kMagic) throw std::runtime_error("bad cache magic in " + file.string());
  if (get_u16(is) != kCacheVersion) throw std::runtime_error("unsupported cache version");
  const std::size_t n = get_u16(is);
  const int mode_byte = is.get();
  if (!is || mode_byte < 0 || mode_byte > 2 || n < 1 || n > kMaxRankedSize) {
    throw std::runtime_error("bad cache header in " + file.string());
  }
  const auto mode = static_cast<Mode>(mode_byte);
  std::vector<std::uint8_t> dist(state_count(n, mode));
  is.read(reinterpret_cast<char*>(dist.data()), static_cast<std::streamsize>(dist.size()));
  if (!is || is.peek() != std::char_traits<char>::eof()) {
    throw std::runtime_error("cache file " + file.string() + " has the wrong length");
  }
  try {
    return DistanceTable(n, mode, std::move(dist));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("inconsistent cache file: ") + e.what());
  }
}

}  // namespace circlesort
