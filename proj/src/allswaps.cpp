#include "circlesort/allswaps.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "circlesort/detail/enumeration.hpp"
#include "circlesort/number_theory.hpp"
#include "circlesort/oracle.hpp"
#include "circlesort/probbound.hpp"
#include "circlesort/ranking.hpp"

namespace circlesort {

namespace {

void enforce_budget(std::size_t n, std::uint64_t max_states) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (n > kMaxRankedSize) {
    throw BudgetExceeded(std::numeric_limits<std::uint64_t>::max(), max_states);
  }
  const std::uint64_t required = factorial(n - 1);
  if (required > max_states) throw BudgetExceeded(required, max_states);
}

TnRecord make_record(std::size_t n, const detail::MaxTResult& best) {
  TnRecord rec;
  rec.n = n;
  rec.t_n = best.t;
  rec.argmax_class = Perm(detail::representative(n, best.rank));
  rec.lower_bounds = n >= 2 ? lower_bound_t(n) : std::vector<LowerBound>{};
  rec.is_prime = is_prime(n);
  return rec;
}

}  // namespace

Perm::Perm(std::vector<std::uint32_t> map) : map_(std::move(map)) {
  if (map_.empty()) throw std::invalid_argument("permutation must have at least one point");
  std::vector<bool> seen(map_.size(), false);
  for (std::uint32_t x : map_) {
    if (x >= map_.size() || seen[x]) throw std::invalid_argument("map is not a bijection");
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t n) {
  std::vector<std::uint32_t> map(n);
  std::iota(map.begin(), map.end(), 0u);
  return Perm(std::move(map));
}

Perm Perm::rotation(std::size_t n) {
  std::vector<std::uint32_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = static_cast<std::uint32_t>((i + 1) % n);
  return Perm(std::move(map));
}

Perm Perm::from_arrangement(const Arrangement& a) {
  std::vector<std::uint32_t> map(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) map[v] = a[v] - 1;
  return Perm(std::move(map));
}

Arrangement Perm::to_arrangement() const {
  std::vector<Label> labels(map_.size());
  for (std::size_t v = 0; v < map_.size(); ++v) labels[v] = map_[v] + 1;
  return Arrangement(std::move(labels));
}

Perm Perm::shifted(std::size_t j) const {
  const std::size_t n = size();
  std::vector<std::uint32_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = map_[(i + j) % n];
  return Perm(std::move(map));
}

std::size_t cyc(const Perm& p) { return cycle_type(p).size(); }

std::vector<std::size_t> cycle_type(const Perm& p) {
  const std::size_t n = p.size();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> lengths;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t i = start; !seen[i]; i = p[i]) {
      seen[i] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

CosetReport t_class(const Perm& p) {
  const std::size_t n = p.size();
  CosetReport report{p, std::vector<std::size_t>(n), 0};
  for (std::size_t j = 0; j < n; ++j) report.shift_cycle_counts[j] = cyc(p.shifted(j));
  report.t_value =
      n - *std::max_element(report.shift_cycle_counts.begin(), report.shift_cycle_counts.end());
  return report;
}

TnRecord t_exhaustive(std::size_t n, std::uint64_t max_states) {
  enforce_budget(n, max_states);
  return make_record(n, detail::max_t_parallel(n));
}

TnRecord t_exhaustive_serial(std::size_t n, std::uint64_t max_states) {
  enforce_budget(n, max_states);
  return make_record(n, detail::max_t_serial(n));
}

Perm mult_perm(std::size_t n, std::uint64_t a) {
  if (n < 1 || std::gcd(a % n, static_cast<std::uint64_t>(n)) != 1) {
    throw std::domain_error(std::to_string(a) + " is not a unit modulo " + std::to_string(n));
  }
  std::vector<std::uint32_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = static_cast<std::uint32_t>((a % n) * i % n);
  return Perm(std::move(map));
}

std::optional<std::uint64_t> shift_fixed_point(std::uint64_t n, std::uint64_t a, std::uint64_t j) {
  if (n < 1 || std::gcd(a % n, n) != 1) {
    throw std::domain_error(std::to_string(a) + " is not a unit modulo " + std::to_string(n));
  }
  // (1 - a) i = a j (mod n)
  const std::uint64_t coeff = (n + 1 - a % n) % n;
  const std::uint64_t rhs = (a % n) * (j % n) % n;
  const std::uint64_t g = std::gcd(coeff, n);  // gcd(0, n) = n
  if (rhs % g != 0) return std::nullopt;
  const std::uint64_t m = n / g;
  if (m == 1) return 0;
  const auto inv = mod_inverse((coeff / g) % m, m);
  return (rhs / g) % m * *inv % m;
}

std::vector<LowerBound> lower_bound_t(std::size_t n) {
  if (n < 2) throw std::invalid_argument("lower bounds need n >= 2");
  std::vector<LowerBound> out;
  const auto nn = static_cast<std::int64_t>(n);
  const auto factors = factorize(n);
  if (factors.size() == 1) {
    const auto [p, k] = factors.front();
    if (p != 2) out.push_back({"prime_power", nn - static_cast<std::int64_t>(k) - 1});
    if (p == 2 && k >= 2) out.push_back({"two_power", nn - 2 * static_cast<std::int64_t>(k) + 1});
  } else if (factors.size() == 2 && factors[0] == std::pair<std::uint64_t, unsigned>{2, 1}) {
    const auto k = static_cast<std::int64_t>(factors[1].second);
    out.push_back({"two_pk", nn - 2 * k - 2});
  }
  out.push_back({"general", general_lower_bound(n)});
  return out;
}

ShiftProfile shift_cycle_profile_2pk(std::uint64_t p, unsigned k) {
  const std::uint64_t g = odd_generator_2pk(p, k);
  const std::size_t n = 2 * ipow(p, k);
  const Perm base = mult_perm(n, g);
  ShiftProfile profile;
  profile.even_shift_cycles = cyc(base);
  profile.odd_shift_cycles = cyc(base.shifted(1));
  profile.uniform = true;
  for (std::size_t j = 2; j < n && profile.uniform; ++j) {
    const std::size_t expected = (j % 2 == 0) ? profile.even_shift_cycles : profile.odd_shift_cycles;
    profile.uniform = cyc(base.shifted(j)) == expected;
  }
  return profile;
}

std::vector<PrimeVerdict> check_conjecture_prime(std::size_t n_max, std::uint64_t max_states) {
  std::vector<PrimeVerdict> out;
  for (std::size_t n = 2; n <= n_max; ++n) {
    const TnRecord rec = t_exhaustive(n, max_states);
    PrimeVerdict v;
    v.n = n;
    v.t_n = rec.t_n;
    v.is_prime = rec.is_prime;
    v.attains_n_minus_2 = rec.t_n == n - 2;
    v.consistent = v.attains_n_minus_2 == v.is_prime;
    out.push_back(v);
  }
  return out;
}

StructureVerdict check_conjecture_structure(std::size_t n, std::uint64_t max_states) {
  if (n <= 2) throw std::invalid_argument("structure check needs n > 2");
  enforce_budget(n, max_states);
  StructureVerdict verdict;
  verdict.n = n;
  const std::vector<std::size_t> lemma_type = {n - 1, 1};
  for (std::uint64_t rank : detail::classes_with_max_cycles_parallel(n, 2)) {
    Perm p(detail::representative(n, rank));
    for (std::size_t j = 0; j < n; ++j) {
      if (cycle_type(p.shifted(j)) != lemma_type) verdict.lemma_holds = false;
    }
    // the representative fixes 0, so a multiplicative class is represented by i -> a*i itself
    const std::uint64_t a = p[1];
    bool multiplicative = std::gcd(a, static_cast<std::uint64_t>(n)) == 1;
    for (std::size_t i = 0; i < n && multiplicative; ++i) multiplicative = p[i] == a * i % n;
    verdict.multipliers.push_back(multiplicative ? a : 0);
    if (!multiplicative || !is_prime(n)) verdict.conjecture_holds = false;
    verdict.flagged.push_back(std::move(p));
  }
  return verdict;
}

}  // namespace circlesort
