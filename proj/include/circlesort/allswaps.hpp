#pragma once

// Sorting cyclic permutations when any two labels may be swapped.
//
// A class [pi] is the right coset pi*C_n, where c: i -> i+1 (mod n) and
// (pi*c^j)(i) = pi(i + j). Its sorting time is
//     t([pi]) = n - max_j cyc(pi * c^j).
// An arrangement is read as the map vertex v -> label[v] - 1 on Z_n.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circlesort/core.hpp"
#include "circlesort/oracle.hpp"

namespace circlesort {

class Perm {
 public:
  /// Throws std::invalid_argument unless map is a bijection of 0..n-1, n >= 1.
  explicit Perm(std::vector<std::uint32_t> map);

  static Perm identity(std::size_t n);
  /// The n-cycle c: i -> i + 1 mod n.
  static Perm rotation(std::size_t n);
  static Perm from_arrangement(const Arrangement& a);

  Arrangement to_arrangement() const;
  std::size_t size() const noexcept { return map_.size(); }
  std::uint32_t operator[](std::size_t i) const { return map_[i]; }
  const std::vector<std::uint32_t>& map() const noexcept { return map_; }

  /// pi * c^j, i.e. i -> pi(i + j).
  Perm shifted(std::size_t j) const;

  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint32_t> map_;
};

/// Number of cycles, fixed points included.
std::size_t cyc(const Perm& p);

/// Sorted cycle lengths, longest first.
std::vector<std::size_t> cycle_type(const Perm& p);

struct CosetReport {
  Perm base;
  /// cyc(base * c^j) for j = 0..n-1
  std::vector<std::size_t> shift_cycle_counts;
  std::size_t t_value = 0;
};

CosetReport t_class(const Perm& p);

struct LowerBound {
  std::string source;  // "prime_power", "two_pk", "two_power", "general"
  std::int64_t value = 0;
  friend bool operator==(const LowerBound&, const LowerBound&) = default;
};

struct TnRecord {
  std::size_t n = 0;
  std::size_t t_n = 0;
  /// Lexicographically smallest canonical representative attaining t_n.
  Perm argmax_class = Perm::identity(1);
  std::vector<LowerBound> lower_bounds;
  bool is_prime = false;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 500'000'000;

// Exhaustive t(n) over the (n-1)! classes. Throws BudgetExceeded when (n-1)! > max_states.
TnRecord t_exhaustive(std::size_t n, std::uint64_t max_states = kDefaultEnumerationBudget);
TnRecord t_exhaustive_serial(std::size_t n, std::uint64_t max_states = kDefaultEnumerationBudget);

/// i -> a*i mod n. Throws std::domain_error unless gcd(a, n) = 1.
Perm mult_perm(std::size_t n, std::uint64_t a);

/// Smallest i with (1 - a) i = a j (mod n), i.e. a fixed point of mult_perm(n, a) * c^j.
std::optional<std::uint64_t> shift_fixed_point(std::uint64_t n, std::uint64_t a, std::uint64_t j);

/// Every applicable lower bound on t(n), the general one always last.
std::vector<LowerBound> lower_bound_t(std::size_t n);

struct ShiftProfile {
  std::size_t even_shift_cycles = 0;  // cyc at j = 0
  std::size_t odd_shift_cycles = 0;   // cyc at j = 1
  /// Every even shift has even_shift_cycles and every odd shift odd_shift_cycles.
  bool uniform = false;
};

/// Cycle counts of the shifts of mult_perm(2p^k, odd_generator_2pk(p, k)).
ShiftProfile shift_cycle_profile_2pk(std::uint64_t p, unsigned k);

struct PrimeVerdict {
  std::size_t n = 0;
  std::size_t t_n = 0;
  bool is_prime = false;
  bool attains_n_minus_2 = false;
  bool consistent = false;  // attains_n_minus_2 == is_prime
};

/// t(n) = n - 2 exactly for prime n, for 2 <= n <= n_max.
std::vector<PrimeVerdict> check_conjecture_prime(std::size_t n_max,
                                                 std::uint64_t max_states = kDefaultEnumerationBudget);

struct StructureVerdict {
  std::size_t n = 0;
  /// Canonical representatives whose coset has max cycle count 2.
  std::vector<Perm> flagged;
  /// Multiplier a with flagged[i] = mult_perm(n, a), or 0 if none.
  std::vector<std::uint64_t> multipliers;
  bool lemma_holds = true;       // every coset element of every flagged class has type (n-1, 1)
  bool conjecture_holds = true;  // flagged classes only for prime n, each multiplicative
};

/// Requires n > 2.
StructureVerdict check_conjecture_structure(std::size_t n,
                                            std::uint64_t max_states = kDefaultEnumerationBudget);

}  // namespace circlesort
