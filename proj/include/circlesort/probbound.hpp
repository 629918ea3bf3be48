#pragma once

// Exact cycle-count statistics of uniform random permutations and the bounds
// used for the general lower bound on t(n).
//
// Exact quantities use arbitrary-precision integers and rationals; the
// transcendental bound side is a double. A bound is reported violated only if
// the exact side exceeds it by more than kRelativeMargin.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace circlesort {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr double kRelativeMargin = 1e-9;

/// Unsigned Stirling numbers of the first kind c(n, k), 0 <= k <= n <= n_max.
class StirlingTable {
 public:
  explicit StirlingTable(std::size_t n_max);

  std::size_t n_max() const noexcept { return rows_.size() - 1; }
  /// Throws std::out_of_range unless 0 <= k <= n <= n_max.
  const BigInt& operator()(std::size_t n, std::size_t k) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
};

BigInt stirling_first(std::size_t n, std::size_t k);
BigInt big_factorial(std::size_t n);

/// Probability that a uniform permutation of n points has exactly k+1 cycles.
Rational cycle_prob(std::size_t n, std::size_t k);

/// (ln(n-1) + 1)^k / (n k!), for n >= 2.
double p31_bound(std::size_t n, std::size_t k);

struct BoundCheck {
  Rational exact;
  double bound = 0.0;
  bool holds = false;  // exact <= bound * (1 + margin)
  bool equal = false;  // |exact - bound| <= margin * bound
};

BoundCheck check_p31(std::size_t n, std::size_t k);

/// ceil(e (ln n + 1))
std::uint64_t tail_k0(std::size_t n);

struct TailReport {
  std::size_t n = 0;
  std::uint64_t k0 = 0;
  /// 1 / (n sqrt(2 pi k0)), the closed-form bound on p_{k0}
  double pk_bound_at_k0 = 0.0;
  /// Exact probability of more than k0 cycles.
  Rational exact_tail;
  /// sum_{k = k0}^{n-1} (ln n + 1)^k / (n k!)
  double bound_tail = 0.0;
  /// p_{k0} / (1 - 1/e), the geometric majorant of bound_tail
  double geometric_tail = 0.0;

  bool below_one_over_n() const;
  bool exact_within_bound() const;
};

TailReport tail_report(std::size_t n);

/// n - ceil(e (ln n + 1)); negative values are returned as is.
std::int64_t general_lower_bound(std::size_t n);

/// k! > (k/e)^k sqrt(2 pi k), compared in log space.
bool factorial_lower_bound_holds(std::size_t k);

double to_double(const Rational& r);

}  // namespace circlesort
