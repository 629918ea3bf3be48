#include <stdexcept>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "circlesort/probbound.hpp"
#include "oracles.hpp"

using namespace circlesort;

namespace {

/// Number of permutations of n points with k cycles, by enumerating S_n.
std::vector<std::uint64_t> cycle_counts_by_enumeration(std::size_t n) {
  std::vector<std::uint64_t> out(n + 1, 0);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do ++out[static_cast<std::size_t>(oracle::cycles(p))];
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// (n-1)! e_{k-1}(1, 1/2, ..., 1/(n-1)).
BigInt stirling_by_symmetric_sum(std::size_t n, std::size_t k) {
  std::vector<Rational> e(n, Rational(0));
  e[0] = 1;
  for (std::size_t j = 1; j < n; ++j) {
    const Rational x(1, static_cast<long>(j));
    for (std::size_t r = j; r >= 1; --r) e[r] += e[r - 1] * x;
  }
  const Rational value = e[k - 1] * Rational(big_factorial(n - 1));
  REQUIRE(denominator(value) == 1);
  return numerator(value);
}

}  // namespace

TEST_CASE("Stirling numbers against enumeration of S_n") {
  CHECK(stirling_first(4, 2) == 11);
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto counts = cycle_counts_by_enumeration(n);
    for (std::size_t k = 0; k <= n; ++k) CHECK(stirling_first(n, k) == counts[k]);
  }
}

TEST_CASE("Stirling numbers against the symmetric-function formula") {
  const StirlingTable table(40);
  for (std::size_t n = 1; n <= 40; ++n) {
    CHECK(table(n, n) == 1);
    CHECK(table(n, 1) == big_factorial(n - 1));
    CHECK(table(n, 0) == 0);
    for (std::size_t k = 1; k <= n; k += 3) CHECK(table(n, k) == stirling_by_symmetric_sum(n, k));
  }
  CHECK_THROWS_AS(table(5, 6), std::out_of_range);
  CHECK_THROWS_AS(table(41, 1), std::out_of_range);
}

TEST_CASE("cycle_prob") {
  for (std::size_t n = 2; n <= 20; ++n) {
    CHECK(cycle_prob(n, n - 1) == Rational(1) / Rational(big_factorial(n)));
    CHECK(cycle_prob(n, 0) == Rational(1, static_cast<long>(n)));
    Rational total = 0;
    for (std::size_t k = 0; k < n; ++k) total += cycle_prob(n, k);
    CHECK(total == 1);
  }
  CHECK(cycle_prob(4, 1) == Rational(11, 24));
}

TEST_CASE("p31 bound") {
  CHECK(p31_bound(4, 1) == doctest::Approx((std::log(3.0) + 1) / 4));
  CHECK(p31_bound(4, 1) >= to_double(cycle_prob(4, 1)));
  for (std::size_t n = 2; n <= 30; ++n) {
    CHECK(p31_bound(n, 0) == doctest::Approx(1.0 / static_cast<double>(n)));
    const BoundCheck at0 = check_p31(n, 0);
    CHECK(at0.holds);
    CHECK(at0.equal);
    for (std::size_t k = 1; k < n; ++k) {
      const BoundCheck c = check_p31(n, k);
      CHECK(c.holds);
      if (n > 2) CHECK_FALSE(c.equal);
    }
  }
  CHECK(check_p31(10, 3).holds);
}

TEST_CASE("tail report") {
  CHECK(tail_k0(100) == 16);
  CHECK(tail_k0(1000) == 22);
  const TailReport r10 = tail_report(10);
  CHECK(r10.below_one_over_n());
  const TailReport r30 = tail_report(30);
  CHECK(r30.below_one_over_n());
  CHECK(r30.exact_within_bound());
  CHECK(tail_report(3).exact_tail == 0);
}

TEST_CASE("general lower bound") {
  CHECK(general_lower_bound(100) == 84);
  CHECK(general_lower_bound(1000) == 978);
  CHECK(general_lower_bound(2) < 0);
  for (std::size_t k = 1; k <= 60; ++k) CHECK(factorial_lower_bound_holds(k));
}
