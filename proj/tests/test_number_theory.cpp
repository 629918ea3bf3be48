#include <stdexcept>
#include <numeric>

#include "doctest.h"
#include "circlesort/number_theory.hpp"

using namespace circlesort;

namespace {

std::uint64_t brute_order(std::uint64_t a, std::uint64_t m) {
  std::uint64_t x = a % m, k = 1;
  while (x != 1 % m) {
    x = x * a % m;
    ++k;
  }
  return k;
}

bool brute_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("basic arithmetic") {
  CHECK(mod_pow(3, 6, 49) == 43);
  CHECK(mod_pow(2, 64, 1'000'000'007ULL) == 582344008ULL);
  CHECK(ipow(3, 4) == 81);
  CHECK(mod_inverse(3, 7) == 5u);
  CHECK_FALSE(mod_inverse(4, 8).has_value());
  for (std::uint64_t n = 0; n < 500; ++n) CHECK(is_prime(n) == brute_prime(n));
  CHECK(factorize(360) == std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 2}, {5, 1}});
  for (std::uint64_t n = 1; n < 300; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t a = 1; a <= n; ++a) count += std::gcd(a, n) == 1;
    CHECK(euler_phi(n) == count);
  }
  for (std::uint64_t m = 2; m < 120; ++m)
    for (std::uint64_t a = 1; a < m; ++a)
      if (std::gcd(a, m) == 1) CHECK(multiplicative_order(a, m) == brute_order(a, m));
  CHECK_THROWS_AS(multiplicative_order(2, 8), std::domain_error);
}

TEST_CASE("primitive roots") {
  CHECK(primitive_root(3) == 2);
  CHECK(primitive_root(7) == 3);
  CHECK(primitive_root(5) == 2);
  CHECK_THROWS_AS(primitive_root(9), std::domain_error);
  CHECK_THROWS_AS(primitive_root(2), std::domain_error);
  for (std::uint64_t p = 3; p < 400; p += 2) {
    if (!is_prime(p)) continue;
    const std::uint64_t g = primitive_root(p);
    CHECK(brute_order(g, p) == p - 1);
    for (std::uint64_t h = 2; h < g; ++h) CHECK(brute_order(h, p) != p - 1);
  }
}

TEST_CASE("simultaneous generators") {
  CHECK(simultaneous_generator(7) == 3);
  CHECK(simultaneous_generator(5) == 2);
  CHECK(simultaneous_generator(3) == 2);
  for (std::uint64_t p = 3; p < 60; p += 2) {
    if (!is_prime(p)) continue;
    const std::uint64_t g = simultaneous_generator(p);
    for (std::uint64_t q = p; q <= 3000; q *= p) CHECK(brute_order(g % q, q) == euler_phi(q));
  }
}

TEST_CASE("odd generators of (Z/2p^k)^x") {
  CHECK(odd_generator_2pk(3, 1) == 5);
  CHECK(odd_generator_2pk(5, 1) == 7);
  const std::uint64_t g = odd_generator_2pk(3, 2);
  CHECK(g % 2 == 1);
  CHECK(brute_order(g % 18, 18) == 6);
  for (std::uint64_t p : {3u, 5u, 7u, 11u}) {
    for (unsigned k = 1; 2 * ipow(p, k) <= 3000; ++k) {
      const std::uint64_t h = odd_generator_2pk(p, k);
      CHECK(h % 2 == 1);
      for (unsigned j = 1; j <= k; ++j) {
        const std::uint64_t m = 2 * ipow(p, j);
        CHECK(brute_order(h % m, m) == euler_phi(m));
      }
    }
  }
}
