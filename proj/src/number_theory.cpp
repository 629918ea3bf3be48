#include "circlesort/number_theory.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace circlesort {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

void require_odd_prime(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) {
    throw std::domain_error(std::to_string(p) + " is not an odd prime");
  }
}

}  // namespace

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  std::uint64_t result = 1;
  base %= mod;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

std::optional<std::uint64_t> mod_inverse(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) return std::nullopt;
  const auto mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m == 0 || std::gcd(a, m) != 1) {
    throw std::domain_error(std::to_string(a) + " is not a unit modulo " + std::to_string(m));
  }
  std::uint64_t order = euler_phi(m);
  for (auto [q, e] : factorize(order)) {
    (void)e;
    while (order % q == 0 && mod_pow(a, order / q, m) == 1) order /= q;
  }
  return order;
}

std::uint64_t primitive_root(std::uint64_t p) {
  require_odd_prime(p);
  for (std::uint64_t g = 2; g < p; ++g) {
    if (multiplicative_order(g, p) == p - 1) return g;
  }
  throw std::logic_error("no primitive root modulo " + std::to_string(p));
}

std::uint64_t simultaneous_generator(std::uint64_t p) {
  const std::uint64_t g0 = primitive_root(p);
  const std::uint64_t p2 = p * p;
  const std::uint64_t g = (mod_pow(g0, p - 1, p2) != 1) ? g0 : g0 + p;
  if (multiplicative_order(g, p2) != p * (p - 1)) {
    throw std::logic_error("simultaneous generator check failed for p = " + std::to_string(p));
  }
  return g;
}

std::uint64_t odd_generator_2pk(std::uint64_t p, unsigned k) {
  if (k < 1) throw std::domain_error("k must be at least 1");
  const std::uint64_t g = simultaneous_generator(p);
  const std::uint64_t pk = ipow(p, k);
  const std::uint64_t odd = (g % 2 == 1) ? g : g + pk;
  std::uint64_t pj = 1;
  for (unsigned j = 1; j <= k; ++j) {
    pj *= p;
    const std::uint64_t m = 2 * pj;
    if (multiplicative_order(odd % m, m) != euler_phi(m)) {
      throw std::logic_error("odd generator check failed modulo " + std::to_string(m));
    }
  }
  return odd;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

}  // namespace circlesort
