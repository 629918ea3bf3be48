#pragma once

// Small modular-arithmetic toolkit for the multiplicative constructions.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace circlesort {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Inverse of a modulo m, if gcd(a, m) = 1.
std::optional<std::uint64_t> mod_inverse(std::uint64_t a, std::uint64_t m);

bool is_prime(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// Order of a in (Z/mZ)^x. Throws std::domain_error if gcd(a, m) != 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

/// Smallest generator g > 1 of (Z/pZ)^x for an odd prime p.
std::uint64_t primitive_root(std::uint64_t p);

/// Generator of (Z/p^kZ)^x for every k >= 1: the least primitive root g0 if
/// g0^(p-1) != 1 mod p^2, else g0 + p. Verified to generate (Z/p^2Z)^x.
std::uint64_t simultaneous_generator(std::uint64_t p);

/// Odd generator of (Z/2p^jZ)^x for every 1 <= j <= k, verified for each j.
std::uint64_t odd_generator_2pk(std::uint64_t p, unsigned k);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

}  // namespace circlesort
