#include "circlesort/probbound.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace circlesort {

StirlingTable::StirlingTable(std::size_t n_max) : rows_(n_max + 1) {
  rows_[0] = {BigInt(1)};
  for (std::size_t n = 1; n <= n_max; ++n) {
    rows_[n].assign(n + 1, BigInt(0));
    for (std::size_t k = 1; k <= n; ++k) {
      BigInt value = rows_[n - 1][k - 1];
      if (k <= n - 1) value += BigInt(n - 1) * rows_[n - 1][k];
      rows_[n][k] = std::move(value);
    }
  }
}

const BigInt& StirlingTable::operator()(std::size_t n, std::size_t k) const {
  if (n > n_max() || k > n) {
    throw std::out_of_range("Stirling index (" + std::to_string(n) + ", " + std::to_string(k) +
                            ") out of range");
  }
  return rows_[n][k];
}

BigInt stirling_first(std::size_t n, std::size_t k) {
  if (k > n) throw std::out_of_range("k must not exceed n");
  return StirlingTable(n)(n, k);
}

BigInt big_factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

Rational cycle_prob(std::size_t n, std::size_t k) {
  if (n < 1 || k >= n) throw std::out_of_range("cycle_prob needs 0 <= k <= n-1");
  return Rational(stirling_first(n, k + 1), big_factorial(n));
}

double p31_bound(std::size_t n, std::size_t k) {
  if (n < 2) throw std::invalid_argument("p31_bound needs n >= 2");
  const double base = std::log(static_cast<double>(n - 1)) + 1.0;
  return std::exp(static_cast<double>(k) * std::log(base) - std::lgamma(static_cast<double>(k) + 1.0)) /
         static_cast<double>(n);
}

double to_double(const Rational& r) {
  return boost::multiprecision::numerator(r).convert_to<double>() /
         boost::multiprecision::denominator(r).convert_to<double>();
}

BoundCheck check_p31(std::size_t n, std::size_t k) {
  BoundCheck out;
  out.exact = cycle_prob(n, k);
  out.bound = p31_bound(n, k);
  const double exact = to_double(out.exact);
  out.holds = exact <= out.bound * (1.0 + kRelativeMargin);
  out.equal = std::abs(exact - out.bound) <= kRelativeMargin * out.bound;
  return out;
}

std::uint64_t tail_k0(std::size_t n) {
  return static_cast<std::uint64_t>(
      std::ceil(std::numbers::e * (std::log(static_cast<double>(n)) + 1.0)));
}

bool TailReport::below_one_over_n() const {
  return exact_tail < Rational(1, static_cast<long long>(n));
}

bool TailReport::exact_within_bound() const {
  return to_double(exact_tail) <= bound_tail * (1.0 + kRelativeMargin);
}

TailReport tail_report(std::size_t n) {
  if (n < 2) throw std::invalid_argument("tail_report needs n >= 2");
  TailReport r;
  r.n = n;
  r.k0 = tail_k0(n);
  const double k0 = static_cast<double>(r.k0);
  const double nn = static_cast<double>(n);
  r.pk_bound_at_k0 = 1.0 / (nn * std::sqrt(2.0 * std::numbers::pi * k0));

  const StirlingTable table(n);
  BigInt count = 0;
  for (std::size_t c = r.k0 + 1; c <= n; ++c) count += table(n, c);
  r.exact_tail = Rational(count, big_factorial(n));

  const double base = std::log(nn) + 1.0;
  double sum = 0.0;
  for (std::size_t k = r.k0; k + 1 <= n; ++k) {
    sum += std::exp(static_cast<double>(k) * std::log(base) - std::lgamma(static_cast<double>(k) + 1.0)) / nn;
  }
  r.bound_tail = sum;
  const double p_k0 =
      std::exp(k0 * std::log(base) - std::lgamma(k0 + 1.0)) / nn;
  r.geometric_tail = p_k0 / (1.0 - 1.0 / std::numbers::e);
  return r;
}

std::int64_t general_lower_bound(std::size_t n) {
  if (n < 2) throw std::invalid_argument("general bound needs n >= 2");
  return static_cast<std::int64_t>(n) - static_cast<std::int64_t>(tail_k0(n));
}

bool factorial_lower_bound_holds(std::size_t k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const double kk = static_cast<double>(k);
  const double lhs = std::lgamma(kk + 1.0);
  const double rhs = kk * (std::log(kk) - 1.0) + 0.5 * std::log(2.0 * std::numbers::pi * kk);
  return lhs > rhs;
}

}  // namespace circlesort
