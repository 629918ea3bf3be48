#include "circlesort/ranking.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace circlesort {

namespace {

constexpr std::array<std::uint64_t, kMaxRankedSize + 1> make_factorials() {
  std::array<std::uint64_t, kMaxRankedSize + 1> f{};
  f[0] = 1;
  for (std::size_t i = 1; i <= kMaxRankedSize; ++i) f[i] = f[i - 1] * i;
  return f;
}

constexpr auto kFactorials = make_factorials();

}  // namespace

std::uint64_t factorial(std::size_t m) {
  if (m > kMaxRankedSize) throw std::out_of_range("factorial overflows 64 bits");
  return kFactorials[m];
}

std::uint64_t rank_permutation(std::span<const std::uint8_t> values) {
  const std::size_t m = values.size();
  std::uint32_t unused = (m >= 32) ? ~0u : ((1u << m) - 1u);
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint32_t below = unused & ((1u << values[i]) - 1u);
    rank += static_cast<std::uint64_t>(std::popcount(below)) * kFactorials[m - 1 - i];
    unused &= ~(1u << values[i]);
  }
  return rank;
}

void unrank_permutation(std::uint64_t rank, std::span<std::uint8_t> out) {
  const std::size_t m = out.size();
  std::uint32_t unused = (m >= 32) ? ~0u : ((1u << m) - 1u);
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint64_t f = kFactorials[m - 1 - i];
    auto skip = static_cast<unsigned>(rank / f);
    rank %= f;
    std::uint32_t bits = unused;
    for (unsigned s = 0; s < skip; ++s) bits &= bits - 1;  // drop lowest set bit
    const auto value = static_cast<std::uint8_t>(std::countr_zero(bits));
    out[i] = value;
    unused &= ~(1u << value);
  }
}

}  // namespace circlesort
