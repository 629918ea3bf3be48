#include <stdexcept>
#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "circlesort/allswaps.hpp"
#include "circlesort/detail/enumeration.hpp"
#include "circlesort/number_theory.hpp"
#include "oracles.hpp"

using namespace circlesort;

namespace {

std::vector<int> as_ints(const Perm& p) { return {p.map().begin(), p.map().end()}; }

bool has_bound(const std::vector<LowerBound>& bounds, const std::string& source, std::int64_t value) {
  return std::find(bounds.begin(), bounds.end(), LowerBound{source, value}) != bounds.end();
}

}  // namespace

TEST_CASE("Perm basics") {
  CHECK_THROWS_AS(Perm({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm({}), std::invalid_argument);
  const Perm c = Perm::rotation(5);
  CHECK(c.map() == std::vector<std::uint32_t>{1, 2, 3, 4, 0});
  const Arrangement a({3, 1, 4, 2});
  CHECK(Perm::from_arrangement(a).map() == std::vector<std::uint32_t>{2, 0, 3, 1});
  CHECK(Perm::from_arrangement(a).to_arrangement() == a);
  CHECK(Perm({2, 0, 3, 1}).shifted(1).map() == std::vector<std::uint32_t>{0, 3, 1, 2});
}

TEST_CASE("cyc") {
  CHECK(cyc(Perm::identity(5)) == 5);
  CHECK(cyc(Perm::rotation(9)) == 1);
  CHECK(cyc(mult_perm(7, 3)) == 2);
  CHECK(cycle_type(mult_perm(7, 6)) == std::vector<std::size_t>{2, 2, 2, 1});
  std::mt19937 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::uint32_t> map(12);
    std::iota(map.begin(), map.end(), 0);
    std::shuffle(map.begin(), map.end(), rng);
    CHECK(cyc(Perm(map)) == static_cast<std::size_t>(oracle::cycles(as_ints(Perm(map)))));
  }
}

TEST_CASE("t_class examples") {
  CHECK(t_class(Perm::identity(6)).t_value == 0);
  for (std::size_t n = 3; n <= 12; ++n) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::uint32_t> map(n);
      std::iota(map.begin(), map.end(), 0);
      std::swap(map[i], map[(i + 1) % n]);
      CHECK(t_class(Perm(map)).t_value == 1);
    }
  }
  const CosetReport r = t_class(mult_perm(11, 2));
  CHECK(r.t_value == 9);
  CHECK(r.shift_cycle_counts.size() == 11);
}

TEST_CASE("t_class agrees with a naive all-swaps BFS") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& [labels, d] : oracle::class_distances(n, true)) {
      const Arrangement a(std::vector<Label>(labels.begin(), labels.end()));
      CHECK(t_class(Perm::from_arrangement(a)).t_value == static_cast<std::size_t>(d));
    }
  }
}

TEST_CASE("t_class is a class invariant") {
  std::mt19937 rng(29);
  for (std::size_t n = 2; n <= 50; ++n) {
    std::vector<Label> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    const Arrangement a(labels);
    const std::size_t t = t_class(Perm::from_arrangement(a)).t_value;
    CHECK(t <= n - 1);
    for (std::size_t r = 0; r < n; ++r) CHECK(t_class(Perm::from_arrangement(a.rotated(r))).t_value == t);
  }
}

TEST_CASE("t_exhaustive") {
  CHECK(t_exhaustive(2).t_n == 0);
  CHECK(t_exhaustive(4).t_n == 1);
  CHECK(t_exhaustive(7).t_n == 5);
  for (std::size_t n = 2; n <= 9; ++n) {
    const TnRecord par = t_exhaustive(n);
    const TnRecord ser = t_exhaustive_serial(n);
    CHECK(par.t_n == ser.t_n);
    CHECK(par.argmax_class == ser.argmax_class);
    CHECK(t_class(par.argmax_class).t_value == par.t_n);
    CHECK(par.argmax_class[0] == 0);
    CHECK(par.is_prime == is_prime(n));
  }
  CHECK_THROWS_AS(t_exhaustive(9, 100), BudgetExceeded);
}

TEST_CASE("enumeration kernels agree") {
  for (std::size_t n = 3; n <= 9; ++n) {
    const auto s = detail::max_t_serial(n);
    const auto p = detail::max_t_parallel(n);
    CHECK(s.t == p.t);
    CHECK(s.rank == p.rank);
    CHECK(detail::classes_with_max_cycles_serial(n, 2) == detail::classes_with_max_cycles_parallel(n, 2));
  }
}

TEST_CASE("mult_perm") {
  CHECK(mult_perm(9, 1) == Perm::identity(9));
  CHECK(cyc(mult_perm(9, 2)) == 3);
  CHECK(cyc(mult_perm(8, 3)) == 5);
  CHECK_THROWS_AS(mult_perm(9, 3), std::domain_error);
}

TEST_CASE("shift_fixed_point") {
  CHECK(shift_fixed_point(7, 3, 1) == 2u);
  CHECK((3 * (2 + 1)) % 7 == 2);
  for (std::uint64_t n : {7u, 9u, 12u, 25u}) {
    for (std::uint64_t a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      CHECK(shift_fixed_point(n, a, 0) == 0u);
      const Perm p = mult_perm(n, a);
      for (std::uint64_t j = 0; j < n; ++j) {
        const Perm s = p.shifted(j);
        std::optional<std::uint64_t> first;
        for (std::uint64_t i = 0; i < n && !first; ++i)
          if (s[i] == i) first = i;
        CHECK(shift_fixed_point(n, a, j) == first);
      }
    }
  }
  CHECK_FALSE(shift_fixed_point(10, 3, 1).has_value());
}

TEST_CASE("lower_bound_t") {
  CHECK(has_bound(lower_bound_t(9), "prime_power", 6));
  CHECK(has_bound(lower_bound_t(8), "two_power", 3));
  CHECK(has_bound(lower_bound_t(18), "two_pk", 12));
  CHECK(lower_bound_t(100).back().source == "general");
  CHECK(lower_bound_t(100).back().value == 84);
}

TEST_CASE("shift_cycle_profile_2pk") {
  auto check = [](std::uint64_t p, unsigned k, std::size_t even, std::size_t odd) {
    const ShiftProfile s = shift_cycle_profile_2pk(p, k);
    CHECK(s.even_shift_cycles == even);
    CHECK(s.odd_shift_cycles == odd);
    CHECK(s.uniform);
  };
  check(3, 1, 4, 3);
  check(3, 2, 6, 5);
  check(5, 1, 4, 3);
}

TEST_CASE("prime conjecture up to 10") {
  for (const PrimeVerdict& v : check_conjecture_prime(10)) {
    CHECK(v.consistent);
    CHECK(v.attains_n_minus_2 == is_prime(v.n));
  }
  CHECK(t_exhaustive(6).t_n < 4);
  CHECK(t_exhaustive(5).t_n == 3);
}

TEST_CASE("structure conjecture and lemma") {
  const StructureVerdict v4 = check_conjecture_structure(4);
  CHECK(v4.flagged.empty());
  CHECK(v4.lemma_holds);
  CHECK(v4.conjecture_holds);
  for (std::size_t n = 3; n <= 9; ++n) {
    const StructureVerdict v = check_conjecture_structure(n);
    CHECK(v.lemma_holds);
    CHECK(v.conjecture_holds);
    for (const Perm& p : v.flagged) {
      for (std::size_t j = 0; j < n; ++j) {
        const Perm s = p.shifted(j);
        std::size_t fixed = 0;
        for (std::size_t i = 0; i < n; ++i) fixed += s[i] == i;
        CHECK(fixed == 1);
      }
    }
  }
  CHECK_THROWS(check_conjecture_structure(2));
}
