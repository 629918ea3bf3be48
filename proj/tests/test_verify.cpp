#include "doctest.h"
#include "circlesort/verify.hpp"

using namespace circlesort;

TEST_CASE("suites run and pass at small sizes") {
  for (auto suite : verify::kSuites) {
    const verify::SuiteResult r = verify::run_suite(suite, 7, {}, 200);
    CHECK(r.suite == suite);
    CHECK_FALSE(r.checks.empty());
    for (const auto& c : r.checks) {
      INFO(c.name);
      CHECK(c.passed);
      CHECK(c.failures.empty());
    }
    CHECK(r.passed());
  }
  CHECK_THROWS_AS(verify::run_suite("nope", std::nullopt), std::invalid_argument);
}

TEST_CASE("a failing check marks the suite") {
  verify::SuiteResult r{"x", {}};
  verify::CheckResult c(1, "c");
  r.checks.push_back(c);
  CHECK(r.passed());
  c.fail("broken");
  CHECK_FALSE(c.passed);
  r.checks.push_back(c);
  CHECK_FALSE(r.passed());
}

TEST_CASE("multiplier table on Z_11") {
  const verify::DiscrepancyReport d = verify::discrepancy_report({}, false);
  REQUIRE(d.rows.size() == 10);
  for (const auto& row : d.rows) {
    std::uint64_t order = 1;
    for (std::uint64_t x = row.a; x != 1; x = x * row.a % 11) ++order;
    CHECK(row.order == order);
    CHECK(row.cycles == 1 + 10 / order);
    CHECK(row.t_value == (row.a == 1 ? 0 : 10 - 10 / order));
  }
  CHECK(d.computed_t_a3 == 8);
  CHECK(d.multipliers_reaching_claim == std::vector<std::uint64_t>{2, 6, 7, 8});
  CHECK(d.small_prime_matches_bfs);
  CHECK_FALSE(d.n11_matches_bfs.has_value());
  CHECK(verify::extend_with_fixed_point(3).size() == 12);
}
