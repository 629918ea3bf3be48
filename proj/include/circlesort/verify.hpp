#pragma once

// End-to-end verification suites. Each check recomputes its quantities with
// the exhaustive oracles and compares them against the closed forms.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "circlesort/allswaps.hpp"
#include "circlesort/oracle.hpp"

namespace circlesort::verify {

struct CheckResult {
  CheckResult() = default;
  CheckResult(int id, std::string title) : criterion(id), name(std::move(title)) {}

  int criterion = 0;
  std::string name;
  bool passed = true;
  std::vector<std::string> details;
  std::vector<std::string> failures;
  double seconds = 0.0;

  void fail(std::string message);
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

struct MultiplierRow {
  std::uint64_t a = 0;
  std::uint64_t order = 0;
  std::size_t cycles = 0;
  std::size_t t_value = 0;
  std::size_t predicted_t = 0;  // 0 for a = 1, else 11 - (1 + 10 / order)
};

struct DiscrepancyReport {
  std::vector<MultiplierRow> rows;  // every unit a of Z_11
  std::size_t claimed_t_a3 = 9;
  std::size_t computed_t_a3 = 0;
  std::vector<std::uint64_t> multipliers_reaching_claim;
  /// t of the S_12 extension fixing point 12, for a = 3 and a = 2.
  std::size_t claimed_extension_t = 8;
  std::size_t extension_t_a3 = 0;
  std::size_t extension_t_a2 = 0;
  /// Same construction at n = 7, checked against the all-swaps BFS.
  bool small_prime_matches_bfs = false;
  /// Only set when the n = 11 all-swaps BFS fits the budget and was requested.
  std::optional<bool> n11_matches_bfs;
};

/// The S_12 permutation agreeing with mult_perm(11, a) on 1..11 (11 read as 0) and fixing 12.
Perm extend_with_fixed_point(std::uint64_t a);

DiscrepancyReport discrepancy_report(const SearchConfig& cfg, bool bfs_at_11);

class Verifier {
 public:
  explicit Verifier(SearchConfig cfg = {});

  /// 1. BFS diameter equals floor((n-1)^2/4) for n = 1..max_n.
  CheckResult diameter_formula(std::size_t max_n);
  /// 2. sort_cyclic on every arrangement with n <= exhaustive_max_n and on random samples.
  CheckResult constructive_sorter(std::size_t exhaustive_max_n, const std::vector<std::size_t>& random_ns,
                                  std::size_t samples, std::uint64_t seed);
  /// 3. Reversal class distance and affine distances of w_{n,k}.
  CheckResult lower_bound_witness(std::size_t reversal_max_n, std::size_t affine_max_n);
  /// 4. Coset formula equals all-swaps BFS on every class.
  CheckResult allswap_equivalence(std::size_t max_n);
  /// 5. t(n) table against primality and the lower bounds.
  CheckResult t_table(std::size_t max_n);
  /// 6. Cycle counts of the multiplicative constructions.
  CheckResult multiplicative_constructions(std::uint64_t limit, unsigned two_power_max);
  /// 7. Cycle-count probability bound and tail bound.
  CheckResult probability_bound(std::size_t max_n);
  /// 8. t(n) >= n - ceil(e (ln n + 1)).
  CheckResult general_lower_bound(std::size_t max_n);
  /// 9. Both conjectures and the (n-1, 1) lemma.
  CheckResult conjectures(std::size_t max_n);
  /// 10. t of the multiplication permutations on Z_11.
  CheckResult discrepancy(bool bfs_at_11);

  const DistanceTable& table(std::size_t n, Mode mode);
  const TnRecord& t_record(std::size_t n);

 private:
  SearchConfig cfg_;
  std::map<std::pair<std::size_t, Mode>, std::unique_ptr<DistanceTable>> tables_;
  std::map<std::size_t, TnRecord> t_records_;
};

inline constexpr std::string_view kSuites[] = {"upper", "lower", "allswap", "conjectures", "p31"};

/// Runs a named suite; max_n defaults per suite (10, 10, 11, 10, 30).
/// Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(std::string_view suite, std::optional<std::size_t> max_n,
                      const SearchConfig& cfg = {}, std::size_t samples = 10000);

}  // namespace circlesort::verify
