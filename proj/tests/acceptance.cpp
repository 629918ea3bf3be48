// One line per acceptance criterion, followed by the failures of any that did
// not pass. Exit status is nonzero if any criterion fails.

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "circlesort/verify.hpp"

using circlesort::verify::CheckResult;
using circlesort::verify::Verifier;

int main() {
  Verifier v;
  const std::vector<std::function<CheckResult()>> criteria = {
      [&] { return v.diameter_formula(11); },
      [&] { return v.constructive_sorter(8, {50, 101, 200}, 10000, 20240601); },
      [&] { return v.lower_bound_witness(10, 8); },
      [&] { return v.allswap_equivalence(8); },
      [&] { return v.t_table(11); },
      [&] { return v.multiplicative_constructions(2000, 12); },
      [&] { return v.probability_bound(30); },
      [&] { return v.general_lower_bound(11); },
      [&] { return v.conjectures(11); },
      [&] { return v.discrepancy(true); },
  };

  std::vector<CheckResult> results;
  for (const auto& run : criteria) {
    results.push_back(run());
    const CheckResult& r = results.back();
    std::printf("[%s] criterion %2d: %s (%.2fs)\n", r.passed ? "PASS" : "FAIL", r.criterion, r.name.c_str(),
                r.seconds);
    std::fflush(stdout);
  }

  int failed = 0;
  for (const CheckResult& r : results) {
    if (r.passed) continue;
    ++failed;
    std::cout << "\ncriterion " << r.criterion << " failures:\n";
    for (const auto& f : r.failures) std::cout << "  " << f << '\n';
  }
  std::cout << '\n' << results.size() - failed << '/' << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
