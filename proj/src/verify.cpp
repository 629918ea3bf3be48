#include "circlesort/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "circlesort/adjsort.hpp"
#include "circlesort/detail/enumeration.hpp"
#include "circlesort/number_theory.hpp"
#include "circlesort/probbound.hpp"
#include "circlesort/ranking.hpp"

namespace circlesort::verify {

namespace {

constexpr std::size_t kMaxReportedFailures = 20;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

template <class... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

std::uint64_t shift_sum_identity(CaseTag c) {
  const std::uint64_t m = c.m;
  switch (c.tag) {
    case Case::A: return 2 * m * m;
    case Case::B: return 2 * m * (m + 1);
    case Case::C: return 2 * m * m + m;
    case Case::D: return 2 * m * m + 3 * m + 1;
  }
  return 0;
}

std::int64_t residual_sum_bound(CaseTag c) {
  const auto m = static_cast<std::int64_t>(c.m);
  switch (c.tag) {
    case Case::A: return 6 * m * m - 4 * m;
    case Case::B: return 6 * m * m + 2 * m;
    case Case::C: return 6 * m * m - m;
    case Case::D: return 6 * m * m + 5 * m + 1;
  }
  return 0;
}

// Pairs split across the two arcs are inverted after exactly one of the two processes.
bool cross_pairs_complement(const std::vector<Label>& first_group, const std::vector<Label>& second_group,
                            const std::vector<Label>& block_top, const std::vector<Label>& block_bottom) {
  auto positions = [](const std::vector<Label>& block) {
    Label max_label = 0;
    for (Label l : block) max_label = std::max(max_label, l);
    std::vector<std::size_t> pos(max_label + 1, 0);
    for (std::size_t i = 0; i < block.size(); ++i) pos[block[i]] = i;
    return pos;
  };
  const auto top = positions(block_top);
  const auto bottom = positions(block_bottom);
  for (Label x : first_group) {
    for (Label y : second_group) {
      const bool inv_top = (top[x] < top[y]) != (x < y);
      const bool inv_bottom = (bottom[x] < bottom[y]) != (x < y);
      if (inv_top == inv_bottom) return false;
    }
  }
  return true;
}

std::string describe_sizes(const std::vector<std::size_t>& ns) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ns.size(); ++i) os << (i ? "," : "") << ns[i];
  return os.str();
}

}  // namespace

void CheckResult::fail(std::string message) {
  passed = false;
  if (failures.size() < kMaxReportedFailures) failures.push_back(std::move(message));
}

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

Verifier::Verifier(SearchConfig cfg) : cfg_(std::move(cfg)) {}

const DistanceTable& Verifier::table(std::size_t n, Mode mode) {
  auto& slot = tables_[{n, mode}];
  if (!slot) slot = std::make_unique<DistanceTable>(distance_table(n, mode, cfg_));
  return *slot;
}

const TnRecord& Verifier::t_record(std::size_t n) {
  auto it = t_records_.find(n);
  if (it == t_records_.end()) it = t_records_.emplace(n, t_exhaustive(n, cfg_.max_states)).first;
  return it->second;
}

CheckResult Verifier::diameter_formula(std::size_t max_n) {
  Stopwatch clock;
  CheckResult r{1, "adjacent-swap diameter equals floor((n-1)^2/4)"};
  for (std::size_t n = 1; n <= max_n; ++n) {
    const unsigned d = table(n, Mode::Adjacent).diameter();
    const std::uint64_t f = f_formula(n);
    r.details.push_back(cat("n=", n, " diameter=", d, " formula=", f));
    if (d != f) r.fail(cat("n=", n, ": BFS diameter ", d, " != ", f));
  }
  r.seconds = clock.seconds();
  return r;
}

CheckResult Verifier::constructive_sorter(std::size_t exhaustive_max_n,
                                          const std::vector<std::size_t>& random_ns,
                                          std::size_t samples, std::uint64_t seed) {
  Stopwatch clock;
  CheckResult r{2, "constructive sorter reaches the trivial class within floor((n-1)^2/4)"};
  std::uint64_t checked = 0;

  auto check_one = [&](const Arrangement& a, const DistanceTable* oracle) {
    const std::size_t n = a.size();
    const std::uint64_t bound = f_formula(n);
    ++checked;
    const SwapSequence seq = sort_cyclic(a);
    if (!canonicalize(replay(a, seq)).is_trivial()) {
      r.fail(cat("[", a.to_string(), "]: replay does not reach the trivial class"));
    }
    if (seq.size() > bound) r.fail(cat("[", a.to_string(), "]: length ", seq.size(), " > ", bound));
    if (oracle && seq.size() < oracle->distance_of(a)) {
      r.fail(cat("[", a.to_string(), "]: shorter than the exact distance"));
    }
    if (n < 4) return;

    const CaseTag c = case_of(n);
    const ArcSplit split = find_balanced_split(a);
    const ProcessPlan top = plan(a, split, Direction::Top);
    const ProcessPlan bottom = plan(a, split, Direction::Bottom);
    if (top.shift_cost + bottom.shift_cost != shift_sum_identity(c)) {
      r.fail(cat("[", a.to_string(), "]: f1+f2 = ", top.shift_cost + bottom.shift_cost,
                 " expected ", shift_sum_identity(c)));
    }
    if (static_cast<std::int64_t>(top.residual_cost + bottom.residual_cost) > residual_sum_bound(c)) {
      r.fail(cat("[", a.to_string(), "]: g1+g2 = ", top.residual_cost + bottom.residual_cost,
                 " exceeds ", residual_sum_bound(c)));
    }
    if (std::min(top.total_cost(), bottom.total_cost()) > bound) {
      r.fail(cat("[", a.to_string(), "]: both processes exceed the bound"));
    }
    for (const ProcessPlan* p : {&top, &bottom}) {
      SwapSequence full = p->shift_moves;
      full.append(p->residual_moves);
      if (!canonicalize(replay(a, full)).is_trivial()) {
        r.fail(cat("[", a.to_string(), "]: a process does not reach the trivial class"));
      }
    }
    std::vector<Label> small1, large1, small2, large2;
    for (std::size_t i = 0; i < n; ++i) {
      const Label l = a[(split.a1_start + i) % n];
      const bool in_a1 = i < split.a1_len;
      const bool small = l <= split.small_threshold;
      (in_a1 ? (small ? small1 : large1) : (small ? small2 : large2)).push_back(l);
    }
    if (!cross_pairs_complement(small1, small2, top.small_block, bottom.small_block) ||
        !cross_pairs_complement(large1, large2, top.large_block, bottom.large_block)) {
      r.fail(cat("[", a.to_string(), "]: cross-arc inversions are not complementary"));
    }
  };

  for (std::size_t n = 1; n <= exhaustive_max_n; ++n) {
    const DistanceTable* oracle = &table(n, Mode::Adjacent);
    std::vector<Label> labels(n);
    std::iota(labels.begin(), labels.end(), Label{1});
    const std::uint64_t before = checked;
    do {
      check_one(Arrangement(labels), oracle);
    } while (std::next_permutation(labels.begin(), labels.end()));
    r.details.push_back(cat("n=", n, ": all ", checked - before, " arrangements"));
  }

  std::mt19937_64 rng(seed);
  for (std::size_t n : random_ns) {
    std::vector<Label> labels(n);
    std::iota(labels.begin(), labels.end(), Label{1});
    for (std::size_t s = 0; s < samples; ++s) {
      std::shuffle(labels.begin(), labels.end(), rng);
      check_one(Arrangement(labels), nullptr);
    }
    r.details.push_back(cat("n=", n, ": ", samples, " random arrangements"));
  }
  r.details.push_back(cat("checked ", checked, " arrangements; random sizes {",
                          describe_sizes(random_ns), "}"));
  r.seconds = clock.seconds();
  return r;
}

CheckResult Verifier::lower_bound_witness(std::size_t reversal_max_n, std::size_t affine_max_n) {
  Stopwatch clock;
  CheckResult r{3, "reversal class and w_{n,k} meet the lower bound"};
  for (std::size_t n = 1; n <= reversal_max_n; ++n) {
    std::vector<Label> labels(n);
    for (std::size_t v = 0; v < n; ++v) labels[v] = static_cast<Label>(n - v);
    const unsigned d = table(n, Mode::Adjacent).distance_of(Arrangement(labels));
    r.details.push_back(cat("n=", n, " reversal distance=", d));
    if (d != f_formula(n)) r.fail(cat("n=", n, ": reversal distance ", d, " != ", f_formula(n)));
  }
  for (std::size_t n = 1; n <= affine_max_n; ++n) {
    const DistanceTable& affine = table(n, Mode::Affine);
    unsigned best = ~0u;
    std::ostringstream row;
    row << "n=" << n << " affine distances of w_{n,k}:";
    for (std::size_t k = 0; k < n; ++k) {
      const unsigned d = affine.distance_of(w_perm(n, static_cast<std::int64_t>(k)));
      best = std::min(best, d);
      row << ' ' << d;
      if (n % 2 == 0 && d < n_lower_table(n, static_cast<std::int64_t>(k))) {
        r.fail(cat("n=", n, " k=", k, ": affine distance ", d, " < N = ",
                   n_lower_table(n, static_cast<std::int64_t>(k))));
      }
    }
    r.details.push_back(row.str());
    if (best != f_formula(n)) r.fail(cat("n=", n, ": min_k affine distance ", best, " != ", f_formula(n)));
  }
  r.seconds = clock.seconds();
  return r;
}

CheckResult Verifier::allswap_equivalence(std::size_t max_n) {
  Stopwatch clock;
  CheckResult r{4, "coset cycle formula equals all-swaps BFS distance"};
  for (std::size_t n = 1; n <= max_n; ++n) {
    const DistanceTable& bfs = table(n, Mode::AllSwap);
    std::uint64_t mismatches = 0;
    for (std::uint64_t rank = 0; rank < bfs.size(); ++rank) {
      const Perm p(detail::representative(n, rank));
      const std::size_t formula = t_class(p).t_value;
      const unsigned d = bfs.distance_of(p.to_arrangement());
      if (formula != d) {
        ++mismatches;
        r.fail(cat("n=", n, " class [", p.to_arrangement().to_string(), "]: formula ", formula,
                   " BFS ", d));
      }
    }
    r.details.push_back(cat("n=", n, ": ", bfs.size(), " classes, ", mismatches, " mismatches"));
  }
  r.seconds = clock.seconds();
  return r;
}

CheckResult Verifier::t_table(std::size_t max_n) {
  Stopwatch clock;
  CheckResult r{5, "t(n) table"};
  for (std::size_t n = 2; n <= max_n; ++n) {
    const TnRecord& rec = t_record(n);
    std::ostringstream row;
    row << "n=" << n << " t=" << rec.t_n << " prime=" << (rec.is_prime ? "yes" : "no")
        << " witness=[" << rec.argmax_class.to_arrangement().to_string() << "] bounds:";
    for (const auto& lb : rec.lower_bounds) row << ' ' << lb.source << '=' << lb.value;
    r.details.push_back(row.str());

    if (rec.is_prime && rec.t_n != n - 2) r.fail(cat("n=", n, " prime but t=", rec.t_n));
    if (!rec.is_prime && rec.t_n >= n - 2) r.fail(cat("n=", n, " composite but t=", rec.t_n));
    if (n == 4 && rec.t_n != 1) r.fail(cat("t(4)=", rec.t_n, " expected 1"));
    for (const auto& lb : rec.lower_bounds) {
      if (lb.value > static_cast<std::int64_t>(rec.t_n)) {
        r.fail(cat("n=", n, ": bound ", lb.source, "=", lb.value, " exceeds t=", rec.t_n));
      }
    }
  }
  r.seconds = clock.seconds();
  return r;
}

CheckResult Verifier::multiplicative_constructions(std::uint64_t limit, unsigned two_power_max) {
  Stopwatch clock;
  CheckResult r{6, "cycle counts of the multiplicative constructions"};
  std::size_t prime_powers = 0;
  for (std::uint64_t p = 3; p <= limit; p += 2) {
    if (!is_prime(p)) continue;
    const std::uint64_t g = simultaneous_generator(p);
    std::uint64_t n = p;
    for (unsigned k = 1; n <= limit; ++k, n *= p) {
      ++prime_powers;
      const std::size_t c = cyc(mult_perm(n, g));
      if (c != k + 1) r.fail(cat("cyc(pi_{", n, ",", g, "}) = ", c, " expected ", k + 1));
    }
  }
  r.details.push_back(cat(prime_powers, " odd prime powers up to ", limit));

  for (unsigned k = 3; k <= two_power_max; ++k) {
    const std::size_t n = std::size_t{1} << k;
    const Perm base = mult_perm(n, 3);
    if (cyc(base) != 2 * k - 1) r.fail(cat("cyc(pi_{", n, ",3}) = ", cyc(base), " expected ", 2 * k - 1));
    for (std::size_t j = 1; j < n; j += 2) {
      const auto type = cycle_type(base.shifted(j));
      const std::vector<std::size_t> expected = {n / 2, n / 2};
      if (type != expected) {
        r.fail(cat("pi_{", n, ",3} c^", j, " has ", type.size(), " cycles"));
        break;
      }
    }
  }
  r.details.push_back(cat("2^k for k = 3..", two_power_max));

  std::size_t profiles = 0;
  for (std::uint64_t p = 3; 2 * p <= limit; p += 2) {
    if (!is_prime(p)) continue;
    std::uint64_t pk = p;
    for (unsigned k = 1; 2 * pk <= limit; ++k, pk *= p) {
      ++profiles;
      const ShiftProfile prof = shift_cycle_profile_2pk(p, k);
      if (prof.even_shift_cycles != 2 * k + 2 || prof.odd_shift_cycles != 2 * k + 1 || !prof.uniform) {
        r.fail(cat("2p^k with p=", p, " k=", k, ": profile (", prof.even_shift_cycles, ", ",
                   prof.odd_shift_cycles, ") uniform=", prof.uniform));
      }
    }
  }
  r.details.push_back(cat(profiles, " values 2p^k up to ", limit));
  r.seconds = clock.seconds();
  return r;
}

CheckResult Verifier::probability_bound(std::size_t max_n) {
  Stopwatch clock;
  CheckResult r{7, "cycle-count probability bound and tail"};
  for (std::size_t n = 2; n <= max_n; ++n) {
    for (std::size_t k = 0; k < n; ++k) {
      const BoundCheck b = check_p31(n, k);
      if (!b.holds) r.fail(cat("n=", n, " k=", k, ": exact ", to_double(b.exact), " > bound ", b.bound));
      if (k == 0 && !b.equal) r.fail(cat("n=", n, ": equality at k = 0 not detected"));
      if (k > 0 && b.equal) r.details.push_back(cat("n=", n, " k=", k, ": bound attained"));
    }
    const TailReport t = tail_report(n);
    if (t.k0 < n) {
      if (!t.below_one_over_n()) r.fail(cat("n=", n, ": tail ", to_double(t.exact_tail), " >= 1/n"));
      if (!t.exact_within_bound()) r.fail(cat("n=", n, ": tail exceeds its bound"));
      r.details.push_back(cat("n=", n, " k0=", t.k0, " tail=", to_double(t.exact_tail),
                              " bound=", t.bound_tail, " 1/n=", 1.0 / static_cast<double>(n)));
    }
  }
  const StirlingTable stirling(60);
  for (std::size_t n = 1; n <= 60; ++n) {
    BigInt sum = 0;
    for (std::size_t k = 0; k <= n; ++k) sum += stirling(n, k);
    if (sum != big_factorial(n)) r.fail(cat("Stirling row ", n, " does not sum to n!"));
  }
  for (std::size_t k = 1; k <= 60; ++k) {
    if (!factorial_lower_bound_holds(k)) r.fail(cat("k! bound fails at k=", k));
  }
  r.details.push_back("Stirling row sums and k! > (k/e)^k sqrt(2 pi k) checked to 60");
  r.seconds = clock.seconds();
  return r;
}

CheckResult Verifier::general_lower_bound(std::size_t max_n) {
  Stopwatch clock;
  CheckResult r{8, "t(n) >= n - ceil(e (ln n + 1))"};
  for (std::size_t n = 2; n <= max_n; ++n) {
    const std::int64_t bound = circlesort::general_lower_bound(n);
    const auto t = static_cast<std::int64_t>(t_record(n).t_n);
    r.details.push_back(cat("n=", n, " t=", t, " bound=", bound));
    if (t < bound) r.fail(cat("n=", n, ": t=", t, " < ", bound));
  }
  r.seconds = clock.seconds();
  return r;
}

CheckResult Verifier::conjectures(std::size_t max_n) {
  Stopwatch clock;
  CheckResult r{9, "prime conjecture, multiplicative-structure conjecture and (n-1,1) lemma"};
  for (std::size_t n = 2; n <= max_n; ++n) {
    const TnRecord& rec = t_record(n);
    const bool attains = rec.t_n == n - 2;
    if (attains != rec.is_prime) r.fail(cat("n=", n, ": t(n)=n-2 is ", attains, " but prime is ", rec.is_prime));
    if (n <= 2) continue;
    const StructureVerdict v = check_conjecture_structure(n, cfg_.max_states);
    std::ostringstream row;
    row << "n=" << n << " flagged=" << v.flagged.size() << " multipliers:";
    for (auto a : v.multipliers) row << ' ' << a;
    r.details.push_back(row.str());
    if (!v.lemma_holds) r.fail(cat("n=", n, ": a flagged class violates the (n-1,1) structure"));
    if (!v.conjecture_holds) r.fail(cat("n=", n, ": a flagged class is not multiplicative or n is composite"));
  }
  r.seconds = clock.seconds();
  return r;
}

Perm extend_with_fixed_point(std::uint64_t a) {
  std::vector<std::uint32_t> map(12);
  for (std::uint32_t v = 0; v < 11; ++v) {
    const std::uint64_t image = a * (v + 1) % 11;
    map[v] = static_cast<std::uint32_t>((image == 0 ? 11 : image) - 1);
  }
  map[11] = 11;
  return Perm(std::move(map));
}

DiscrepancyReport discrepancy_report(const SearchConfig& cfg, bool bfs_at_11) {
  DiscrepancyReport rep;
  for (std::uint64_t a = 1; a < 11; ++a) {
    MultiplierRow row;
    row.a = a;
    row.order = multiplicative_order(a, 11);
    const Perm p = mult_perm(11, a);
    row.cycles = cyc(p);
    row.t_value = t_class(p).t_value;
    row.predicted_t = (a == 1) ? 0 : 11 - (1 + 10 / row.order);
    if (row.t_value == rep.claimed_t_a3) rep.multipliers_reaching_claim.push_back(a);
    if (a == 3) rep.computed_t_a3 = row.t_value;
    rep.rows.push_back(row);
  }
  rep.extension_t_a3 = t_class(extend_with_fixed_point(3)).t_value;
  rep.extension_t_a2 = t_class(extend_with_fixed_point(2)).t_value;

  const DistanceTable seven = distance_table(7, Mode::AllSwap, cfg);
  rep.small_prime_matches_bfs = true;
  for (std::uint64_t a = 1; a < 7; ++a) {
    const Perm p = mult_perm(7, a);
    if (t_class(p).t_value != seven.distance_of(p.to_arrangement())) rep.small_prime_matches_bfs = false;
  }
  if (bfs_at_11 && state_count(11, Mode::AllSwap) <= cfg.max_states) {
    const DistanceTable eleven = distance_table(11, Mode::AllSwap, cfg);
    bool ok = true;
    for (const auto& row : rep.rows) {
      if (row.t_value != eleven.distance_of(mult_perm(11, row.a).to_arrangement())) ok = false;
    }
    rep.n11_matches_bfs = ok;
  }
  return rep;
}

CheckResult Verifier::discrepancy(bool bfs_at_11) {
  Stopwatch clock;
  CheckResult r{10, "t of the multiplication permutations on Z_11"};
  const DiscrepancyReport rep = discrepancy_report(cfg_, bfs_at_11);
  for (const auto& row : rep.rows) {
    r.details.push_back(cat("a=", row.a, " order=", row.order, " cyc=", row.cycles, " t=", row.t_value));
    if (row.t_value != row.predicted_t) {
      r.fail(cat("a=", row.a, ": t=", row.t_value, " but conjugacy predicts ", row.predicted_t));
    }
    if (row.t_value > 9) r.fail(cat("a=", row.a, ": t exceeds n-2"));
  }
  std::ostringstream reach;
  for (auto a : rep.multipliers_reaching_claim) reach << ' ' << a;
  r.details.push_back(cat("claimed t([pi_{11,3}]) = ", rep.claimed_t_a3, "; computed ", rep.computed_t_a3,
                          "; multipliers giving ", rep.claimed_t_a3, ":", reach.str()));
  r.details.push_back(cat("claimed t of the S_12 extension = ", rep.claimed_extension_t, "; computed ",
                          rep.extension_t_a3, " (a=3), ", rep.extension_t_a2, " (a=2)"));
  if (!rep.small_prime_matches_bfs) r.fail("n=7 multiplication permutations disagree with all-swaps BFS");
  if (rep.n11_matches_bfs) {
    r.details.push_back(cat("n=11 all-swaps BFS agreement: ", *rep.n11_matches_bfs ? "yes" : "no"));
    if (!*rep.n11_matches_bfs) r.fail("n=11 multiplication permutations disagree with all-swaps BFS");
  }
  r.seconds = clock.seconds();
  return r;
}

SuiteResult run_suite(std::string_view suite, std::optional<std::size_t> max_n, const SearchConfig& cfg,
                      std::size_t samples) {
  Verifier v(cfg);
  SuiteResult out{std::string(suite), {}};
  if (suite == "upper") {
    const std::size_t n = max_n.value_or(10);
    out.checks.push_back(v.diameter_formula(n));
    out.checks.push_back(v.constructive_sorter(std::min<std::size_t>(n, 8), {50, 101, 200}, samples, 20240601));
  } else if (suite == "lower") {
    const std::size_t n = max_n.value_or(10);
    out.checks.push_back(v.lower_bound_witness(n, std::min<std::size_t>(n, 8)));
  } else if (suite == "allswap") {
    const std::size_t n = max_n.value_or(11);
    out.checks.push_back(v.allswap_equivalence(std::min<std::size_t>(n, 8)));
    out.checks.push_back(v.t_table(n));
    out.checks.push_back(v.multiplicative_constructions(2000, 12));
    out.checks.push_back(v.general_lower_bound(n));
    out.checks.push_back(v.discrepancy(n >= 11));
  } else if (suite == "conjectures") {
    out.checks.push_back(v.conjectures(max_n.value_or(10)));
  } else if (suite == "p31") {
    out.checks.push_back(v.probability_bound(max_n.value_or(30)));
  } else {
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  }
  return out;
}

}  // namespace circlesort::verify
