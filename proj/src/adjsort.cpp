#include "circlesort/adjsort.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>

namespace circlesort {

namespace {

std::size_t mod_n(std::int64_t x, std::size_t n) {
  const auto m = static_cast<std::int64_t>(n);
  return static_cast<std::size_t>(((x % m) + m) % m);
}

// Consecutive clockwise vertices start, start+1, ... of length len.
struct Arc {
  std::size_t start;
  std::size_t len;
  std::size_t n;

  std::size_t vertex(std::size_t i) const { return (start + i) % n; }
};

struct Requirement {
  Label threshold;
  std::size_t a1_len;
  std::size_t a1_small;
};

Requirement requirement_for(CaseTag c) {
  const std::size_t m = c.m;
  switch (c.tag) {
    case Case::A: return {static_cast<Label>(2 * m), 2 * m, m};
    case Case::B: return {static_cast<Label>(2 * m + 1), 2 * m + 1, m};
    case Case::C: return {static_cast<Label>(2 * m), 2 * m, m};
    case Case::D: return {static_cast<Label>(2 * m + 2), 2 * m + 1, m + 1};
  }
  throw std::logic_error("unknown case");
}

class MoveRecorder {
 public:
  MoveRecorder(std::vector<Label>& labels, std::vector<AdjSwap>& out) : labels_(labels), out_(out) {}

  // swaps vertex v with its clockwise neighbour
  void swap_after(std::size_t v) {
    const std::size_t n = labels_.size();
    std::swap(labels_[v], labels_[(v + 1) % n]);
    out_.push_back(AdjSwap{v});
  }

 private:
  std::vector<Label>& labels_;
  std::vector<AdjSwap>& out_;
};

// Moves the small labels of the arc to its first `count` positions, keeping their order.
void gather_front(const Arc& arc, Label threshold, MoveRecorder& rec, std::vector<Label>& labels) {
  std::size_t target = 0;
  for (std::size_t i = 0; i < arc.len; ++i) {
    if (labels[arc.vertex(i)] > threshold) continue;
    for (std::size_t p = i; p > target; --p) rec.swap_after(arc.vertex(p - 1));
    ++target;
  }
}

void gather_back(const Arc& arc, Label threshold, MoveRecorder& rec, std::vector<Label>& labels) {
  std::size_t target = arc.len;
  for (std::size_t i = arc.len; i-- > 0;) {
    if (labels[arc.vertex(i)] > threshold) continue;
    for (std::size_t p = i; p + 1 < target; ++p) rec.swap_after(arc.vertex(p));
    --target;
  }
}

std::vector<Label> read_arc(const Arc& arc, const std::vector<Label>& labels) {
  std::vector<Label> out(arc.len);
  for (std::size_t i = 0; i < arc.len; ++i) out[i] = labels[arc.vertex(i)];
  return out;
}

// Bubble sort restricted to the arc; every swap removes exactly one inversion.
void bubble_sort(const Arc& arc, MoveRecorder& rec, std::vector<Label>& labels) {
  for (std::size_t pass = 0; pass + 1 < arc.len; ++pass) {
    bool swapped = false;
    for (std::size_t i = 0; i + 1 < arc.len - pass; ++i) {
      if (labels[arc.vertex(i)] > labels[arc.vertex(i + 1)]) {
        rec.swap_after(arc.vertex(i));
        swapped = true;
      }
    }
    if (!swapped) break;
  }
}

SwapSequence search_small(const Arrangement& a) {
  // BFS over all arrangements; only used for n <= 3.
  const std::size_t n = a.size();
  using Labels = std::vector<Label>;
  std::map<Labels, std::pair<Labels, std::size_t>> parent;
  std::deque<Labels> queue;
  const Labels start(a.labels().begin(), a.labels().end());
  parent.emplace(start, std::make_pair(start, n));
  queue.push_back(start);
  while (!queue.empty()) {
    Labels cur = queue.front();
    queue.pop_front();
    if (canonicalize(Arrangement(cur)).is_trivial()) {
      std::vector<AdjSwap> moves;
      while (cur != start) {
        const auto& [prev, pos] = parent.at(cur);
        moves.push_back(AdjSwap{pos});
        cur = prev;
      }
      std::reverse(moves.begin(), moves.end());
      return SwapSequence::adjacent(n, std::move(moves));
    }
    for (std::size_t pos = 0; pos < n; ++pos) {
      Labels next = cur;
      std::swap(next[pos], next[(pos + 1) % n]);
      if (parent.emplace(next, std::make_pair(cur, pos)).second) queue.push_back(std::move(next));
    }
  }
  throw std::logic_error("trivial class unreachable");
}

}  // namespace

std::size_t CaseTag::n() const noexcept {
  switch (tag) {
    case Case::A: return 4 * m;
    case Case::B: return 4 * m + 2;
    case Case::C: return 4 * m + 1;
    case Case::D: return 4 * m + 3;
  }
  return 0;
}

CaseTag case_of(std::size_t n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  static constexpr Case kByResidue[4] = {Case::A, Case::C, Case::B, Case::D};
  return CaseTag{kByResidue[n % 4], n / 4};
}

std::uint64_t f_formula(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  return (n - 1) * (n - 1) / 4;
}

ArcSplit find_balanced_split(const Arrangement& a) {
  const std::size_t n = a.size();
  if (n < 4) throw std::invalid_argument("balanced split needs n >= 4");
  const CaseTag c = case_of(n);
  const Requirement req = requirement_for(c);
  const auto labels = a.labels();

  std::size_t excluded = n;  // no exclusion
  if (c.tag == Case::D) {
    excluded = static_cast<std::size_t>(
        std::find(labels.begin(), labels.end(), static_cast<Label>(n)) - labels.begin());
  }

  auto is_small = [&](std::size_t v) { return labels[v % n] <= req.threshold ? 1u : 0u; };
  std::size_t small_in_window = 0;
  for (std::size_t i = 0; i < req.a1_len; ++i) small_in_window += is_small(i);

  const std::size_t total_small = req.threshold;
  for (std::size_t start = 0; start < n; ++start) {
    if (start > 0) {
      small_in_window -= is_small(start - 1);
      small_in_window += is_small(start + req.a1_len - 1);
    }
    if (small_in_window != req.a1_small) continue;
    if (excluded < n && (excluded + n - start) % n < req.a1_len) continue;

    ArcSplit split;
    split.a1_start = start;
    split.a1_len = req.a1_len;
    split.a2_len = n - req.a1_len;
    split.small_threshold = req.threshold;
    split.counts = {req.a1_small, req.a1_len - req.a1_small, total_small - req.a1_small,
                    split.a2_len - (total_small - req.a1_small)};
    return split;
  }
  throw std::logic_error("no balanced arc found for n = " + std::to_string(n));
}

ProcessPlan plan(const Arrangement& a, const ArcSplit& split, Direction direction) {
  const std::size_t n = a.size();
  if (split.n() != n || split.a1_start >= n) {
    throw std::invalid_argument("arc split does not match arrangement size");
  }
  std::vector<Label> labels(a.labels().begin(), a.labels().end());
  const Arc a1{split.a1_start, split.a1_len, n};
  const Arc a2{split.a2_start(), split.a2_len, n};

  std::array<std::size_t, 4> counts{};
  for (std::size_t i = 0; i < a1.len; ++i) ++counts[labels[a1.vertex(i)] <= split.small_threshold ? 0 : 1];
  for (std::size_t i = 0; i < a2.len; ++i) ++counts[labels[a2.vertex(i)] <= split.small_threshold ? 2 : 3];
  if (counts != split.counts) {
    throw std::invalid_argument("arc split counts do not match the arrangement");
  }
  const std::size_t s1 = counts[0];
  const std::size_t s2 = counts[2];

  ProcessPlan result;
  result.direction = direction;
  std::vector<AdjSwap> shift;
  {
    MoveRecorder rec(labels, shift);
    if (direction == Direction::Top) {
      gather_front(a1, split.small_threshold, rec, labels);
      gather_back(a2, split.small_threshold, rec, labels);
    } else {
      gather_back(a1, split.small_threshold, rec, labels);
      gather_front(a2, split.small_threshold, rec, labels);
    }
  }

  const std::size_t small_total = s1 + s2;
  const Arc small_arc = (direction == Direction::Top)
                            ? Arc{a2.vertex(a2.len - s2), small_total, n}
                            : Arc{a1.vertex(a1.len - s1), small_total, n};
  const Arc large_arc{(small_arc.start + small_total) % n, n - small_total, n};
  result.small_block = read_arc(small_arc, labels);
  result.large_block = read_arc(large_arc, labels);

  std::vector<AdjSwap> residual;
  {
    MoveRecorder rec(labels, residual);
    bubble_sort(small_arc, rec, labels);
    bubble_sort(large_arc, rec, labels);
  }

  result.shift_cost = shift.size();
  result.residual_cost = residual.size();
  result.shift_moves = SwapSequence::adjacent(n, std::move(shift));
  result.residual_moves = SwapSequence::adjacent(n, std::move(residual));
  return result;
}

SwapSequence sort_cyclic(const Arrangement& a) {
  const std::size_t n = a.size();
  if (n <= 3) return search_small(a);

  const ArcSplit split = find_balanced_split(a);
  ProcessPlan top = plan(a, split, Direction::Top);
  ProcessPlan bottom = plan(a, split, Direction::Bottom);
  ProcessPlan& best = (bottom.total_cost() < top.total_cost()) ? bottom : top;

  SwapSequence out = std::move(best.shift_moves);
  out.append(best.residual_moves);
  if (out.size() > f_formula(n)) {
    throw std::logic_error("sort_cyclic exceeded floor((n-1)^2/4) for " + a.to_string());
  }
  return out;
}

std::size_t circular_distance(std::size_t n, std::size_t i, std::size_t j) {
  const std::size_t d = (i > j) ? i - j : j - i;
  return std::min(d, n - d);
}

Arrangement w_perm(std::size_t n, std::int64_t k) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  std::vector<Label> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = mod_n(k - static_cast<std::int64_t>(i), n);
    labels[i] = static_cast<Label>(r == 0 ? n : r);
  }
  return Arrangement(std::move(labels));
}

std::vector<std::size_t> gap_multiset(std::size_t n, std::int64_t k) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  std::vector<std::size_t> gaps(n);
  for (std::size_t i = 0; i < n; ++i) {
    gaps[i] = circular_distance(n, i, mod_n(k - static_cast<std::int64_t>(i), n));
  }
  std::sort(gaps.begin(), gaps.end());
  return gaps;
}

std::uint64_t n_lower_table(std::size_t n, std::int64_t k) {
  if (n < 2 || n % 2 != 0) {
    throw std::domain_error("N_{n,k} is defined for even n >= 2 only");
  }
  const std::int64_t diff = k - static_cast<std::int64_t>(n / 2);
  const bool odd = ((diff % 2) + 2) % 2 == 1;
  const std::uint64_t base = static_cast<std::uint64_t>(n) * n - 2 * static_cast<std::uint64_t>(n);
  return odd ? base / 4 : (base + 4) / 4;
}

}  // namespace circlesort
