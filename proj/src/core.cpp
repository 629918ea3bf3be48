#include "circlesort/core.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace circlesort {

namespace {

void check_permutation(std::span<const Label> labels) {
  if (labels.empty()) {
    throw std::invalid_argument("arrangement must have at least one vertex");
  }
  std::vector<bool> seen(labels.size() + 1, false);
  for (Label l : labels) {
    if (l < 1 || l > labels.size() || seen[l]) {
      throw std::invalid_argument("labels must be a permutation of 1.." +
                                  std::to_string(labels.size()));
    }
    seen[l] = true;
  }
}

void check_index(std::size_t index, std::size_t n) {
  if (index >= n) {
    throw std::out_of_range("vertex index " + std::to_string(index) + " out of range for n = " +
                            std::to_string(n));
  }
}

}  // namespace

Arrangement::Arrangement(std::vector<Label> labels) : labels_(std::move(labels)) {
  check_permutation(labels_);
}

Arrangement Arrangement::trivial(std::size_t n) {
  if (n == 0) throw std::invalid_argument("arrangement must have at least one vertex");
  std::vector<Label> labels(n);
  for (std::size_t v = 0; v < n; ++v) labels[v] = static_cast<Label>(v + 1);
  return Arrangement(std::move(labels), Unchecked{});
}

Arrangement Arrangement::parse(std::string_view text) {
  std::vector<Label> labels;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t' || text[i] == ',' || text[i] == '\n') {
      ++i;
      continue;
    }
    Label value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{}) {
      throw std::invalid_argument("cannot parse label near '" + std::string(text.substr(i, 8)) +
                                  "'");
    }
    labels.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return Arrangement(std::move(labels));
}

Arrangement Arrangement::rotated(std::size_t r) const {
  const std::size_t n = size();
  std::vector<Label> out(n);
  for (std::size_t v = 0; v < n; ++v) out[v] = labels_[(v + r) % n];
  return Arrangement(std::move(out), Unchecked{});
}

std::string Arrangement::to_string() const {
  std::ostringstream os;
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (v) os << ' ';
    os << labels_[v];
  }
  return os.str();
}

bool CyclicPerm::is_trivial() const {
  const auto labels = canon_.labels();
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v] != v + 1) return false;
  }
  return true;
}

SwapSequence SwapSequence::adjacent(std::size_t n, std::vector<AdjSwap> moves) {
  return SwapSequence{n, std::move(moves)};
}

SwapSequence SwapSequence::general(std::size_t n, std::vector<GenSwap> moves) {
  return SwapSequence{n, std::move(moves)};
}

std::size_t SwapSequence::size() const noexcept {
  return std::visit([](const auto& v) { return v.size(); }, moves);
}

SwapSequence SwapSequence::reversed() const {
  SwapSequence out = *this;
  std::visit([](auto& v) { std::reverse(v.begin(), v.end()); }, out.moves);
  return out;
}

void SwapSequence::append(const SwapSequence& tail) {
  if (tail.n != n || tail.moves.index() != moves.index()) {
    throw std::invalid_argument("cannot append swap sequences of different size or kind");
  }
  std::visit(
      [&](auto& head) {
        const auto& rest = std::get<std::decay_t<decltype(head)>>(tail.moves);
        head.insert(head.end(), rest.begin(), rest.end());
      },
      moves);
}

CyclicPerm canonicalize(const Arrangement& a) {
  const auto labels = a.labels();
  const auto it = std::find(labels.begin(), labels.end(), Label{1});
  return CyclicPerm(a.rotated(static_cast<std::size_t>(it - labels.begin())));
}

Arrangement apply(const Arrangement& a, AdjSwap s) {
  check_index(s.pos, a.size());
  return apply(a, GenSwap{s.pos, (s.pos + 1) % a.size()});
}

Arrangement apply(const Arrangement& a, GenSwap s) {
  check_index(s.a, a.size());
  check_index(s.b, a.size());
  std::vector<Label> labels(a.labels().begin(), a.labels().end());
  std::swap(labels[s.a], labels[s.b]);
  return Arrangement(std::move(labels));
}

Arrangement replay(const Arrangement& a, const SwapSequence& seq) {
  const std::size_t n = a.size();
  if (seq.n != n) {
    throw std::invalid_argument("swap sequence for n = " + std::to_string(seq.n) +
                                " replayed on arrangement of size " + std::to_string(n));
  }
  std::vector<Label> labels(a.labels().begin(), a.labels().end());
  if (const auto* adj = std::get_if<std::vector<AdjSwap>>(&seq.moves)) {
    for (AdjSwap s : *adj) {
      check_index(s.pos, n);
      std::swap(labels[s.pos], labels[(s.pos + 1) % n]);
    }
  } else {
    for (GenSwap s : std::get<std::vector<GenSwap>>(seq.moves)) {
      check_index(s.a, n);
      check_index(s.b, n);
      std::swap(labels[s.a], labels[s.b]);
    }
  }
  return Arrangement(std::move(labels));
}

std::size_t inversions(std::span<const Label> observed, std::span<const Label> target) {
  if (observed.size() != target.size()) {
    throw std::invalid_argument("observed and target label sets differ in size");
  }
  // position of each label in the target order
  Label max_label = 0;
  for (Label l : target) max_label = std::max(max_label, l);
  std::vector<std::int64_t> rank(static_cast<std::size_t>(max_label) + 1, -1);
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (rank[target[i]] != -1) throw std::invalid_argument("target order repeats a label");
    rank[target[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<std::int64_t> seq(observed.size());
  std::vector<bool> used(target.size(), false);
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const Label l = observed[i];
    if (l > max_label || rank[l] == -1 || used[static_cast<std::size_t>(rank[l])]) {
      throw std::invalid_argument("observed labels do not match the target order");
    }
    used[static_cast<std::size_t>(rank[l])] = true;
    seq[i] = rank[l];
  }
  std::size_t count = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] > seq[j]) ++count;
    }
  }
  return count;
}

std::size_t inversions(std::span<const Label> observed) {
  std::vector<Label> target(observed.begin(), observed.end());
  std::sort(target.begin(), target.end());
  return inversions(observed, target);
}

}  // namespace circlesort
