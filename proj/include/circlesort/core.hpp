#pragma once

// Arrangements of labels 1..n on the vertices of an n-cycle, their rotation
// classes, and label swaps.
//
// Vertices are numbered 0..n-1 clockwise. Labels are 1-based. The adjacent
// swap at position p exchanges vertices p and (p+1) mod n, so p = n-1 is the
// wraparound pair.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace circlesort {

using Label = std::uint32_t;

class Arrangement {
 public:
  /// Throws std::invalid_argument unless labels is a permutation of 1..n, n >= 1.
  explicit Arrangement(std::vector<Label> labels);

  static Arrangement trivial(std::size_t n);

  /// Space-separated labels, vertex 0 first ("5 4 3 2 1").
  static Arrangement parse(std::string_view text);

  std::size_t size() const noexcept { return labels_.size(); }
  Label operator[](std::size_t vertex) const { return labels_[vertex]; }
  std::span<const Label> labels() const noexcept { return labels_; }

  /// Vertex v of the result carries the label of vertex (v + r) mod n.
  Arrangement rotated(std::size_t r) const;

  std::string to_string() const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  struct Unchecked {};
  Arrangement(std::vector<Label> labels, Unchecked) : labels_(std::move(labels)) {}

  std::vector<Label> labels_;
};

/// Rotation class of an arrangement, stored as the rotation with label 1 at vertex 0.
class CyclicPerm {
 public:
  const Arrangement& canon() const noexcept { return canon_; }
  std::size_t size() const noexcept { return canon_.size(); }
  bool is_trivial() const;

  friend bool operator==(const CyclicPerm&, const CyclicPerm&) = default;

 private:
  explicit CyclicPerm(Arrangement canon) : canon_(std::move(canon)) {}
  friend CyclicPerm canonicalize(const Arrangement&);

  Arrangement canon_;
};

struct AdjSwap {
  std::size_t pos = 0;
  friend bool operator==(const AdjSwap&, const AdjSwap&) = default;
};

struct GenSwap {
  std::size_t a = 0;
  std::size_t b = 1;
  friend bool operator==(const GenSwap&, const GenSwap&) = default;
};

struct SwapSequence {
  std::size_t n = 0;
  std::variant<std::vector<AdjSwap>, std::vector<GenSwap>> moves;

  static SwapSequence adjacent(std::size_t n, std::vector<AdjSwap> moves = {});
  static SwapSequence general(std::size_t n, std::vector<GenSwap> moves = {});

  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  bool is_adjacent() const noexcept { return moves.index() == 0; }

  /// Same moves in reverse order; replaying s then s.reversed() is the identity.
  SwapSequence reversed() const;

  /// Moves appended after this sequence's moves. Both must have the same n and kind.
  void append(const SwapSequence& tail);
};

CyclicPerm canonicalize(const Arrangement& a);

Arrangement apply(const Arrangement& a, AdjSwap s);
Arrangement apply(const Arrangement& a, GenSwap s);

/// Left-to-right application of every move. Throws on size mismatch or a bad index.
Arrangement replay(const Arrangement& a, const SwapSequence& seq);

/// Number of pairs of `observed` that appear in the opposite order in `target`.
/// Throws std::invalid_argument unless observed is a permutation of target.
std::size_t inversions(std::span<const Label> observed, std::span<const Label> target);

/// Inversions relative to ascending label order.
std::size_t inversions(std::span<const Label> observed);

}  // namespace circlesort
