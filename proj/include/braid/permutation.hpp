#pragma once

#include <vector>

#include "braid/word.hpp"

namespace braid {

/// A bijection on the strand positions {1..n}. Strands act left to right:
/// the first letter of a word moves strands first.
class Permutation {
 public:
  /// Identity on {1..n}.
  explicit Permutation(int n);
  /// Adopts an image array: image[i] is the image of position i+1.
  explicit Permutation(std::vector<int> image);

  static Permutation transposition(int n, int a, int b);
  /// The half-twist permutation i -> n+1-i.
  static Permutation reversal(int n);

  int degree() const { return static_cast<int>(image_.size()); }
  /// Image of position x, 1-based.
  int apply(int x) const { return image_[x - 1]; }
  const std::vector<int>& image() const { return image_; }

  /// Composition in word order: (a.then(b))(x) = b(a(x)).
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// The quotient map B_n -> S_n: every letter goes to the transposition of
/// its strand pair. Equal braid words always have equal projections, which
/// makes this a cheap necessary condition for word equality.
Permutation permutation_projection(const BraidWord& w);

}  // namespace braid
