#pragma once

#include <cstdint>
#include <vector>

#include "braid/errors.hpp"

namespace braid {

/// Number of strands n of a braid group B_n. Always >= 2.
class BraidIndex {
 public:
  explicit BraidIndex(int strands) : n_(strands) {
    if (strands < 2)
      throw std::invalid_argument("braid index must be at least 2");
  }

  int strands() const { return n_; }
  /// Number of elementary crossing generators, n - 1.
  int artin_generators() const { return n_ - 1; }

  friend bool operator==(BraidIndex a, BraidIndex b) { return a.n_ == b.n_; }
  friend bool operator!=(BraidIndex a, BraidIndex b) { return a.n_ != b.n_; }

 private:
  int n_;
};

/// One signed generator letter. Two surface kinds are accepted: the
/// elementary crossing of strands i and i+1, and the band generator
/// crossing strands t and s behind the strands in between. Both are stored
/// as the strand pair (upper, lower); the elementary letter i is the pair
/// (i+1, i). The kind only records which syntax the letter was written in.
struct GeneratorLetter {
  enum class Kind : std::uint8_t { Artin, Band };

  Kind kind;
  std::int8_t sign;  // +1 or -1
  int upper;
  int lower;

  static GeneratorLetter artin(int i, int sign = +1) {
    return {Kind::Artin, static_cast<std::int8_t>(sign), i + 1, i};
  }
  static GeneratorLetter band(int t, int s, int sign = +1) {
    return {Kind::Band, static_cast<std::int8_t>(sign), t, s};
  }

  /// Strand position i of an elementary letter; meaningful only when
  /// kind == Kind::Artin.
  int artin_index() const { return lower; }

  GeneratorLetter inverse() const {
    return {kind, static_cast<std::int8_t>(-sign), upper, lower};
  }

  friend bool operator==(const GeneratorLetter&,
                         const GeneratorLetter&) = default;
};

/// True when both letters denote the same group generator, regardless of
/// the syntax they were written in.
inline bool same_generator(const GeneratorLetter& a, const GeneratorLetter& b) {
  return a.upper == b.upper && a.lower == b.lower;
}

/// True for an adjacent pair that cancels freely: same generator,
/// opposite signs.
inline bool cancels(const GeneratorLetter& a, const GeneratorLetter& b) {
  return same_generator(a, b) && a.sign == -b.sign;
}

/// A word over the generators of B_n: an immutable sequence of signed
/// letters. The empty sequence is the identity word. Syntactic equality
/// only; group equality lives in normal_form.hpp.
class BraidWord {
 public:
  /// Validates every letter against the index; throws OutOfRangeLetter
  /// with the ordinal of the first bad letter.
  BraidWord(BraidIndex index, std::vector<GeneratorLetter> letters);

  static BraidWord identity(BraidIndex index) { return BraidWord(index, {}); }

  BraidIndex index() const { return index_; }
  const std::vector<GeneratorLetter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity_word() const { return letters_.empty(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  BraidIndex index_;
  std::vector<GeneratorLetter> letters_;
};

/// Reversed letter sequence with every sign flipped.
BraidWord invert(const BraidWord& w);

/// Letters of u followed by letters of v. Purely syntactic, no
/// cancellation. Throws IndexMismatch.
BraidWord concatenate(const BraidWord& u, const BraidWord& v);

/// k copies of x for k > 0, the identity word for k = 0, |k| copies of
/// invert(x) for k < 0.
BraidWord power(const BraidWord& x, long long k);

/// Removes adjacent cancelling pairs until none remain. Idempotent;
/// represents the same braid.
BraidWord free_reduce(const BraidWord& w);

/// Rewrites every band letter as a word in elementary letters:
/// the pair (t, s) becomes the conjugate
/// (s_{t-1} ... s_{s+1}) s_s^sign (s_{s+1}^-1 ... s_{t-1}^-1),
/// which collapses to the single letter s_s^sign when t = s + 1.
/// Elementary letters pass through untouched.
BraidWord band_to_artin(const BraidWord& w);

/// Applies one legal rewriting move chosen uniformly over all applicable
/// (move, position) pairs: swap of distant commuting letters, the
/// three-letter braid relation, deletion of an adjacent inverse pair, or
/// insertion of a fresh inverse pair. Deterministic for a given seed and
/// always returns a word equal to w in B_n (inserting is always
/// applicable, so no input is ever returned unchanged-by-necessity).
BraidWord apply_random_relation(const BraidWord& w, std::uint64_t seed);

}  // namespace braid
