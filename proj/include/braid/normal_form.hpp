#pragma once

#include <cstdint>
#include <vector>

#include "braid/permutation.hpp"
#include "braid/word.hpp"

namespace braid {

/// A positive braid in which each pair of strands crosses at most once,
/// identified with its strand permutation. These are the factors of the
/// left canonical form; they sit between the trivial braid and the
/// half-twist D in the prefix order, and their positive word length equals
/// the inversion count of the permutation.
class PermutationBraid {
 public:
  explicit PermutationBraid(Permutation perm) : perm_(std::move(perm)) {}

  const Permutation& perm() const { return perm_; }
  int degree() const { return perm_.degree(); }

  bool is_identity() const { return perm_.is_identity(); }
  bool is_delta() const;

  /// Number of strand-pair crossings = letters of any positive word for it.
  int word_length() const;

  friend bool operator==(const PermutationBraid&,
                         const PermutationBraid&) = default;

 private:
  Permutation perm_;
};

/// Counters for the factor-level work done by the normal-form engine.
struct NormalFormStats {
  std::uint64_t factor_ops = 0;
};

/// The unique left canonical form D^inf . A_1 ... A_L: a power of the
/// half-twist followed by a left-weighted sequence of permutation-braid
/// factors, none trivial and none equal to D. Two words represent the same
/// braid exactly when their forms are identical, so this is the equality
/// certificate.
class LeftCanonicalForm {
 public:
  LeftCanonicalForm(BraidIndex index, long long inf,
                    std::vector<PermutationBraid> factors)
      : index_(index), inf_(inf), factors_(std::move(factors)) {}

  BraidIndex index() const { return index_; }
  long long inf() const { return inf_; }
  const std::vector<PermutationBraid>& factors() const { return factors_; }
  int canonical_length() const { return static_cast<int>(factors_.size()); }

  friend bool operator==(const LeftCanonicalForm&,
                         const LeftCanonicalForm&) = default;

 private:
  BraidIndex index_;
  long long inf_;
  std::vector<PermutationBraid> factors_;
};

/// Computes the left canonical form of the braid represented by w. Band
/// letters are rewritten to elementary letters first. Deterministic; the
/// result is the same for every word representing the same braid.
LeftCanonicalForm left_canonical_form(const BraidWord& w,
                                      NormalFormStats* stats = nullptr);

/// Decides u = v in B_n by comparing left canonical forms.
/// Throws IndexMismatch.
bool equal(const BraidWord& u, const BraidWord& v,
           NormalFormStats* stats = nullptr);

/// Factor count of the left canonical form.
int canonical_length(const BraidWord& w);

/// The standard positive word for the half-twist:
/// (s1)(s2 s1)(s3 s2 s1)...(s_{n-1} ... s1).
BraidWord delta_word(BraidIndex index);

/// Rebuilds a word from a form: inf copies of the half-twist word (inverted
/// when inf < 0) followed by one positive word per factor. The result
/// represents the same braid the form was computed from.
BraidWord lcf_to_word(const LeftCanonicalForm& form);

}  // namespace braid
