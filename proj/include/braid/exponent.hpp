#pragma once

#include "braid/word.hpp"

namespace braid {

/// Image of a braid under the exponent-sum homomorphism B_n -> Z.
/// Each letter contributes its sign, so |value| never exceeds the word
/// length; 64 bits cannot overflow for any word that fits in memory.
struct ExponentSum {
  long long value = 0;

  friend bool operator==(ExponentSum, ExponentSum) = default;
};

/// Sum of letter signs over the word, one left-to-right pass. Invariant
/// under the defining relations, additive under concatenation, negated by
/// inversion, and scaled by k on k-th powers.
ExponentSum exp_sum(const BraidWord& w);

}  // namespace braid
