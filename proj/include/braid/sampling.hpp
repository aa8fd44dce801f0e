#pragma once

#include <cstdint>

#include "braid/word.hpp"

namespace braid {

/// Deterministic seed combiner (splitmix64 finalizer over the pair).
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

/// Uniform random word: each letter an elementary generator with uniform
/// position and sign. Deterministic for a given seed.
BraidWord random_artin_word(BraidIndex index, std::size_t length,
                            std::uint64_t seed);

/// Same, but resamples until the exponent sum is nonzero.
BraidWord random_artin_word_nonzero_exp(BraidIndex index, std::size_t length,
                                        std::uint64_t seed);

/// Chain of `moves` random relation applications; every step preserves the
/// braid, so the result is a different word for the same element.
BraidWord fuzz_word(const BraidWord& w, int moves, std::uint64_t seed);

}  // namespace braid
