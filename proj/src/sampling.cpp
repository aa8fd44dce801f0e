#include "braid/sampling.hpp"

#include <random>

#include "braid/exponent.hpp"

namespace braid {

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9E3779B97F4A7C15ull * (b + 1);
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

BraidWord random_artin_word(BraidIndex index, std::size_t length,
                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<GeneratorLetter> letters;
  letters.reserve(length);
  for (std::size_t k = 0; k < length; ++k) {
    const int i = 1 + static_cast<int>(rng() % index.artin_generators());
    const int s = (rng() & 1) ? +1 : -1;
    letters.push_back(GeneratorLetter::artin(i, s));
  }
  return BraidWord(index, std::move(letters));
}

BraidWord random_artin_word_nonzero_exp(BraidIndex index, std::size_t length,
                                        std::uint64_t seed) {
  if (length == 0)
    throw std::invalid_argument("empty words always have exponent sum 0");
  for (std::uint64_t attempt = 0;; ++attempt) {
    BraidWord w = random_artin_word(index, length, mix_seed(seed, attempt));
    if (exp_sum(w).value != 0) return w;
  }
}

BraidWord fuzz_word(const BraidWord& w, int moves, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BraidWord out = w;
  for (int k = 0; k < moves; ++k) out = apply_random_relation(out, rng());
  return out;
}

}  // namespace braid
