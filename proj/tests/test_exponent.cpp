#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "braid/exponent.hpp"
#include "braid/sampling.hpp"
#include "braid/word.hpp"

#include "test_util.hpp"

using namespace braid;
using braid::testutil::W;

TEST_CASE("exponent sum adds letter signs") {
  CHECK(exp_sum(W(4, "s1 s3^-3 s2^2 s1")).value == 1);  // 1 - 3 + 2 + 1
  CHECK(exp_sum(W(3, "1")).value == 0);
  for (int i = 1; i <= 3; ++i) {
    const BraidWord w(BraidIndex(5), {GeneratorLetter::artin(i),
                                      GeneratorLetter::artin(i + 1),
                                      GeneratorLetter::artin(i)});
    CHECK(exp_sum(w).value == 3);
  }
}

TEST_CASE("invariant under relation moves") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const BraidWord w = random_artin_word(BraidIndex(n), 1 + rng() % 40, rng());
    const long long e = exp_sum(w).value;
    CHECK(exp_sum(apply_random_relation(w, rng())).value == e);
    CHECK(exp_sum(fuzz_word(w, 30, rng())).value == e);
  }
}

TEST_CASE("additive under concatenation") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const BraidIndex index(3 + static_cast<int>(rng() % 6));
    const BraidWord u = random_artin_word(index, rng() % 30, rng());
    const BraidWord v = random_artin_word(index, rng() % 30, rng());
    CHECK(exp_sum(concatenate(u, v)).value ==
          exp_sum(u).value + exp_sum(v).value);
  }
}

TEST_CASE("negated by inversion") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const BraidWord w =
        random_artin_word(BraidIndex(3 + rng() % 6), rng() % 40, rng());
    CHECK(exp_sum(invert(w)).value == -exp_sum(w).value);
  }
}

TEST_CASE("scaled by powers") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const BraidWord w =
        random_artin_word(BraidIndex(3 + rng() % 6), rng() % 20, rng());
    const long long k = static_cast<long long>(rng() % 21) - 10;
    CHECK(exp_sum(power(w, k)).value == k * exp_sum(w).value);
  }
}

TEST_CASE("band rewriting preserves the sum") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    std::vector<GeneratorLetter> letters;
    for (int k = 0; k < 10; ++k) {
      const int t = 2 + static_cast<int>(rng() % (n - 1));
      const int s = 1 + static_cast<int>(rng() % (t - 1));
      letters.push_back(GeneratorLetter::band(t, s, (rng() & 1) ? 1 : -1));
    }
    const BraidWord w(BraidIndex(n), letters);
    CHECK(exp_sum(band_to_artin(w)) == exp_sum(w));
  }
}
