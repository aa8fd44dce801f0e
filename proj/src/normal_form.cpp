#include "braid/normal_form.hpp"

#include <cstddef>
#include <utility>

namespace braid {

bool PermutationBraid::is_delta() const {
  const int n = degree();
  for (int x = 1; x <= n; ++x)
    if (perm_.apply(x) != n + 1 - x) return false;
  return true;
}

int PermutationBraid::word_length() const {
  const auto& img = perm_.image();
  int inv = 0;
  for (std::size_t i = 0; i < img.size(); ++i)
    for (std::size_t j = i + 1; j < img.size(); ++j)
      if (img[i] > img[j]) ++inv;
  return inv;
}

namespace {

// The image array is the working representation throughout: img[i] is the
// image of position i+1.

bool is_identity_image(const std::vector<int>& img) {
  for (std::size_t i = 0; i < img.size(); ++i)
    if (img[i] != static_cast<int>(i) + 1) return false;
  return true;
}

bool is_delta_image(const std::vector<int>& img) {
  const int n = static_cast<int>(img.size());
  for (int i = 0; i < n; ++i)
    if (img[i] != n - i) return false;
  return true;
}

// Conjugation by the half-twist: tau(P) = D^-1 P D, the flip i -> n-i on
// elementary letters.
std::vector<int> tau_image(const std::vector<int>& img) {
  const int n = static_cast<int>(img.size());
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = n + 1 - img[n - 1 - i];
  return out;
}

struct PairScratch {
  std::vector<int> a_inv, qc, prod, b_inv;
};

// Absorbs into A the largest chunk that keeps it a permutation braid:
// A <- A.C and B <- C^-1.B, where C is the meet of A's right complement
// and B in the prefix order. Returns false when the pair was already
// left-weighted (C trivial). The meet is taken greedily: divide both
// operands by any shared prefix letter until none exists; a prefix letter
// of an image array is a descent, and dividing by it swaps the two
// entries.
bool left_weight_pair(std::vector<int>& a, std::vector<int>& b,
                      PairScratch& s) {
  const int n = static_cast<int>(a.size());

  s.a_inv.resize(n);
  for (int i = 0; i < n; ++i) s.a_inv[a[i] - 1] = i + 1;

  // Left-weighted means every starting letter of B finishes A: descent i
  // of B implies descent i of A^-1.
  bool weighted = true;
  for (int i = 0; i + 1 < n; ++i) {
    if (b[i] > b[i + 1] && s.a_inv[i] < s.a_inv[i + 1]) {
      weighted = false;
      break;
    }
  }
  if (weighted) return false;

  // The pair product is invariant, so A' can be read back from it once the
  // new B is known: A' = (A.B).B'^-1.
  s.prod.resize(n);
  for (int i = 0; i < n; ++i) s.prod[i] = b[a[i] - 1];

  // Right complement of A: x -> n+1 - A^-1(x).
  s.qc.resize(n);
  for (int i = 0; i < n; ++i) s.qc[i] = n + 1 - s.a_inv[i];

  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (s.qc[i] > s.qc[i + 1] && b[i] > b[i + 1]) {
        std::swap(s.qc[i], s.qc[i + 1]);
        std::swap(b[i], b[i + 1]);
        progress = true;
      }
    }
  }

  s.b_inv.resize(n);
  for (int i = 0; i < n; ++i) s.b_inv[b[i] - 1] = i + 1;
  for (int i = 0; i < n; ++i) a[i] = s.b_inv[s.prod[i] - 1];
  return true;
}

}  // namespace

BraidWord delta_word(BraidIndex index) {
  std::vector<GeneratorLetter> letters;
  const int n = index.strands();
  letters.reserve(n * (n - 1) / 2);
  for (int k = 1; k < n; ++k)
    for (int j = k; j >= 1; --j) letters.push_back(GeneratorLetter::artin(j));
  return BraidWord(index, std::move(letters));
}

LeftCanonicalForm left_canonical_form(const BraidWord& w,
                                      NormalFormStats* stats) {
  const BraidWord artin = band_to_artin(w);
  const int n = artin.index().strands();
  std::uint64_t ops = 0;

  // Each letter becomes D^e . P with e in {0, -1}: a positive letter is a
  // permutation braid directly, a negative one is D^-1 times the
  // complement braid D s_i^-1 with image x -> tau_i(delta(x)). Pulling the
  // D^-1 powers to the front applies the flip tau once per negative letter
  // passed, so a factor is flipped when an odd number of negative letters
  // sit to its right.
  long long negatives = 0;
  for (const auto& l : artin.letters())
    if (l.sign < 0) ++negatives;
  const long long inf_start = -negatives;

  std::vector<std::vector<int>> factors;
  factors.reserve(artin.length());
  long long neg_seen = 0;
  for (const auto& l : artin.letters()) {
    ++ops;
    const int i = l.artin_index();
    std::vector<int> p(n);
    if (l.sign > 0) {
      for (int x = 1; x <= n; ++x) p[x - 1] = x;
      std::swap(p[i - 1], p[i]);
    } else {
      ++neg_seen;
      for (int x = 1; x <= n; ++x) {
        int v = n + 1 - x;
        if (v == i)
          v = i + 1;
        else if (v == i + 1)
          v = i;
        p[x - 1] = v;
      }
    }
    const long long neg_right = negatives - neg_seen;
    if (neg_right & 1) p = tau_image(p);
    if (!is_identity_image(p)) factors.push_back(std::move(p));
  }

  // Left-weighting: local pair transformations, processed left to right,
  // repeating until a whole pass makes no change. Factors that empty out
  // are dropped on the spot. A pass only needs to restart one pair left of
  // the earliest change of the previous pass; everything before that is
  // already weighted and untouched.
  PairScratch scratch;
  const std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t start = 0;
  for (;;) {
    std::size_t first_change = npos;
    std::size_t j = start;
    while (j + 1 < factors.size()) {
      ++ops;
      if (left_weight_pair(factors[j], factors[j + 1], scratch)) {
        if (first_change == npos) first_change = j;
        if (is_identity_image(factors[j + 1])) {
          factors.erase(factors.begin() + j + 1);
          continue;  // same left factor, new right neighbour
        }
      }
      ++j;
    }
    if (first_change == npos) break;
    start = first_change > 0 ? first_change - 1 : 0;
  }

  // Half-twist factors can only survive as a prefix; fold them into inf.
  long long inf = inf_start;
  std::size_t lead = 0;
  while (lead < factors.size() && is_delta_image(factors[lead])) {
    ++inf;
    ++lead;
  }
  std::vector<PermutationBraid> out;
  out.reserve(factors.size() - lead);
  for (std::size_t k = lead; k < factors.size(); ++k)
    out.emplace_back(Permutation(std::move(factors[k])));

  if (stats) stats->factor_ops += ops;
  return LeftCanonicalForm(artin.index(), inf, std::move(out));
}

bool equal(const BraidWord& u, const BraidWord& v, NormalFormStats* stats) {
  if (u.index() != v.index())
    throw IndexMismatch(u.index().strands(), v.index().strands());
  return left_canonical_form(u, stats) == left_canonical_form(v, stats);
}

int canonical_length(const BraidWord& w) {
  return left_canonical_form(w).canonical_length();
}

BraidWord lcf_to_word(const LeftCanonicalForm& form) {
  const BraidWord delta = delta_word(form.index());
  BraidWord out = power(delta, form.inf());
  for (const auto& factor : form.factors()) {
    // Peel prefix letters greedily: any descent position i of the image
    // starts a positive word, and dividing by it swaps the two entries.
    std::vector<int> img = factor.perm().image();
    std::vector<GeneratorLetter> letters;
    const int n = static_cast<int>(img.size());
    bool found = true;
    while (found) {
      found = false;
      for (int i = 0; i + 1 < n; ++i) {
        if (img[i] > img[i + 1]) {
          letters.push_back(GeneratorLetter::artin(i + 1));
          std::swap(img[i], img[i + 1]);
          found = true;
          break;
        }
      }
    }
    out = concatenate(out, BraidWord(form.index(), std::move(letters)));
  }
  return out;
}

}  // namespace braid
