#include "braid/handle_reduction.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace braid {

namespace {

struct SignedLetter {
  int gen;
  int sign;
};

void free_reduce_inplace(std::vector<SignedLetter>& v) {
  std::vector<SignedLetter> out;
  out.reserve(v.size());
  for (const auto& l : v) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  v = std::move(out);
}

// Leftmost-ending handle: scanning left to right, letter j closes a handle
// with the nearest previous occurrence p of the same generator when the
// signs are opposite and no s_{i-1} sits after p. Nearestness already
// rules out an s_i in between.
std::optional<std::pair<std::size_t, std::size_t>> find_handle(
    const std::vector<SignedLetter>& v, int generators) {
  std::vector<long long> last(generators + 1, -1);
  for (std::size_t j = 0; j < v.size(); ++j) {
    const int i = v[j].gen;
    const long long p = last[i];
    if (p >= 0 && v[p].sign == -v[j].sign) {
      const long long blocker = i >= 2 ? last[i - 1] : -1;
      if (blocker < p)
        return std::make_pair(static_cast<std::size_t>(p), j);
    }
    last[i] = static_cast<long long>(j);
  }
  return std::nullopt;
}

}  // namespace

BraidWord handle_reduce(const BraidWord& w,
                        const HandleReductionOptions& options) {
  const BraidWord artin = band_to_artin(w);
  const int generators = artin.index().artin_generators();

  std::vector<SignedLetter> v;
  v.reserve(artin.length());
  for (const auto& l : artin.letters()) v.push_back({l.artin_index(), l.sign});
  free_reduce_inplace(v);

  std::uint64_t steps = 0;
  while (auto handle = find_handle(v, generators)) {
    if (++steps > options.step_limit) throw NonTermination(options.step_limit);
    const auto [p, j] = *handle;
    const int i = v[p].gen;
    const int e = v[p].sign;

    std::vector<SignedLetter> out;
    out.reserve(v.size() + 2 * (j - p));
    out.insert(out.end(), v.begin(), v.begin() + p);
    for (std::size_t k = p + 1; k < j; ++k) {
      if (v[k].gen == i + 1) {
        out.push_back({i + 1, -e});
        out.push_back({i, v[k].sign});
        out.push_back({i + 1, e});
      } else {
        out.push_back(v[k]);
      }
    }
    out.insert(out.end(), v.begin() + j + 1, v.end());
    free_reduce_inplace(out);
    v = std::move(out);
  }

  std::vector<GeneratorLetter> letters;
  letters.reserve(v.size());
  for (const auto& l : v)
    letters.push_back(GeneratorLetter::artin(l.gen, l.sign));
  return BraidWord(artin.index(), std::move(letters));
}

bool handle_equal(const BraidWord& u, const BraidWord& v,
                  const HandleReductionOptions& options) {
  if (u.index() != v.index())
    throw IndexMismatch(u.index().strands(), v.index().strands());
  return handle_reduce(concatenate(u, invert(v)), options).is_identity_word();
}

}  // namespace braid
