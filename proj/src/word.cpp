#include "braid/word.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace braid {

namespace {

void check_letter(BraidIndex index, const GeneratorLetter& l,
                  std::size_t position) {
  const int n = index.strands();
  if (l.sign != 1 && l.sign != -1)
    throw OutOfRangeLetter(position, "letter sign must be +1 or -1");
  if (l.kind == GeneratorLetter::Kind::Artin) {
    const int i = l.artin_index();
    if (i < 1 || i > n - 1 || l.upper != i + 1)
      throw OutOfRangeLetter(
          position, "elementary letter s" + std::to_string(i) +
                        " out of range for braid index " + std::to_string(n));
  } else {
    if (l.lower < 1 || l.lower >= l.upper || l.upper > n)
      throw OutOfRangeLetter(
          position, "band letter a(" + std::to_string(l.upper) + "," +
                        std::to_string(l.lower) +
                        ") out of range for braid index " + std::to_string(n));
  }
}

}  // namespace

BraidWord::BraidWord(BraidIndex index, std::vector<GeneratorLetter> letters)
    : index_(index), letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i)
    check_letter(index_, letters_[i], i);
}

BraidWord invert(const BraidWord& w) {
  std::vector<GeneratorLetter> out;
  out.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(it->inverse());
  return BraidWord(w.index(), std::move(out));
}

BraidWord concatenate(const BraidWord& u, const BraidWord& v) {
  if (u.index() != v.index())
    throw IndexMismatch(u.index().strands(), v.index().strands());
  std::vector<GeneratorLetter> out;
  out.reserve(u.length() + v.length());
  out.insert(out.end(), u.letters().begin(), u.letters().end());
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.index(), std::move(out));
}

BraidWord power(const BraidWord& x, long long k) {
  if (k == 0) return BraidWord::identity(x.index());
  const BraidWord base = k > 0 ? x : invert(x);
  const unsigned long long reps = k > 0 ? static_cast<unsigned long long>(k)
                                        : -static_cast<unsigned long long>(k);
  std::vector<GeneratorLetter> out;
  out.reserve(base.length() * reps);
  for (unsigned long long r = 0; r < reps; ++r)
    out.insert(out.end(), base.letters().begin(), base.letters().end());
  return BraidWord(x.index(), std::move(out));
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<GeneratorLetter> out;
  out.reserve(w.length());
  for (const auto& l : w.letters()) {
    if (!out.empty() && cancels(out.back(), l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return BraidWord(w.index(), std::move(out));
}

BraidWord band_to_artin(const BraidWord& w) {
  std::vector<GeneratorLetter> out;
  out.reserve(w.length());
  for (const auto& l : w.letters()) {
    if (l.kind == GeneratorLetter::Kind::Artin) {
      out.push_back(l);
      continue;
    }
    const int t = l.upper, s = l.lower;
    if (t == s + 1) {
      out.push_back(GeneratorLetter::artin(s, l.sign));
      continue;
    }
    for (int j = t - 1; j > s; --j) out.push_back(GeneratorLetter::artin(j));
    out.push_back(GeneratorLetter::artin(s, l.sign));
    for (int j = s + 1; j < t; ++j)
      out.push_back(GeneratorLetter::artin(j, -1));
  }
  return BraidWord(w.index(), std::move(out));
}

namespace {

struct Move {
  enum Type { Commute, BraidRelation, DeletePair, InsertPair };
  Type type;
  std::size_t pos;
};

bool is_artin(const GeneratorLetter& l) {
  return l.kind == GeneratorLetter::Kind::Artin;
}

}  // namespace

BraidWord apply_random_relation(const BraidWord& w, std::uint64_t seed) {
  const auto& ls = w.letters();
  const std::size_t len = ls.size();

  std::vector<Move> moves;
  for (std::size_t p = 0; p + 1 < len; ++p) {
    if (is_artin(ls[p]) && is_artin(ls[p + 1])) {
      const int d = ls[p].artin_index() - ls[p + 1].artin_index();
      if (d > 1 || d < -1) moves.push_back({Move::Commute, p});
    }
    if (cancels(ls[p], ls[p + 1])) moves.push_back({Move::DeletePair, p});
  }
  for (std::size_t p = 0; p + 2 < len; ++p) {
    if (!is_artin(ls[p]) || !is_artin(ls[p + 1]) || !is_artin(ls[p + 2]))
      continue;
    const int i = ls[p].artin_index(), j = ls[p + 1].artin_index();
    if (ls[p + 2].artin_index() == i && (j == i + 1 || j == i - 1) &&
        ls[p].sign == ls[p + 1].sign && ls[p].sign == ls[p + 2].sign)
      moves.push_back({Move::BraidRelation, p});
  }
  for (std::size_t p = 0; p <= len; ++p) moves.push_back({Move::InsertPair, p});

  std::mt19937_64 rng(seed);
  const Move m = moves[rng() % moves.size()];

  std::vector<GeneratorLetter> out = ls;
  switch (m.type) {
    case Move::Commute:
      std::swap(out[m.pos], out[m.pos + 1]);
      break;
    case Move::BraidRelation: {
      const auto a = out[m.pos], b = out[m.pos + 1];
      out[m.pos] = b;
      out[m.pos + 1] = a;
      out[m.pos + 2] = b;
      break;
    }
    case Move::DeletePair:
      out.erase(out.begin() + m.pos, out.begin() + m.pos + 2);
      break;
    case Move::InsertPair: {
      const int i = 1 + static_cast<int>(rng() % w.index().artin_generators());
      const int s = (rng() & 1) ? +1 : -1;
      const GeneratorLetter g = GeneratorLetter::artin(i, s);
      out.insert(out.begin() + m.pos, {g, g.inverse()});
      break;
    }
  }
  return BraidWord(w.index(), std::move(out));
}

}  // namespace braid
