#include "braid/word_io.hpp"

#include <cstdlib>

namespace braid {

namespace {

constexpr long long kMaxExponentMagnitude = 1'000'000;

bool is_ws(char c) { return c == ' ' || c == '\t'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skip_ws() {
    while (!done() && is_ws(peek())) ++pos;
  }

  long long read_uint(const char* what) {
    if (done() || !is_digit(peek())) throw SyntaxError(pos, what);
    long long value = 0;
    while (!done() && is_digit(peek())) {
      value = value * 10 + (peek() - '0');
      if (value > kMaxExponentMagnitude)
        throw SyntaxError(pos, "a smaller number");
      ++pos;
    }
    return value;
  }

  void expect(char c, const char* what) {
    if (done() || peek() != c) throw SyntaxError(pos, what);
    ++pos;
  }
};

}  // namespace

BraidWord parse_word(std::string_view text, BraidIndex index) {
  Cursor cur{text};
  cur.skip_ws();
  if (cur.done()) throw SyntaxError(cur.pos, "a braid word");

  if (cur.peek() == '1') {
    ++cur.pos;
    cur.skip_ws();
    if (!cur.done()) throw SyntaxError(cur.pos, "end of input after \"1\"");
    return BraidWord::identity(index);
  }

  std::vector<GeneratorLetter> letters;
  while (!cur.done()) {
    const std::size_t letter_pos = cur.pos;
    GeneratorLetter base{};
    if (cur.peek() == 's') {
      ++cur.pos;
      const int i = static_cast<int>(cur.read_uint("a generator number"));
      base = GeneratorLetter::artin(i);
    } else if (cur.peek() == 'a') {
      ++cur.pos;
      cur.expect('(', "'('");
      const int t = static_cast<int>(cur.read_uint("a strand number"));
      cur.expect(',', "','");
      const int s = static_cast<int>(cur.read_uint("a strand number"));
      cur.expect(')', "')'");
      base = GeneratorLetter::band(t, s);
    } else {
      throw SyntaxError(cur.pos, "'s<i>' or 'a(t,s)'");
    }

    long long exponent = 1;
    if (!cur.done() && cur.peek() == '^') {
      ++cur.pos;
      bool negative = false;
      if (!cur.done() && cur.peek() == '-') {
        negative = true;
        ++cur.pos;
      }
      exponent = cur.read_uint("an exponent");
      if (negative) exponent = -exponent;
    }

    // Range-check before expanding so the error points at the letter.
    try {
      static_cast<void>(BraidWord(index, {base}));
    } catch (const OutOfRangeLetter& e) {
      throw OutOfRangeLetter(letter_pos, e.what());
    }

    const GeneratorLetter unit = exponent < 0 ? base.inverse() : base;
    for (long long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k)
      letters.push_back(unit);

    if (!cur.done() && !is_ws(cur.peek()))
      throw SyntaxError(cur.pos, "whitespace between terms");
    cur.skip_ws();
  }
  return BraidWord(index, std::move(letters));
}

std::string format_word(const BraidWord& w) {
  if (w.is_identity_word()) return "1";

  std::string out;
  const auto& ls = w.letters();
  std::size_t i = 0;
  while (i < ls.size()) {
    std::size_t run = 1;
    while (i + run < ls.size() && ls[i + run] == ls[i]) ++run;

    if (!out.empty()) out += ' ';
    const auto& l = ls[i];
    if (l.kind == GeneratorLetter::Kind::Artin) {
      out += 's';
      out += std::to_string(l.artin_index());
    } else {
      out += "a(";
      out += std::to_string(l.upper);
      out += ',';
      out += std::to_string(l.lower);
      out += ')';
    }
    const long long exponent = static_cast<long long>(run) * l.sign;
    if (exponent != 1) {
      out += '^';
      out += std::to_string(exponent);
    }
    i += run;
  }
  return out;
}

std::vector<std::pair<BraidWord, BraidWord>> parse_batch(std::istream& in,
                                                         BraidIndex index) {
  std::vector<std::pair<BraidWord, BraidWord>> pairs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;

    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw SyntaxError(0, "a TAB between the two words", lineno);
    if (line.find('\t', tab + 1) != std::string::npos)
      throw SyntaxError(tab + 1, "exactly one TAB per line", lineno);

    auto parse_field = [&](std::size_t begin, std::size_t count) {
      try {
        return parse_word(std::string_view(line).substr(begin, count), index);
      } catch (const SyntaxError& e) {
        throw SyntaxError(begin + e.position(), e.expected(), lineno);
      } catch (const OutOfRangeLetter& e) {
        throw SyntaxError(begin + e.position(), e.what(), lineno);
      }
    };
    BraidWord x = parse_field(0, tab);
    BraidWord y = parse_field(tab + 1, std::string::npos);
    pairs.emplace_back(std::move(x), std::move(y));
  }
  return pairs;
}

}  // namespace braid
