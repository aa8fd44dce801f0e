#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braid/word.hpp"

namespace braid {

/// Text syntax for braid words (ASCII only, byte-deterministic):
///
///   word := "1" | term (WS term)*
///   term := gen ("^" sint)?
///   gen  := "s" uint | "a(" uint "," uint ")"
///   sint := ("-")? uint
///   WS   := one or more of space, tab
///
/// "s3^-2" is two letters s3^-1; "a(3,1)" is the band generator crossing
/// strands 3 and 1; a bare "1" is the identity word. Exponents expand to
/// unit letters on parse, so word length always counts unit letters.

/// Throws SyntaxError (byte offset, expected token) or OutOfRangeLetter
/// (byte offset) against the given index.
BraidWord parse_word(std::string_view text, BraidIndex index);

/// Canonical rendering: runs of identical letters compressed to g^p, the
/// identity word rendered as "1". parse_word(format_word(w)) == w
/// letter-for-letter.
std::string format_word(const BraidWord& w);

/// Reads TAB-separated word pairs, one per line. Empty lines and lines
/// starting with '#' are skipped. Any bad line aborts the batch with a
/// SyntaxError carrying its 1-based line number.
std::vector<std::pair<BraidWord, BraidWord>> parse_batch(std::istream& in,
                                                         BraidIndex index);

}  // namespace braid
