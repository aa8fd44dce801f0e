#pragma once

#include <cstdint>
#include <string_view>

#include "braid/sampling.hpp"
#include "braid/word.hpp"
#include "braid/word_io.hpp"

namespace braid::testutil {

/// Shorthand word literal for tests.
inline BraidWord W(int n, std::string_view text) {
  return parse_word(text, BraidIndex(n));
}

}  // namespace braid::testutil
