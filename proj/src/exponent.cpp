#include "braid/exponent.hpp"

namespace braid {

ExponentSum exp_sum(const BraidWord& w) {
  long long total = 0;
  for (const auto& l : w.letters()) total += l.sign;
  return ExponentSum{total};
}

}  // namespace braid
