#include "braid/gwp.hpp"

#include <algorithm>
#include <chrono>

#include "braid/exponent.hpp"

namespace braid {

namespace {

GwpResult decide(const BraidWord& x, const BraidWord& y, StepStats& stats) {
  if (x.index() != y.index())
    throw IndexMismatch(x.index().strands(), y.index().strands());

  const long long ex = exp_sum(x).value;
  const long long ey = exp_sum(y).value;
  stats.letters_scanned = x.length() + y.length();

  if (ex == 0) return GwpResult::zero_exponent_unsupported();
  if (ey % ex != 0)
    return GwpResult::not_power(NotPowerReason::ExpNotDivisible);

  const long long c = ey / ex;  // the only possible exponent
  const BraidWord formed = power(x, c);
  stats.power_letters = formed.length();

  NormalFormStats nf;
  LeftCanonicalForm power_form = left_canonical_form(formed, &nf);
  LeftCanonicalForm candidate_form = left_canonical_form(y, &nf);
  stats.factor_ops = nf.factor_ops;
  stats.l_min = std::min(power_form.canonical_length(),
                         candidate_form.canonical_length());

  if (power_form == candidate_form)
    return GwpResult::power(
        c, GwpCertificate{std::move(power_form), std::move(candidate_form)});
  return GwpResult::not_power(NotPowerReason::ComparisonFailed);
}

}  // namespace

GwpResult gwp(const BraidWord& x, const BraidWord& y) {
  StepStats stats;
  return decide(x, y, stats);
}

std::pair<GwpResult, StepStats> gwp_with_stats(const BraidWord& x,
                                               const BraidWord& y) {
  StepStats stats;
  const auto t0 = std::chrono::steady_clock::now();
  GwpResult result = decide(x, y, stats);
  const auto t1 = std::chrono::steady_clock::now();
  stats.wall_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
  return {std::move(result), stats};
}

}  // namespace braid
