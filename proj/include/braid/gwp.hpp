#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "braid/normal_form.hpp"
#include "braid/word.hpp"

namespace braid {

enum class NotPowerReason { ExpNotDivisible, ComparisonFailed };

/// Canonical forms of x^c and y, attached to a positive verdict as the
/// equality witness.
struct GwpCertificate {
  LeftCanonicalForm power_form;
  LeftCanonicalForm candidate_form;
};

/// Outcome of the cyclic-subgroup membership test for (x, y).
class GwpResult {
 public:
  enum class Verdict { Power, NotPower, ZeroExponentUnsupported };

  static GwpResult power(long long c, GwpCertificate certificate) {
    GwpResult r(Verdict::Power);
    r.exponent_ = c;
    r.certificate_ = std::move(certificate);
    return r;
  }
  static GwpResult not_power(NotPowerReason reason) {
    GwpResult r(Verdict::NotPower);
    r.reason_ = reason;
    return r;
  }
  static GwpResult zero_exponent_unsupported() {
    return GwpResult(Verdict::ZeroExponentUnsupported);
  }

  Verdict verdict() const { return verdict_; }
  bool is_power() const { return verdict_ == Verdict::Power; }

  /// The unique exponent c with x^c = y; meaningful only on Power.
  long long exponent() const { return exponent_; }
  /// Meaningful only on NotPower.
  NotPowerReason reason() const { return reason_; }
  const std::optional<GwpCertificate>& certificate() const {
    return certificate_;
  }

 private:
  explicit GwpResult(Verdict v) : verdict_(v) {}

  Verdict verdict_;
  long long exponent_ = 0;
  NotPowerReason reason_ = NotPowerReason::ExpNotDivisible;
  std::optional<GwpCertificate> certificate_;
};

/// Work counters for one membership decision.
struct StepStats {
  std::uint64_t letters_scanned = 0;  // exponent-sum passes over x and y
  std::uint64_t power_letters = 0;    // length of the formed word x^c
  std::uint64_t factor_ops = 0;       // normal-form work in the comparison
  std::uint64_t wall_ns = 0;
  int l_min = 0;  // smaller canonical length of the two compared braids
};

/// Decides whether y lies in the cyclic subgroup generated by x and
/// recovers the exponent.
///
/// The exponent sum pins down the only possible exponent: when it is
/// nonzero on x, c must equal exp(y)/exp(x), so membership reduces to the
/// single comparison x^c = y. Divisibility and the quotient are over
/// signed integers, so negative and zero exponents are found; exp(y) = 0
/// forces c = 0 and the test degenerates to the word problem for y.
/// Words x with exp(x) = 0 are refused with a distinct verdict: no
/// exponent candidate can be pinned down for them.
/// Throws IndexMismatch.
GwpResult gwp(const BraidWord& x, const BraidWord& y);

/// Same verdict as gwp, plus work counters and wall time.
std::pair<GwpResult, StepStats> gwp_with_stats(const BraidWord& x,
                                               const BraidWord& y);

}  // namespace braid
