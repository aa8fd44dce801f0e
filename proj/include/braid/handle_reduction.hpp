#pragma once

#include <cstdint>

#include "braid/word.hpp"

namespace braid {

struct HandleReductionOptions {
  /// Safety cap on rewriting steps per call. Reduction always terminates,
  /// so exceeding the cap signals a defect; it raises NonTermination.
  std::uint64_t step_limit = 1'000'000;
};

/// A complete word-problem solver independent of the normal-form engine.
///
/// A handle is a subword s_i^e u s_i^-e where u contains neither s_i nor
/// s_{i-1}. Reduction deletes the flanking pair and rewrites each
/// s_{i+1}^d inside u as s_{i+1}^-e s_i^d s_{i+1}^e, then reduces freely;
/// the leftmost-ending handle is rewritten first. The output is a freely
/// reduced, handle-free word for the same braid (in elementary letters),
/// and it is empty exactly when the input represents the identity.
BraidWord handle_reduce(const BraidWord& w,
                        const HandleReductionOptions& options = {});

/// Decides u = v by reducing u . v^-1 to the empty word.
/// Throws IndexMismatch; propagates NonTermination.
bool handle_equal(const BraidWord& u, const BraidWord& v,
                  const HandleReductionOptions& options = {});

}  // namespace braid
