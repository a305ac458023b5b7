#pragma once

#include <atomic>

#include "pik/eval.hpp"

namespace pik {

struct SynthesisResult {
    Term term;        // built from level-2 generators; eval(term, 2) equals the input exactly
    long gate_count;  // number of primitive one- and two-level operations emitted
    long max_den_exp_seen; // largest entry den_exp over all intermediate reduction states
};

/**
 * Exact synthesis at k = 2: given any unitary over D[zeta_2] = Z[1/2, i],
 * produce a term denoting it exactly.
 *
 * Column-by-column reduction to the identity with two-level operations
 * (V-type mixing, diag(1, i^t) phases, transpositions), driven by a strict
 * descent on the (1+i)-adic valuation of the column denominator. The result
 * is a flat composition chain; gate_count is reported, not minimised.
 *
 * Deterministic: identical inputs yield structurally identical terms.
 * Pass `cancel` for cooperative interruption of long syntheses.
 */
SynthesisResult synth(const ExactMatrix& u, const std::atomic<bool>* cancel = nullptr);

/// Synthesise a canonical representative of t's equality class: synth(eval(t, 2)).
SynthesisResult normalize(const Term& t, const std::atomic<bool>* cancel = nullptr);

} // namespace pik
