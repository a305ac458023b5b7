#pragma once

#include <optional>

#include "pik/eval.hpp"

namespace pik {

/// Witness that eval(t1) = zeta^exponent * eval(t2); verified before return.
struct PhaseWitness {
    long exponent; // in [0, 2^k)
};

/// Witness that a (+) pad_left = a' (+) pad_right semantically.
struct ApproxWitness {
    Term pad_left;
    Term pad_right;
};

/**
 * The word problem: true iff eval(t1) = eval(t2) exactly. Semantic equality
 * coincides with provable equality in the free model, so this decides it.
 */
bool eq(const Term& t1, const Term& t2, Precision k);

/**
 * Equality up to a global phase from the scalar group: the candidate exponent
 * is read off the first nonzero entry and then verified globally.
 */
std::optional<PhaseWitness> eq_up_to_phase(const Term& t1, const Term& t2, Precision k);

/**
 * The auxiliary-qubit equivalence. Strong cancellativity of the matrix model
 * collapses it to plain equality, which is how it is decided.
 */
bool decide_approx(const Term& t1, const Term& t2, Precision k);

/// Check that w indeed witnesses a approx a'.
bool approx_witness_valid(const Term& a, const Term& a2, const ApproxWitness& w, Precision k);

/// Swap the two sides: a witness for the flipped relation.
ApproxWitness approx_witness_flip(const ApproxWitness& w);

/**
 * Transitivity pasting: from witnesses for a approx a' and a' approx a'',
 * produce (and verify) a witness for a approx a''.
 */
ApproxWitness approx_witness_compose(const Term& a, const Term& a2, const Term& a3,
                                     const ApproxWitness& w1, const ApproxWitness& w2,
                                     Precision k);

} // namespace pik
