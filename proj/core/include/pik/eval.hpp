#pragma once

#include "pik/gates.hpp"
#include "pik/matrix.hpp"

namespace pik {

struct EvalOptions {
    /// Fail fast instead of exhausting memory on huge objects.
    long max_dim = 1L << 12;
};

/**
 * The interpretation of terms as unitary matrices over D[zeta_k]:
 * Id(n) -> I_n, SwapPlus -> block swap, Zeta(j) -> [zeta^j],
 * V -> (1/2)[[1+i, 1-i], [1-i, 1+i]] with i = zeta^{2^{k-2}},
 * homomorphic in Comp / Sum / Kron / Scale.
 * Zeta exponents are reduced mod 2^k during evaluation.
 */
ExactMatrix eval(const Term& t, Precision k, const EvalOptions& opts = {});

/// The matrix of the V generator at level k.
ExactMatrix v_matrix(Precision k);

/// The block-swap permutation matrix m + n -> n + m.
ExactMatrix swap_plus_matrix(Precision k, long m, long n);

} // namespace pik
