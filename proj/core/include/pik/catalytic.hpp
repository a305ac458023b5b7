#pragma once

#include "pik/eval.hpp"

namespace pik {

/**
 * The precision-lowering translation Phi_k from level k to level k-1,
 * doubling the object: an auxiliary wire of size 2 is adjoined as the major
 * tensor factor. Generator clauses:
 *
 *   Phi(id_n)        = id_{2n}
 *   Phi(swap(m,n))   = swap(m,n) (+) swap(m,n)
 *   Phi(zeta)        = X . (id (+) zeta_{k-1})
 *   Phi(V)           = V (+) V
 *
 * homomorphic on composition; on a (+) b the two doubled halves are
 * re-interleaved by conjugating with the distributor built from sigma_tensor
 * (the orientation is the one under which catalysis_check passes).
 * Kron/Scale nodes are elaborated away first. Requires k >= 3; the output
 * reads its Zeta exponents at level k-1.
 */
Term phi(const Term& t, Precision k);

/// The catalyst c_{k,n} = (H . T) (x) id_n at level k (k >= 3).
Term catalyst(Precision k, long n);

/**
 * The catalysis identity: c_{k,n} Phi_k(a) c_{k,n}^dagger = a (+) a*,
 * both sides evaluated exactly at level k (Phi output lifted back up).
 */
bool catalysis_check(const Term& a, Precision k);

/// eq(a, b) at level k  <=>  eq(Phi(a), Phi(b)) at level k-1.
bool precision_transfer_check(const Term& a, const Term& b, Precision k);

} // namespace pik
