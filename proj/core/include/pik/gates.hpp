#pragma once

#include <vector>

#include "pik/term.hpp"

namespace pik {

// Derived gate builders. Each takes k explicitly and emits concrete Zeta
// exponents; terms never carry symbolic exponents.
namespace gate {

Term x();                      // SwapPlus(1,1)
Term minus_one(Precision k);   // Zeta(2^{k-1})
Term s(Precision k);           // Id(1) (+) Zeta(2^{k-2})
Term t(Precision k);           // Id(1) (+) Zeta(1)
Term z(Precision k);           // Id(1) (+) Zeta(2^{k-1})
Term omega(Precision k);       // Zeta(2^{k-3}), k >= 3
Term h(Precision k);           // omega^7 . (T^{2^{k-2}} V T^{2^{k-2}}), k >= 3
Term ctrl(const Term& t);      // Id(dom t) (+) t
Term cphase(Precision k, int d); // Id(3) (+) Zeta(2^{k-d}), 2 <= d <= k

} // namespace gate

/// t composed with itself n times (n >= 1).
Term comp_pow(const Term& t, long n);

/// Left-associated n-fold sum t (+) ... (+) t.
Term n_fold_sum(const Term& t, long n);

/// Comp(g, f) with identity factors dropped.
Term comp_simplified(Term g, Term f);

/**
 * A term over {Id, SwapPlus(1,1), Sum, Comp} denoting the permutation
 * basis j -> p[j], obtained by bubble-sort decomposition into adjacent
 * transpositions.
 */
Term perm_to_term(const std::vector<long>& p);

/**
 * The multiplicative symmetry sigma_x : m (x) n -> n (x) m as a term over the
 * additive fragment only ({Id, SwapPlus, Sum, Comp}). Denotes the transpose of
 * the lexicographic m-by-n grid: index i*n + j maps to j*m + i.
 */
Term sigma_tensor(long m, long n);

/// The transpose permutation sigma_tensor denotes, as an index map.
std::vector<long> transpose_permutation(long m, long n);

/**
 * Structural conjugate: zeta -> -zeta on every scalar, homomorphic in
 * everything else. Kron/Scale nodes are elaborated away first.
 */
Term term_conj(const Term& t, Precision k);

/**
 * Structural inverse: SwapPlus(m,n) -> SwapPlus(n,m), Zeta(j) -> Zeta(-j),
 * V -> V^3, contravariant on Comp, homomorphic on Sum/Kron/Scale.
 */
Term term_dagger(const Term& t, Precision k);

/**
 * Eliminate Kron and Scale: rewrite a (x) b into
 * sigma_x . (n-fold a) . sigma_x . (m-fold b) per the sums-only presentation
 * of the Kronecker product. Output denotes the same matrix and contains only
 * Id, SwapPlus, Zeta, V, Comp, Sum.
 */
Term elaborate_kron(const Term& t, Precision k);

/// Inclusion into the next precision level: Zeta(j) -> Zeta(2j) throughout.
Term lift_term(const Term& t);

/// True iff no Kron or Scale node occurs in t.
bool is_kron_free(const Term& t);

/// True iff t only uses Id, SwapPlus, Sum, Comp (the additive fragment).
bool is_additive_fragment(const Term& t);

} // namespace pik
