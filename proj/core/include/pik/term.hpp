#pragma once

#include <memory>
#include <string>

#include "pik/common.hpp"

namespace pik {

/**
 * A program of the free model: an immutable tree over the constructors
 *
 *   Id(n)            identity on object n
 *   SwapPlus(m, n)   block symmetry sigma_+ : m + n -> n + m  (X = SwapPlus(1,1))
 *   Zeta(j)          scalar zeta^j : 1 -> 1
 *   V                square root of X : 2 -> 2
 *   Comp(g, f)       g after f
 *   Sum(a, b)        a (+) b
 *   Kron(a, b)       a (x) b  (derived; eliminated by elaborate_kron)
 *   Scale(j, t)      zeta^j . t (sugar for Kron(Zeta(j), t))
 *
 * Every well-formed term is an endomap; dims are computed, not stored.
 * Terms are values over shared immutable nodes: cheap to copy and thread-safe.
 */
class Term {
public:
    enum class Kind { Id, SwapPlus, Zeta, V, Comp, Sum, Kron, Scale };

    static Term id(long n);
    static Term swap_plus(long m, long n);
    static Term zeta(long j);
    static Term v();
    static Term comp(Term g, Term f);
    static Term sum(Term a, Term b);
    static Term kron(Term a, Term b);
    static Term scale(long j, Term t);

    Kind kind() const;
    /// Id object size.
    long size() const;
    /// SwapPlus block sizes.
    long swap_m() const;
    long swap_n() const;
    /// Zeta or Scale exponent.
    long exponent() const;
    /// Comp: first() is applied first (the f in g after f). Sum/Kron: left summand/factor.
    const Term& first() const;
    const Term& second() const;
    /// Scale body.
    const Term& body() const;

    bool operator==(const Term& rhs) const; // structural
    bool operator!=(const Term& rhs) const { return !(*this == rhs); }

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/**
 * Check well-formedness and return the object the term acts on.
 * Composition mismatches are reported with a path into the tree.
 */
long term_dim(const Term& t);

/// (dom, cod); both equal term_dim for every Pi_k term.
std::pair<long, long> well_formed(const Term& t);

} // namespace pik
