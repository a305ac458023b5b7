#include "pik/catalytic.hpp"

#include "pik/decide.hpp"

namespace pik {

namespace {

/// Distributor 2 (x) (m+n) -> (2 (x) m) (+) (2 (x) n), aux factor major on each side.
Term distributor(long m, long n) {
    return comp_simplified(Term::sum(sigma_tensor(m, 2), sigma_tensor(n, 2)),
                           sigma_tensor(2, m + n));
}

Term distributor_inv(long m, long n) {
    return comp_simplified(sigma_tensor(m + n, 2),
                           Term::sum(sigma_tensor(2, m), sigma_tensor(2, n)));
}

Term phi_rec(const Term& t, Precision k) {
    switch (t.kind()) {
    case Term::Kind::Id:
        return Term::id(2 * t.size());
    case Term::Kind::SwapPlus:
        return Term::sum(t, t);
    case Term::Kind::V:
        return Term::sum(Term::v(), Term::v());
    case Term::Kind::Zeta: {
        // zeta_k^j = (X . (id (+) zeta_{k-1}))^j; closed form with j = 2r + s:
        // a diagonal zeta_{k-1}^r on both wires, then one leftover step if s = 1.
        const long order = k.order();
        long j = t.exponent() % order;
        if (j < 0)
            j += order;
        const long r = j / 2;
        const long s = j % 2;
        Term step = Term::comp(gate::x(), Term::sum(Term::id(1), Term::zeta(1)));
        Term diag = Term::sum(Term::zeta(r), Term::zeta(r));
        if (s == 0)
            return r == 0 ? Term::id(2) : diag;
        return r == 0 ? step : Term::comp(diag, step);
    }
    case Term::Kind::Comp:
        return Term::comp(phi_rec(t.second(), k), phi_rec(t.first(), k));
    case Term::Kind::Sum: {
        const long m = term_dim(t.first());
        const long n = term_dim(t.second());
        const Term halves = Term::sum(phi_rec(t.first(), k), phi_rec(t.second(), k));
        return Term::comp(distributor_inv(m, n), Term::comp(halves, distributor(m, n)));
    }
    case Term::Kind::Kron:
    case Term::Kind::Scale:
        throw ValidationError("phi is defined on the elaborated grammar only");
    }
    throw ValidationError("unreachable term kind");
}

} // namespace

Term phi(const Term& t, Precision k) {
    if (k.k < 3)
        throw ValidationError("phi requires k >= 3");
    return phi_rec(elaborate_kron(t, k), k);
}

Term catalyst(Precision k, long n) {
    if (k.k < 3)
        throw ValidationError("catalyst requires k >= 3");
    if (n < 1)
        throw ValidationError("catalyst size must be positive");
    return Term::kron(Term::comp(gate::h(k), gate::t(k)), Term::id(n));
}

bool catalysis_check(const Term& a, Precision k) {
    const long n = term_dim(a);
    const Term c = catalyst(k, n);
    const Term lifted = lift_term(phi(a, k));
    const Term lhs = Term::comp(c, Term::comp(lifted, term_dagger(c, k)));
    const Term rhs = Term::sum(a, term_conj(a, k));
    return eval(lhs, k) == eval(rhs, k);
}

bool precision_transfer_check(const Term& a, const Term& b, Precision k) {
    const bool upstairs = eq(a, b, k);
    const bool downstairs = eq(phi(a, k), phi(b, k), Precision(k.k - 1));
    return upstairs == downstairs;
}

} // namespace pik
