#include "pik/gates.hpp"

namespace pik {

namespace gate {

Term x() { return Term::swap_plus(1, 1); }

Term minus_one(Precision k) { return Term::zeta(1L << (k.k - 1)); }

Term s(Precision k) { return Term::sum(Term::id(1), Term::zeta(1L << (k.k - 2))); }

Term t(Precision k) {
    (void)k;
    return Term::sum(Term::id(1), Term::zeta(1));
}

Term z(Precision k) { return Term::sum(Term::id(1), Term::zeta(1L << (k.k - 1))); }

Term omega(Precision k) {
    if (k.k < 3)
        throw ValidationError("omega requires k >= 3");
    return Term::zeta(1L << (k.k - 3));
}

Term h(Precision k) {
    if (k.k < 3)
        throw ValidationError("H requires k >= 3");
    const Term s_layer = comp_pow(t(k), 1L << (k.k - 2)); // T^{2^{k-2}}
    return Term::scale(7L << (k.k - 3), Term::comp(s_layer, Term::comp(Term::v(), s_layer)));
}

Term ctrl(const Term& t) { return Term::sum(Term::id(term_dim(t)), t); }

Term cphase(Precision k, int d) {
    if (d < 2 || d > k.k)
        throw ValidationError("cphase(" + std::to_string(d) + ") requires 2 <= d <= k");
    return Term::sum(Term::id(3), Term::zeta(1L << (k.k - d)));
}

} // namespace gate

Term comp_pow(const Term& t, long n) {
    if (n < 1)
        throw ValidationError("comp_pow requires n >= 1");
    Term acc = t;
    for (long i = 1; i < n; ++i)
        acc = Term::comp(t, acc);
    return acc;
}

Term n_fold_sum(const Term& t, long n) {
    if (n < 1)
        throw ValidationError("n_fold_sum requires n >= 1");
    Term acc = t;
    for (long i = 1; i < n; ++i)
        acc = Term::sum(acc, t);
    return acc;
}

Term comp_simplified(Term g, Term f) {
    if (g.kind() == Term::Kind::Id)
        return f;
    if (f.kind() == Term::Kind::Id)
        return g;
    return Term::comp(std::move(g), std::move(f));
}

namespace {

/// Adjacent transposition (j, j+1) on n wires.
Term adjacent_swap(long n, long j) {
    Term t = gate::x();
    if (j > 0)
        t = Term::sum(Term::id(j), std::move(t));
    if (j + 2 < n)
        t = Term::sum(std::move(t), Term::id(n - j - 2));
    return t;
}

} // namespace

Term perm_to_term(const std::vector<long>& p) {
    const long n = static_cast<long>(p.size());
    if (n == 0)
        throw ValidationError("empty permutation");
    std::vector<bool> seen(n, false);
    for (long v : p) {
        if (v < 0 || v >= n || seen[v])
            throw ValidationError("permutation is not a bijection");
        seen[v] = true;
    }
    // Bubble-sort arr into the identity; each recorded swap j is an adjacent
    // transposition tau_j with p = tau_last . ... . tau_first.
    std::vector<long> arr(p);
    std::vector<long> swaps;
    bool moved = true;
    while (moved) {
        moved = false;
        for (long j = 0; j + 1 < n; ++j) {
            if (arr[j] > arr[j + 1]) {
                std::swap(arr[j], arr[j + 1]);
                swaps.push_back(j);
                moved = true;
            }
        }
    }
    if (swaps.empty())
        return Term::id(n);
    Term acc = adjacent_swap(n, swaps.front());
    for (size_t i = 1; i < swaps.size(); ++i)
        acc = Term::comp(adjacent_swap(n, swaps[i]), std::move(acc));
    return acc;
}

std::vector<long> transpose_permutation(long m, long n) {
    std::vector<long> p(m * n);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < n; ++j)
            p[i * n + j] = j * m + i;
    return p;
}

Term sigma_tensor(long m, long n) {
    if (m < 1 || n < 1)
        throw ValidationError("sigma_tensor requires positive factors");
    if (m == 1 || n == 1)
        return Term::id(m * n);
    return perm_to_term(transpose_permutation(m, n));
}

Term term_conj(const Term& t, Precision k) {
    switch (t.kind()) {
    case Term::Kind::Id:
    case Term::Kind::SwapPlus:
    case Term::Kind::V:
        return t;
    case Term::Kind::Zeta: {
        // (zeta^j)* = (-zeta)^j = zeta^{j(2^{k-1}+1)}
        const long order = k.order();
        long j = t.exponent() % order;
        if (j < 0)
            j += order;
        return Term::zeta(j * ((order / 2) + 1) % order);
    }
    case Term::Kind::Comp:
        return Term::comp(term_conj(t.second(), k), term_conj(t.first(), k));
    case Term::Kind::Sum:
        return Term::sum(term_conj(t.first(), k), term_conj(t.second(), k));
    case Term::Kind::Kron:
    case Term::Kind::Scale:
        return term_conj(elaborate_kron(t, k), k);
    }
    throw ValidationError("unreachable term kind");
}

Term term_dagger(const Term& t, Precision k) {
    switch (t.kind()) {
    case Term::Kind::Id:
        return t;
    case Term::Kind::SwapPlus:
        return Term::swap_plus(t.swap_n(), t.swap_m());
    case Term::Kind::Zeta:
        return Term::zeta(-t.exponent());
    case Term::Kind::V:
        return comp_pow(Term::v(), 3); // V^4 = id
    case Term::Kind::Comp:
        return Term::comp(term_dagger(t.first(), k), term_dagger(t.second(), k));
    case Term::Kind::Sum:
        return Term::sum(term_dagger(t.first(), k), term_dagger(t.second(), k));
    case Term::Kind::Kron:
        return Term::kron(term_dagger(t.first(), k), term_dagger(t.second(), k));
    case Term::Kind::Scale:
        return Term::scale(-t.exponent(), term_dagger(t.body(), k));
    }
    throw ValidationError("unreachable term kind");
}

Term elaborate_kron(const Term& t, Precision k) {
    switch (t.kind()) {
    case Term::Kind::Id:
    case Term::Kind::SwapPlus:
    case Term::Kind::Zeta:
    case Term::Kind::V:
        return t;
    case Term::Kind::Comp:
        return Term::comp(elaborate_kron(t.second(), k), elaborate_kron(t.first(), k));
    case Term::Kind::Sum:
        return Term::sum(elaborate_kron(t.first(), k), elaborate_kron(t.second(), k));
    case Term::Kind::Scale:
        return elaborate_kron(Term::kron(Term::zeta(t.exponent()), t.body()), k);
    case Term::Kind::Kron: {
        const Term a = elaborate_kron(t.first(), k);
        const Term b = elaborate_kron(t.second(), k);
        const long m = term_dim(a);
        const long n = term_dim(b);
        if (m == 1 && a.kind() == Term::Kind::Id)
            return b;
        if (n == 1 && b.kind() == Term::Kind::Id)
            return a;
        // a (x) b = sigma_{n,m} . (n copies of a) . sigma_{m,n} . (m copies of b)
        return comp_simplified(
            sigma_tensor(n, m),
            comp_simplified(n_fold_sum(a, n),
                            comp_simplified(sigma_tensor(m, n), n_fold_sum(b, m))));
    }
    }
    throw ValidationError("unreachable term kind");
}

Term lift_term(const Term& t) {
    switch (t.kind()) {
    case Term::Kind::Id:
    case Term::Kind::SwapPlus:
    case Term::Kind::V:
        return t;
    case Term::Kind::Zeta:
        return Term::zeta(2 * t.exponent());
    case Term::Kind::Comp:
        return Term::comp(lift_term(t.second()), lift_term(t.first()));
    case Term::Kind::Sum:
        return Term::sum(lift_term(t.first()), lift_term(t.second()));
    case Term::Kind::Kron:
        return Term::kron(lift_term(t.first()), lift_term(t.second()));
    case Term::Kind::Scale:
        return Term::scale(2 * t.exponent(), lift_term(t.body()));
    }
    throw ValidationError("unreachable term kind");
}

bool is_kron_free(const Term& t) {
    switch (t.kind()) {
    case Term::Kind::Id:
    case Term::Kind::SwapPlus:
    case Term::Kind::Zeta:
    case Term::Kind::V:
        return true;
    case Term::Kind::Comp:
    case Term::Kind::Sum:
        return is_kron_free(t.first()) && is_kron_free(t.second());
    case Term::Kind::Kron:
    case Term::Kind::Scale:
        return false;
    }
    return false;
}

bool is_additive_fragment(const Term& t) {
    switch (t.kind()) {
    case Term::Kind::Id:
    case Term::Kind::SwapPlus:
        return true;
    case Term::Kind::Comp:
    case Term::Kind::Sum:
        return is_additive_fragment(t.first()) && is_additive_fragment(t.second());
    default:
        return false;
    }
}

} // namespace pik
