#include "pik/eval.hpp"

namespace pik {

ExactMatrix v_matrix(Precision k) {
    // (1/2) [[1+i, 1-i], [1-i, 1+i]] with i = zeta^{2^{k-2}}
    const RingElem one = RingElem::one(k);
    const RingElem i = RingElem::zeta_pow(k, 1L << (k.k - 2));
    const RingElem half = RingElem::dyadic(k, 1, 1);
    const RingElem p = half * (one + i);
    const RingElem m = half * (one - i);
    return ExactMatrix(k, 2, 2, {p, m, m, p});
}

ExactMatrix swap_plus_matrix(Precision k, long m, long n) {
    std::vector<long> p(m + n);
    for (long j = 0; j < m; ++j)
        p[j] = n + j;
    for (long j = 0; j < n; ++j)
        p[m + j] = j;
    return ExactMatrix::permutation(k, p);
}

namespace {

ExactMatrix eval_rec(const Term& t, Precision k, const EvalOptions& opts) {
    switch (t.kind()) {
    case Term::Kind::Id:
        return ExactMatrix::identity(k, t.size());
    case Term::Kind::SwapPlus:
        return swap_plus_matrix(k, t.swap_m(), t.swap_n());
    case Term::Kind::Zeta:
        return ExactMatrix(k, 1, 1, {RingElem::zeta_pow(k, t.exponent())});
    case Term::Kind::V:
        return v_matrix(k);
    case Term::Kind::Comp: {
        ExactMatrix f = eval_rec(t.first(), k, opts);
        ExactMatrix g = eval_rec(t.second(), k, opts);
        if (g.cols() != f.rows())
            throw ShapeError("composition mismatch: " + std::to_string(g.cols()) + " vs " +
                             std::to_string(f.rows()));
        return g * f;
    }
    case Term::Kind::Sum:
        return direct_sum(eval_rec(t.first(), k, opts), eval_rec(t.second(), k, opts));
    case Term::Kind::Kron:
        return kron(eval_rec(t.first(), k, opts), eval_rec(t.second(), k, opts));
    case Term::Kind::Scale:
        return eval_rec(t.body(), k, opts).scaled(RingElem::zeta_pow(k, t.exponent()));
    }
    throw ValidationError("unreachable term kind");
}

} // namespace

ExactMatrix eval(const Term& t, Precision k, const EvalOptions& opts) {
    const long dim = term_dim(t); // validates composition arities up front
    if (dim > opts.max_dim)
        throw ValidationError("term acts on object " + std::to_string(dim) +
                              " exceeding the evaluation guard " + std::to_string(opts.max_dim));
    return eval_rec(t, k, opts);
}

} // namespace pik
