#include "pik/termgen.hpp"

#include "pik/gates.hpp"

namespace pik {

namespace {

Term leaf(Rng& rng, Precision k, long dim, const TermGenOptions& opts) {
    if (dim == 1) {
        return rng.flip() ? Term::zeta(rng.range(0, k.order() - 1)) : Term::id(1);
    }
    if (dim == 2) {
        switch (rng.below(opts.allow_h && k.k >= 3 ? 6 : 5)) {
        case 0: return opts.allow_v ? Term::v() : gate::x();
        case 1: return gate::x();
        case 2: return gate::s(k);
        case 3: return gate::t(k);
        case 4: return Term::id(2);
        default: return gate::h(k);
        }
    }
    if (rng.flip())
        return Term::id(dim);
    const long m = rng.range(1, dim - 1);
    return Term::swap_plus(m, dim - m);
}

Term gen(Rng& rng, Precision k, long dim, int depth, const TermGenOptions& opts) {
    if (depth <= 0)
        return leaf(rng, k, dim, opts);

    std::vector<long> divisors;
    if (opts.allow_kron)
        for (long d = 2; d * d <= dim; ++d)
            if (dim % d == 0)
                divisors.push_back(d);

    switch (rng.below(6)) {
    case 0:
        return leaf(rng, k, dim, opts);
    case 1:
        return Term::comp(gen(rng, k, dim, depth - 1, opts), gen(rng, k, dim, depth - 1, opts));
    case 2: {
        if (dim < 2)
            return leaf(rng, k, dim, opts);
        const long m = rng.range(1, dim - 1);
        return Term::sum(gen(rng, k, m, depth - 1, opts), gen(rng, k, dim - m, depth - 1, opts));
    }
    case 3: {
        if (divisors.empty())
            return gen(rng, k, dim, depth - 1, opts);
        const long d = divisors[rng.below(divisors.size())];
        Term a = gen(rng, k, d, depth - 1, opts);
        Term b = gen(rng, k, dim / d, depth - 1, opts);
        return rng.flip() ? Term::kron(std::move(a), std::move(b))
                          : Term::kron(std::move(b), std::move(a));
    }
    case 4:
        if (opts.allow_scale)
            return Term::scale(rng.range(0, k.order() - 1), gen(rng, k, dim, depth - 1, opts));
        return gen(rng, k, dim, depth - 1, opts);
    default:
        return Term::comp(gen(rng, k, dim, depth - 1, opts), leaf(rng, k, dim, opts));
    }
}

} // namespace

Term random_term(Rng& rng, Precision k, long dim, const TermGenOptions& opts) {
    if (dim < 1)
        throw ValidationError("term dimension must be positive");
    return gen(rng, k, dim, opts.max_depth, opts);
}

Term random_term_any_dim(Rng& rng, Precision k, long max_dim, const TermGenOptions& opts) {
    return random_term(rng, k, rng.range(1, max_dim), opts);
}

} // namespace pik
