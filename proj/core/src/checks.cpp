#include "pik/checks.hpp"

#include "pik/termgen.hpp"

namespace pik {

CheckReport check_axioms(Precision k) {
    CheckReport report;
    report.suite = "axioms";
    report.k = k.k;

    const Term v = Term::v();
    const Term x = gate::x();
    const Term s = gate::s(k);

    report.record("axiom1: V^2 = X", eval(Term::comp(v, v), k) == eval(x, k));

    const Term vsv = Term::comp(v, Term::comp(s, v));
    const Term svs = Term::comp(s, Term::comp(v, s));
    report.record("axiom2: VSV = SVS", eval(vsv, k) == eval(svs, k));

    // zeta^{2^k} = 1, checked both as a ring product and as a composition chain.
    RingElem pow = RingElem::one(k);
    const RingElem zeta = RingElem::zeta_pow(k, 1);
    for (long i = 0; i < k.order(); ++i)
        pow = pow * zeta;
    const bool ring_ok = pow == RingElem::one(k);
    const bool term_ok = eval(comp_pow(Term::zeta(1), k.order()), k) == eval(Term::id(1), k);
    report.record("axiom3: zeta^{2^k} = 1", ring_ok && term_ok);

    if (k.k >= 3) {
        const Term h = gate::h(k);
        report.record("HH = id", eval(Term::comp(h, h), k) == ExactMatrix::identity(k, 2));
        report.record("S^2 = Z", eval(Term::comp(s, s), k) == eval(gate::z(k), k));
        const Term t_chain = comp_pow(gate::t(k), 1L << (k.k - 2));
        report.record("T^{2^{k-2}} = S", eval(t_chain, k) == eval(s, k));
    }
    return report;
}

namespace {

/// delta_L : a (x) (b + c) -> (a (x) b) + (a (x) c), built from sigma_tensor.
Term delta_l(long a, long b, long c) {
    return comp_simplified(Term::sum(sigma_tensor(b, a), sigma_tensor(c, a)),
                           sigma_tensor(a, b + c));
}

} // namespace

CheckReport check_coherence(Precision k, int trials, std::uint64_t seed) {
    CheckReport report;
    report.suite = "coherence";
    report.k = k.k;
    report.trials = trials;
    Rng rng(seed);

    TermGenOptions opts;
    opts.max_depth = 3;

    bool annihilation = true, distrib = true, swap_square = true, interchange = true;
    for (int i = 0; i < trials; ++i) {
        // (i) annihilation O (x) A = O holds at the level of objects.
        const long n = rng.range(1, 6);
        annihilation = annihilation && (0 * n == 0) && (n * 0 == 0);

        // (ii) (f (+) g) (x) h = (f (x) h) (+) (g (x) h)
        const long a = rng.range(1, 3), b = rng.range(1, 3), c = rng.range(1, 3);
        const Term f = random_term(rng, k, a, opts);
        const Term g = random_term(rng, k, b, opts);
        const Term h = random_term(rng, k, c, opts);
        const ExactMatrix lhs = eval(Term::kron(Term::sum(f, g), h), k);
        const ExactMatrix rhs =
            direct_sum(eval(Term::kron(f, h), k), eval(Term::kron(g, h), k));
        distrib = distrib && (lhs == rhs);

        // (iii) sigma_+ compatibility: (sigma_+ (x) id_c) = sigma_+ of the multiplied blocks
        swap_square = swap_square &&
                      (eval(Term::kron(Term::swap_plus(a, b), Term::id(c)), k) ==
                       eval(Term::swap_plus(a * c, b * c), k));

        // interchange (id (x) g) . (f (x) id) = (f (x) id) . (id (x) g)
        const Term left = Term::kron(f, Term::id(b));
        const Term right = Term::kron(Term::id(a), g);
        interchange = interchange &&
                      (eval(Term::comp(right, left), k) == eval(Term::comp(left, right), k));
    }
    report.record("annihilation O(x)A = O", annihilation);
    report.record("right distributivity (f+g)(x)h", distrib);
    report.record("sigma_+ compatibility square", swap_square);
    report.record("interchange", interchange);

    // (iv) the four-summand delta_L diagram, exact on fixed small objects.
    bool delta_ok = true;
    for (long a2 = 1; a2 <= 2 && delta_ok; ++a2)
        for (long b2 = 1; b2 <= 2 && delta_ok; ++b2)
            for (long c2 = 1; c2 <= 2; ++c2)
                for (long d2 = 1; d2 <= 2; ++d2) {
                    // down the left leg via delta_L over (A+B), versus the split
                    // legs followed by id (+) sigma_+ (+) id.
                    const long A = a2, B = b2, C = c2, D = d2;
                    const Term down = delta_l(A + B, C, D);
                    const Term split = Term::sum(delta_l(A, C, D), delta_l(B, C, D));
                    const Term reshuffle = Term::sum(
                        Term::sum(Term::id(A * C), Term::swap_plus(A * D, B * C)),
                        Term::id(B * D));
                    if (eval(down, k) != eval(Term::comp(reshuffle, split), k)) {
                        delta_ok = false;
                        break;
                    }
                }
    report.record("delta_L four-summand diagram", delta_ok);
    return report;
}

} // namespace pik
