#include "pik/synth.hpp"

#include <vector>

namespace pik {

namespace {

const Precision kTwo(2);

/// Gaussian integer a + b*i with arbitrary-precision parts.
struct Gauss {
    Integer a, b;

    bool is_zero() const { return a == 0 && b == 0; }
    /// Divisible by pi = 1 + i  <=>  a + b is even.
    bool pi_even() const { return mpz_even_p(Integer(a + b).get_mpz_t()); }
    Gauss times_i() const { return Gauss{-b, a}; }
    /// Exact division by pi: w / (1+i) = ((a+b) + (b-a)i) / 2.
    Gauss div_pi() const { return Gauss{(a + b) >> 1, (b - a) >> 1}; }
    /// Residue class mod 2 as a 2-bit code (a mod 2, b mod 2).
    int mod2() const {
        return (mpz_odd_p(a.get_mpz_t()) ? 1 : 0) | (mpz_odd_p(b.get_mpz_t()) ? 2 : 0);
    }
};

Gauss from_ring(const RingElem& e, long lift_exp) {
    // e = (c0 + c1 i)/2^den_exp at k=2; scale up to the common denominator.
    const long shift = lift_exp - e.den_exp();
    return Gauss{e.coeffs()[0] << shift, e.coeffs()[1] << shift};
}


enum class OpKind { VMix, Phase, Swap };

struct TwoLevelOp {
    OpKind kind;
    long p, q; // rows touched (q unused for Phase)
    int t;     // phase exponent for Phase, in 1..3
};

/// Row operation on the working matrix.
void apply_op(ExactMatrix& u, const TwoLevelOp& op) {
    const long n = u.cols();
    switch (op.kind) {
    case OpKind::Swap:
        for (long j = 0; j < n; ++j) {
            RingElem tmp = u.at(op.p, j);
            u.set(op.p, j, u.at(op.q, j));
            u.set(op.q, j, tmp);
        }
        return;
    case OpKind::Phase: {
        const RingElem phase = RingElem::zeta_pow(kTwo, op.t);
        for (long j = 0; j < n; ++j)
            u.set(op.p, j, phase * u.at(op.p, j));
        return;
    }
    case OpKind::VMix: {
        const RingElem one = RingElem::one(kTwo);
        const RingElem i = RingElem::zeta_pow(kTwo, 1);
        const RingElem half = RingElem::dyadic(kTwo, 1, 1);
        const RingElem vp = half * (one + i);
        const RingElem vm = half * (one - i);
        for (long j = 0; j < n; ++j) {
            const RingElem rp = u.at(op.p, j);
            const RingElem rq = u.at(op.q, j);
            u.set(op.p, j, vp * rp + vm * rq);
            u.set(op.q, j, vm * rp + vp * rq);
        }
        return;
    }
    }
}

/// Embed a 2x2 gate term at contiguous coordinates (p, p+1) of an n-dim object.
Term embed_adjacent(Term g2, long p, long n) {
    Term t = std::move(g2);
    if (p > 0)
        t = Term::sum(Term::id(p), std::move(t));
    if (p + 2 < n)
        t = Term::sum(std::move(t), Term::id(n - p - 2));
    return t;
}

/// Embed a 2x2 gate term at coordinates (p, q), p < q, of an n-dim object.
Term embed_two_level(const Term& g2, long p, long q, long n) {
    if (q == p + 1)
        return embed_adjacent(g2, p, n);
    // Conjugate by the cycle that brings coordinate q next to p.
    std::vector<long> fwd(n), bwd(n);
    for (long x = 0; x < n; ++x)
        fwd[x] = x;
    for (long x = p + 1; x < q; ++x)
        fwd[x] = x + 1;
    fwd[q] = p + 1;
    for (long x = 0; x < n; ++x)
        bwd[fwd[x]] = x;
    return Term::comp(perm_to_term(bwd),
                      Term::comp(embed_adjacent(g2, p, n), perm_to_term(fwd)));
}

Term embed_phase(int t, long p, long n) {
    Term ph = Term::zeta(t);
    if (p > 0)
        ph = Term::sum(Term::id(p), std::move(ph));
    if (p + 1 < n)
        ph = Term::sum(std::move(ph), Term::id(n - p - 1));
    return ph;
}

/// Term denoting the inverse of a recorded row operation.
Term op_dagger_term(const TwoLevelOp& op, long n) {
    switch (op.kind) {
    case OpKind::Swap: {
        std::vector<long> perm(n);
        for (long x = 0; x < n; ++x)
            perm[x] = x;
        std::swap(perm[op.p], perm[op.q]);
        return perm_to_term(perm);
    }
    case OpKind::Phase:
        return embed_phase((4 - op.t) % 4, op.p, n);
    case OpKind::VMix:
        return embed_two_level(comp_pow(Term::v(), 3), op.p, op.q, n);
    }
    throw ValidationError("unreachable op kind");
}

void check_cancel(const std::atomic<bool>* cancel) {
    if (cancel != nullptr && cancel->load(std::memory_order_relaxed))
        throw Cancelled();
}

} // namespace

SynthesisResult synth(const ExactMatrix& input, const std::atomic<bool>* cancel) {
    if (input.precision() != kTwo)
        throw ValidationError("synthesis is defined at k = 2 only");
    if (!input.is_square())
        throw ShapeError("synthesis input must be square");
    if (!input.is_unitary())
        throw ValidationError("synthesis input must be unitary");

    const long n = input.rows();
    ExactMatrix u = input;
    std::vector<TwoLevelOp> ops;
    long max_den = 0;

    auto record = [&](TwoLevelOp op) {
        apply_op(u, op);
        ops.push_back(op);
    };

    for (long col = 0; col < n; ++col) {
        for (;;) {
            check_cancel(cancel);

            // Extract the active column over a common denominator 2^shift and
            // strip the full (1+i)-adic content to find the true valuation m.
            long shift = 0;
            for (long r = col; r < n; ++r)
                shift = std::max(shift, u.at(r, col).den_exp());
            max_den = std::max(max_den, shift);
            std::vector<Gauss> w;
            w.reserve(n - col);
            for (long r = col; r < n; ++r)
                w.push_back(from_ring(u.at(r, col), shift));
            long m = 2 * shift;
            while (m > 0) {
                bool all_even = true;
                for (const Gauss& g : w)
                    if (!g.is_zero() && !g.pi_even()) {
                        all_even = false;
                        break;
                    }
                if (!all_even)
                    break;
                for (Gauss& g : w)
                    g = g.div_pi();
                --m;
            }

            if (m == 0) {
                // Exactly one unit entry remains; move it home and kill its phase.
                long unit_row = -1;
                int phase = 0;
                for (long r = col; r < n; ++r) {
                    const Gauss& g = w[r - col];
                    if (g.is_zero())
                        continue;
                    if (unit_row >= 0)
                        throw ValidationError("synthesis invariant broken: multiple units");
                    unit_row = r;
                    if (g.a == 1 && g.b == 0) phase = 0;
                    else if (g.a == 0 && g.b == 1) phase = 1;
                    else if (g.a == -1 && g.b == 0) phase = 2;
                    else if (g.a == 0 && g.b == -1) phase = 3;
                    else
                        throw ValidationError("synthesis invariant broken: non-unit remainder");
                }
                if (unit_row < 0)
                    throw ValidationError("synthesis invariant broken: zero column");
                if (unit_row != col)
                    record({OpKind::Swap, col, unit_row, 0});
                if (phase != 0)
                    record({OpKind::Phase, col, 0, (4 - phase) % 4});
                break;
            }

            // Pair up the pi-odd entries (always an even count) and clear them.
            std::vector<long> odd;
            for (long r = col; r < n; ++r)
                if (!w[r - col].pi_even())
                    odd.push_back(r);
            if (odd.size() % 2 != 0)
                throw ValidationError("synthesis invariant broken: odd pi-odd count");
            if (odd.empty())
                throw ValidationError("synthesis invariant broken: no progress");
            for (size_t idx = 0; idx + 1 < odd.size(); idx += 2) {
                const long p = odd[idx], q = odd[idx + 1];
                const Gauss& wp = w[p - col];
                const Gauss& wq = w[q - col];
                // V clears the pair when w_p = i * w_q (mod 2); otherwise a
                // phase on q establishes that congruence first.
                if (wp.mod2() != wq.times_i().mod2())
                    record({OpKind::Phase, q, 0, 1});
                record({OpKind::VMix, p, q, 0});
            }
        }
    }

    if (u != ExactMatrix::identity(kTwo, n))
        throw ValidationError("synthesis did not reach the identity");

    // u = op_1^dag ... op_T^dag; compose so the last recorded op applies first.
    Term result = Term::id(n);
    if (!ops.empty()) {
        result = op_dagger_term(ops.back(), n);
        for (size_t i = ops.size() - 1; i-- > 0;)
            result = Term::comp(op_dagger_term(ops[i], n), std::move(result));
    }

    SynthesisResult out{std::move(result), static_cast<long>(ops.size()), max_den};
    if (eval(out.term, kTwo) != input)
        throw ValidationError("synthesised term failed exact verification");
    return out;
}

SynthesisResult normalize(const Term& t, const std::atomic<bool>* cancel) {
    return synth(eval(t, kTwo), cancel);
}

} // namespace pik
