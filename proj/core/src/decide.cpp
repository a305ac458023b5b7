#include "pik/decide.hpp"

namespace pik {

namespace {

void check_same_dims(const Term& t1, const Term& t2) {
    const long d1 = term_dim(t1);
    const long d2 = term_dim(t2);
    if (d1 != d2)
        throw ShapeError("terms act on different objects: " + std::to_string(d1) + " vs " +
                         std::to_string(d2));
}

} // namespace

bool eq(const Term& t1, const Term& t2, Precision k) {
    check_same_dims(t1, t2);
    return eval(t1, k) == eval(t2, k);
}

std::optional<PhaseWitness> eq_up_to_phase(const Term& t1, const Term& t2, Precision k) {
    check_same_dims(t1, t2);
    const ExactMatrix u1 = eval(t1, k);
    const ExactMatrix u2 = eval(t2, k);

    // Locate the first entry where either matrix is nonzero.
    long r = -1, c = -1;
    for (long i = 0; i < u1.rows() && r < 0; ++i)
        for (long j = 0; j < u1.cols(); ++j)
            if (!u1.at(i, j).is_zero() || !u2.at(i, j).is_zero()) {
                r = i;
                c = j;
                break;
            }
    if (r < 0)
        return PhaseWitness{0}; // both zero matrices cannot occur for unitaries; be permissive
    if (u1.at(r, c).is_zero() || u2.at(r, c).is_zero())
        return std::nullopt;

    // The candidate exponent at that entry is unique; verify it globally.
    for (long j = 0; j < k.order(); ++j) {
        const RingElem phase = RingElem::zeta_pow(k, j);
        if (u1.at(r, c) != phase * u2.at(r, c))
            continue;
        bool all = true;
        for (long i = 0; i < u1.rows() && all; ++i)
            for (long l = 0; l < u1.cols(); ++l)
                if (u1.at(i, l) != phase * u2.at(i, l)) {
                    all = false;
                    break;
                }
        if (all)
            return PhaseWitness{j};
        return std::nullopt;
    }
    return std::nullopt;
}

bool decide_approx(const Term& t1, const Term& t2, Precision k) {
    return eq(t1, t2, k);
}

bool approx_witness_valid(const Term& a, const Term& a2, const ApproxWitness& w, Precision k) {
    check_same_dims(a, a2);
    return eq(Term::sum(a, w.pad_left), Term::sum(a2, w.pad_right), k);
}

ApproxWitness approx_witness_flip(const ApproxWitness& w) {
    return ApproxWitness{w.pad_right, w.pad_left};
}

ApproxWitness approx_witness_compose(const Term& a, const Term& a2, const Term& a3,
                                     const ApproxWitness& w1, const ApproxWitness& w2,
                                     Precision k) {
    if (!approx_witness_valid(a, a2, w1, k))
        throw ValidationError("first approx witness does not hold");
    if (!approx_witness_valid(a2, a3, w2, k))
        throw ValidationError("second approx witness does not hold");
    // transitivity pasting: a (+) (c' . b) = a'' (+) (c'' . b')
    ApproxWitness out{Term::comp(w2.pad_left, w1.pad_left),
                      Term::comp(w2.pad_right, w1.pad_right)};
    if (!approx_witness_valid(a, a3, out, k))
        throw ValidationError("pasted approx witness failed verification");
    return out;
}

} // namespace pik
