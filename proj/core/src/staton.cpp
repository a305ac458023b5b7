#include "pik/channel.hpp"
#include "pik/termgen.hpp"

namespace pik {

namespace {

/// Channel permuting the outcome blocks of [1, 1]: classical bit flip.
Channel outcome_swap(Precision k) {
    const CqObject one{1};
    return chan_copair(chan_inj(1, one, one, k), chan_inj(0, one, one, k));
}

/// Classical relabelling: input block i is routed unchanged to output block to[i].
Channel block_perm(Precision k, const CqObject& dom, const std::vector<size_t>& to) {
    std::vector<long> cod_dims(dom.blocks());
    for (size_t i = 0; i < dom.blocks(); ++i)
        cod_dims[to[i]] = dom.dims[i];
    const CqObject cod{cod_dims};
    std::vector<std::vector<ExactMatrix>> choi;
    for (size_t i = 0; i < dom.blocks(); ++i) {
        std::vector<ExactMatrix> row;
        for (size_t j = 0; j < cod.blocks(); ++j) {
            const long n = dom.dims[i], m = cod.dims[j];
            if (j == to[i]) {
                ExactMatrix block = ExactMatrix::zero(k, n * n, n * n);
                for (long x = 0; x < n; ++x)
                    for (long y = 0; y < n; ++y)
                        block.set(x * n + x, y * n + y, RingElem::one(k));
                row.push_back(std::move(block));
            } else {
                row.push_back(ExactMatrix::zero(k, m * n, m * n));
            }
        }
        choi.push_back(std::move(row));
    }
    return Channel(k, dom, cod, std::move(choi));
}

/// Random unitary term on the given object (kron-free keeps evals small).
Term random_unitary(Rng& rng, Precision k, long dim) {
    TermGenOptions opts;
    opts.max_depth = 3;
    opts.allow_kron = false;
    opts.allow_scale = true;
    return random_term(rng, k, dim, opts);
}

} // namespace

CheckReport staton_suite(Precision k, int trials, std::uint64_t seed) {
    CheckReport report;
    report.suite = "staton";
    report.k = k.k;
    report.trials = trials;
    Rng rng(seed);

    const CqObject one{1};
    const Channel measure = chan_measure(1, 1, k);
    const Channel fresh = chan_new(k);
    const Channel id2 = chan_id(CqObject{2}, k);

    // (A) measuring after a flip is flipping the outcome.
    report.record("A: measure . X = swap . measure",
                  chan_eq(chan_compose(measure, chan_of_unitary(gate::x(), k)),
                          chan_compose(outcome_swap(k), measure)));

    // (D) a fresh qubit measures deterministically into the first outcome.
    report.record("D: measure . new = inj_1",
                  chan_eq(chan_compose(measure, fresh), chan_inj(0, one, one, k)));

    // (K) two allocations commute.
    report.record("K: two news commute",
                  chan_eq(chan_compose(chan_tensor(fresh, id2), fresh),
                          chan_compose(chan_tensor(id2, fresh), fresh)));

    // (L) allocation commutes with measuring the existing qubit.
    report.record(
        "L: new / measure exchange",
        chan_eq(chan_compose(chan_tensor(id2, measure), chan_tensor(fresh, id2)),
                chan_compose(chan_tensor(fresh, chan_id(CqObject{1, 1}, k)), measure)));

    // (J) measuring two qubits commutes, up to reordering the outcome pairs.
    {
        const Channel measure_major = chan_measure(2, 2, k);
        const Channel measure_minor = chan_tensor(id2, measure);
        const Channel then_each = chan_oplus(measure, measure);
        const Channel lhs = chan_compose(then_each, measure_major); // outcomes (q1, q2)
        const Channel rhs = chan_compose(then_each, measure_minor); // outcomes (q2, q1)
        // id + sigma + id: swap the two middle outcome blocks.
        const Channel reorder = block_perm(k, CqObject{1, 1, 1, 1}, {0, 2, 1, 3});
        report.record("J: two-measurement exchange", chan_eq(chan_compose(reorder, lhs), rhs));
    }

    bool b_ok = true, c_ok = true, e_ok = true, f_ok = true, g_ok = true, h_ok = true,
         i_ok = true;
    for (int trial = 0; trial < trials; ++trial) {
        const long dim = rng.flip() ? 2 : 4;
        const Term u = random_unitary(rng, k, dim);
        const Term v = random_unitary(rng, k, dim);
        const Channel chu = chan_of_unitary(u, k);
        const Channel chv = chan_of_unitary(v, k);

        // (B) classical control commutes with the controlling measurement.
        const Channel ctrl_uv = chan_of_unitary(Term::sum(u, v), k);
        const Channel meas_first = chan_measure(dim, dim, k);
        b_ok = b_ok && chan_eq(chan_compose(chan_oplus(chu, chv), meas_first),
                               chan_compose(meas_first, ctrl_uv));

        // (C) discarding absorbs any unitary.
        c_ok = c_ok &&
               chan_eq(chan_compose(chan_discard(dim, k), chu), chan_discard(dim, k));

        // (E) control on a fresh qubit always takes the first branch.
        const Channel idd = chan_id(CqObject{dim}, k);
        e_ok = e_ok && chan_eq(chan_compose(ctrl_uv, chan_tensor(fresh, idd)),
                               chan_tensor(fresh, chu));

        // (F) apply respects the tensor symmetry.
        const long du = 2;
        const Term u2 = random_unitary(rng, k, du);
        const Channel chu2 = chan_of_unitary(u2, k);
        const Channel swap_ch = chan_of_unitary(sigma_tensor(du, dim), k);
        f_ok = f_ok && chan_eq(chan_compose(swap_ch, chan_tensor(chu2, chv)),
                               chan_compose(chan_tensor(chv, chu2), swap_ch));

        // (G) apply respects identities.
        g_ok = g_ok && chan_eq(chan_of_unitary(Term::id(dim), k), idd);

        // (H) apply respects composition.
        h_ok = h_ok && chan_eq(chan_of_unitary(Term::comp(v, u), k), chan_compose(chv, chu));

        // (I) apply respects the tensor.
        i_ok = i_ok &&
               chan_eq(chan_of_unitary(Term::kron(u2, v), k), chan_tensor(chu2, chv));
    }
    report.record("B: control / measurement commutation", b_ok);
    report.record("C: discard absorbs unitaries", c_ok);
    report.record("E: control on fresh qubit", e_ok);
    report.record("F: apply respects symmetry", f_ok);
    report.record("G: apply respects identity", g_ok);
    report.record("H: apply respects composition", h_ok);
    report.record("I: apply respects tensor", i_ok);
    return report;
}

} // namespace pik
