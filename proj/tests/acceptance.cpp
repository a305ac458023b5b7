// Acceptance suite: runs every release criterion exactly as specified and
// prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>
#include <vector>

#include "pik/catalytic.hpp"
#include "pik/channel.hpp"
#include "pik/qft.hpp"
#include "pik/synth.hpp"
#include "pik/syntax.hpp"
#include "pik/termgen.hpp"
#include "support.hpp"

using namespace pik;
using namespace pik::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---- criterion 1: axiom suite, k in 2..6, exact, under one second ----------

bool criterion_axioms(std::string& detail) {
    const auto start = Clock::now();
    for (int kk = 2; kk <= 6; ++kk) {
        const CheckReport r = check_axioms(Precision(kk));
        for (const std::string& name : {std::string("axiom1: V^2 = X"),
                                        std::string("axiom2: VSV = SVS"),
                                        std::string("axiom3: zeta^{2^k} = 1")})
            if (std::find(r.checks.begin(), r.checks.end(), name) == r.checks.end()) {
                detail = "axiom check missing at k=" + std::to_string(kk);
                return false;
            }
        if (!r.ok()) {
            detail = "failures at k=" + std::to_string(kk);
            return false;
        }
    }
    const double took = seconds_since(start);
    detail = "k=2..6 exact in " + std::to_string(took) + "s";
    return took < 1.0;
}

// ---- criterion 2: HH = id, S^2 = Z, T^{2^{k-2}} = S -------------------------

bool criterion_reasoning(std::string& detail) {
    for (int kk = 3; kk <= 6; ++kk) {
        const Precision k(kk);
        const Term h = gate::h(k);
        if (eval(Term::comp(h, h), k) != ExactMatrix::identity(k, 2)) {
            detail = "H^2 != id at k=" + std::to_string(kk);
            return false;
        }
    }
    for (int kk = 2; kk <= 6; ++kk) {
        const Precision k(kk);
        const Term s = gate::s(k);
        if (eval(Term::comp(s, s), k) != eval(gate::z(k), k)) {
            detail = "S^2 != Z at k=" + std::to_string(kk);
            return false;
        }
        if (eval(comp_pow(gate::t(k), 1L << (kk - 2)), k) != eval(s, k)) {
            detail = "T^{2^{k-2}} != S at k=" + std::to_string(kk);
            return false;
        }
    }
    detail = "H^2 = id (k=3..6); S^2 = Z and T^{2^{k-2}} = S (k=2..6)";
    return true;
}

// ---- criterion 3: unitarity invariant ---------------------------------------

bool criterion_unitarity(std::string& detail) {
    long checked = 0;
    for (int kk : {2, 3, 4}) {
        const Precision k(kk);
        Rng rng(9000 + kk);
        for (int t = 0; t < 1000; ++t) {
            const Term term = random_term_any_dim(rng, k, 16);
            if (!eval(term, k).is_unitary()) {
                detail = "non-unitary eval at k=" + std::to_string(kk) + ": " + pretty(term);
                return false;
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " random terms, dims <= 16, all exactly unitary";
    return true;
}

// ---- criterion 4: Kronecker from sums ---------------------------------------

bool criterion_kron(std::string& detail) {
    Rng rng(777);
    const Precision k3(3);
    for (int t = 0; t < 500; ++t) {
        const Term a = random_term(rng, k3, rng.range(1, 6));
        const Term b = random_term(rng, k3, rng.range(1, 6));
        const Term el = elaborate_kron(Term::kron(a, b), k3);
        if (!is_kron_free(el)) {
            detail = "elaboration left a Kron/Scale node";
            return false;
        }
        if (eval(el, k3) != kron(eval(a, k3), eval(b, k3))) {
            detail = "elaborated Kron disagrees with the matrix Kronecker";
            return false;
        }
    }
    const Precision k2(2);
    for (long m = 1; m <= 8; ++m)
        for (long n = 1; n <= 8; ++n) {
            const Term sig = sigma_tensor(m, n);
            if (!is_additive_fragment(sig)) {
                detail = "sigma_tensor left the additive fragment";
                return false;
            }
            if (as_permutation(eval(sig, k2)) != transpose_permutation(m, n)) {
                detail = "sigma_tensor(" + std::to_string(m) + "," + std::to_string(n) +
                         ") is not the transpose";
                return false;
            }
        }
    detail = "500 random Kron pairs match the matrix oracle; sigma_tensor additive and correct for m,n <= 8";
    return true;
}

// ---- criterion 5: conjugation / dagger homomorphisms ------------------------

bool criterion_conj_dagger(std::string& detail) {
    // The conjugation identity needs k >= 3 on V-bearing terms (at k = 2 the
    // star automorphism is complex conjugation, which moves V's entries).
    long conj_checked = 0;
    for (int kk : {3, 4, 5}) {
        const Precision k(kk);
        Rng rng(8800 + kk);
        for (int t = 0; t < 170; ++t) {
            const Term term = random_term_any_dim(rng, k, 8);
            if (eval(term_conj(term, k), k) != eval(term, k).star_entrywise()) {
                detail = "conjugation homomorphism failed at k=" + std::to_string(kk);
                return false;
            }
            ++conj_checked;
        }
    }
    long dag_checked = 0;
    for (int kk : {2, 3, 4}) {
        const Precision k(kk);
        Rng rng(8900 + kk);
        for (int t = 0; t < 170; ++t) {
            const Term term = random_term_any_dim(rng, k, 8);
            if (eval(term_dagger(term, k), k) != eval(term, k).dagger()) {
                detail = "dagger homomorphism failed at k=" + std::to_string(kk);
                return false;
            }
            ++dag_checked;
        }
    }
    detail = std::to_string(conj_checked) + " conj (k=3..5) + " + std::to_string(dag_checked) +
             " dagger (k=2..4) terms";
    return true;
}

// ---- criterion 6: catalysis -------------------------------------------------

bool criterion_catalysis(std::string& detail) {
    const auto start = Clock::now();
    for (int kk : {3, 4, 5}) {
        const Precision k(kk);
        Rng rng(6000 + kk);
        for (int t = 0; t < 200; ++t) {
            const Term a = random_term_any_dim(rng, k, 8);
            if (!catalysis_check(a, k)) {
                detail = "catalysis identity failed at k=" + std::to_string(kk) + ": " + pretty(a);
                return false;
            }
        }
    }
    const double took = seconds_since(start);
    detail = "200 terms x k in {3,4,5}, dims <= 8, exact, in " + std::to_string(took) + "s";
    return took < 60.0;
}

// ---- criterion 7: precision transfer ----------------------------------------

Term equal_variant(Rng& rng, const Term& t, Precision k) {
    const long d = term_dim(t);
    switch (rng.below(4)) {
    case 0:
        return Term::comp(Term::id(d), t);
    case 1: {
        const Term u = random_term(rng, k, d);
        return Term::comp(t, Term::comp(term_dagger(u, k), u));
    }
    case 2: {
        const long j = rng.range(1, k.order() - 1);
        return Term::comp(Term::scale(j, Term::id(d)), Term::scale(k.order() - j, t));
    }
    default:
        return Term::comp(t, comp_pow(Term::comp(Term::v(), Term::v()), 2)); // X^2 = id on a wire
    }
}

bool criterion_precision_transfer(std::string& detail) {
    for (int kk : {3, 4}) {
        const Precision k(kk);
        Rng rng(7000 + kk);
        for (int t = 0; t < 150; ++t) {
            const long d = rng.range(1, 5);
            const Term a = random_term(rng, k, d);
            const Term b = random_term(rng, k, d);
            if (!precision_transfer_check(a, b, k)) {
                detail = "eq(a,b) <=> eq(phi a, phi b) failed at k=" + std::to_string(kk);
                return false;
            }
        }
        for (int t = 0; t < 50; ++t) {
            Term a = random_term(rng, k, 2);
            Term b = equal_variant(rng, a, k);
            if (b == a) {
                detail = "engineered variant was not syntactically distinct";
                return false;
            }
            if (!eq(a, b, k)) {
                detail = "engineered pair was not semantically equal";
                return false;
            }
            if (!precision_transfer_check(a, b, k)) {
                detail = "transfer failed on an engineered equal pair at k=" + std::to_string(kk);
                return false;
            }
        }
    }
    detail = "150 random + 50 engineered equal pairs per k in {3,4}";
    return true;
}

// ---- criterion 8: synthesis round trip --------------------------------------

bool criterion_synth(std::string& detail) {
    const Precision k2(2);
    Rng rng(4242);
    TermGenOptions opts;
    opts.allow_h = false;
    for (int t = 0; t < 300; ++t) {
        const Term a = random_term(rng, k2, rng.range(1, 8), opts);
        const ExactMatrix u = eval(a, k2);
        const SynthesisResult r1 = synth(u);
        if (eval(r1.term, k2) != u) {
            detail = "round trip broke at trial " + std::to_string(t);
            return false;
        }
        if (t % 25 == 0) {
            const SynthesisResult r2 = synth(u);
            if (pretty(r1.term) != pretty(r2.term)) {
                detail = "synthesis not byte-deterministic";
                return false;
            }
        }
    }
    detail = "300 random level-2 terms, dims <= 8, exact round trip, deterministic output";
    return true;
}

// ---- criterion 9: staton axiom suite ----------------------------------------

bool criterion_staton(std::string& detail) {
    const auto start = Clock::now();
    const CheckReport r = staton_suite(Precision(2), 50, 1);
    if (!r.ok()) {
        detail = "failures: " + r.failures.front();
        return false;
    }
    const std::vector<std::string> expect = {"A", "B", "C", "D", "E", "F",
                                             "G", "H", "I", "J", "K", "L"};
    for (const std::string& axiom : expect) {
        bool found = false;
        for (const std::string& name : r.checks)
            found = found || name.rfind(axiom + ":", 0) == 0;
        if (!found) {
            detail = "axiom (" + axiom + ") was not exercised";
            return false;
        }
    }
    const double took = seconds_since(start);
    detail = "axioms (A)-(L), 50 instantiations at 1-3 qubits, exact, in " +
             std::to_string(took) + "s";
    return took < 120.0;
}

// ---- criterion 10: channel completeness -------------------------------------

bool criterion_channel_completeness(std::string& detail) {
    TermGenOptions opts;
    opts.allow_kron = false;
    opts.max_depth = 3;
    for (int kk : {2, 3}) {
        const Precision k(kk);
        Rng rng(5200 + kk);
        for (int t = 0; t < 100; ++t) {
            const long d = rng.range(1, 4);
            const Term f = random_term(rng, k, d, opts);
            const Term g = rng.flip() ? Term::scale(rng.range(0, k.order() - 1), f)
                                      : random_term(rng, k, d, opts);
            if (!completeness_check(f, g, k)) {
                detail = "chan_eq <=> phase equality failed at k=" + std::to_string(kk);
                return false;
            }
        }
        // phase squashing for every scalar exponent
        Rng rng2(5300 + kk);
        const Term f = random_term(rng2, k, 2, opts);
        const Channel base = chan_of_unitary(f, k);
        for (long j = 0; j < k.order(); ++j)
            if (!chan_eq(chan_of_unitary(Term::scale(j, f), k), base)) {
                detail = "phase squashing failed at j=" + std::to_string(j);
                return false;
            }
    }
    detail = "200 random pairs (k=2,3) biconditional; squashing for all j in [0, 2^k)";
    return true;
}

// ---- criterion 11: QFT ------------------------------------------------------

bool criterion_qft(std::string& detail) {
    for (long n = 1; n <= 3; ++n) {
        const Precision k(std::max(3L, n));
        if (eval(build_qft(n, k), k) != dft_oracle(n, k)) {
            detail = "QFT_" + std::to_string(n) + " disagrees with the ring DFT oracle";
            return false;
        }
    }
    if (qft_stats(5, Precision(4)).approx_cp != 1 || qft_stats(5, Precision(3)).approx_cp != 3) {
        detail = "spot counts at k = n-1 / n-2 wrong";
        return false;
    }
    for (long n = 1; n <= 12; ++n)
        for (int kk = 2; kk <= 12; ++kk) {
            const QftStats s = qft_stats(n, Precision(kk));
            const long x = n > kk ? n - kk + 1 : 0;
            const long expect_approx = x > 0 ? x * (x - 1) / 2 : 0;
            if (s.h_count != n || s.swap_count != n / 2 ||
                s.native_cp + s.approx_cp != n * (n - 1) / 2 || s.approx_cp != expect_approx) {
                detail = "stats invariant failed at n=" + std::to_string(n) +
                         " k=" + std::to_string(kk);
                return false;
            }
        }
    detail = "exact DFT match for n <= 3; counts exhaustive for n,k <= 12";
    return true;
}

// ---- criterion 12: word-problem CLI contract --------------------------------

int run_cli_status(const std::string& args) {
    const std::string cmd = std::string(PIK_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

bool criterion_cli(std::string& detail) {
    const std::string fx = std::string(PIK_FIXTURE_DIR) + "/";
    struct Pair {
        const char* a;
        const char* b;
        int k;
        const char* flags;
        int expect;
    };
    const std::vector<Pair> pairs = {
        {"vsv.pik", "svs.pik", 2, "", 0},
        {"hh.pik", "id2.pik", 3, "", 0}, // the HH = id pair
        {"v.pik", "x.pik", 2, "", 1},
        {"t.pik", "scale3t.pik", 3, "--phase", 0}, // the phase-witness pair
        {"vv.pik", "x.pik", 2, "", 0},
        {"v4.pik", "id2.pik", 2, "", 0},
        {"s2.pik", "z2.pik", 2, "", 0},
        {"swap12.pik", "swapcomp.pik", 2, "", 0},
        {"ctrlv.pik", "cv2.pik", 2, "", 0},
        {"zeta5.pik", "zeta1.pik", 2, "", 0},
        {"conjzeta.pik", "zeta3.pik", 2, "", 0},
        {"daggerv.pik", "v3.pik", 2, "", 0},
        {"v.pik", "v.pik", 2, "", 0},
        {"x.pik", "id2.pik", 2, "", 1},
        {"t.pik", "s2.pik", 3, "", 1},
        {"zeta1.pik", "zeta3.pik", 2, "", 1},
        {"v.pik", "x.pik", 2, "--phase", 1},
        {"id2.pik", "id3.pik", 2, "", 2},  // dimension mismatch
        {"bad.pik", "id2.pik", 2, "", 2},  // parse error
        {"h.pik", "id2.pik", 2, "", 2},    // H needs k >= 3
    };
    int index = 0;
    for (const Pair& p : pairs) {
        std::ostringstream cmd;
        cmd << "--k " << p.k << " eq " << p.flags << " " << fx << p.a << " " << fx << p.b;
        const int got = run_cli_status(cmd.str());
        if (got != p.expect) {
            detail = "pair " + std::to_string(index) + " (" + p.a + ", " + p.b + "): expected " +
                     std::to_string(p.expect) + ", got " + std::to_string(got);
            return false;
        }
        ++index;
    }
    detail = std::to_string(pairs.size()) + " fixture pairs with exit codes 0/1/2 as specified";
    return true;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "axiom suite (V^2=X, VSV=SVS, zeta^{2^k}=1; k=2..6; <1s)", criterion_axioms},
        {2, "reasoning identities (HH=id, S^2=Z, T^{2^{k-2}}=S)", criterion_reasoning},
        {3, "unitarity invariant (1000 terms x k=2,3,4, dims<=16)", criterion_unitarity},
        {4, "Kronecker from sums + sigma_tensor additive decomposition", criterion_kron},
        {5, "conjugation/dagger homomorphisms (500 terms each)", criterion_conj_dagger},
        {6, "catalysis identity (200 terms x k=3,4,5; <60s)", criterion_catalysis},
        {7, "precision transfer (150 random + 50 engineered per k=3,4)", criterion_precision_transfer},
        {8, "synthesis round trip (300 terms, deterministic)", criterion_synth},
        {9, "staton axioms (A)-(L) (50 instantiations; <120s)", criterion_staton},
        {10, "channel completeness + phase squashing", criterion_channel_completeness},
        {11, "QFT exactness and scaling counts", criterion_qft},
        {12, "word-problem CLI contract (20 fixture pairs)", criterion_cli},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("%s criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name,
                    detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok)
            ++failures;
    }
    if (failures > 0)
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    else
        std::printf("all %zu criteria passed\n", criteria.size());
    return failures == 0 ? 0 : 1;
}
