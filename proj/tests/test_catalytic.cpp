#include <doctest.h>

#include "pik/catalytic.hpp"
#include "pik/decide.hpp"
#include "pik/termgen.hpp"

using namespace pik;

TEST_CASE("catalytic: generator clauses") {
    const Precision k3(3);
    CHECK(phi(Term::v(), k3) == Term::sum(Term::v(), Term::v()));
    CHECK(phi(Term::id(5), k3) == Term::id(10));
    CHECK(phi(Term::zeta(1), k3) ==
          Term::comp(gate::x(), Term::sum(Term::id(1), Term::zeta(1))));
    CHECK(phi(Term::swap_plus(2, 3), k3) ==
          Term::sum(Term::swap_plus(2, 3), Term::swap_plus(2, 3)));
    CHECK_THROWS_AS(phi(Term::v(), Precision(2)), ValidationError);

    // Phi doubles the object
    Rng rng(53);
    for (int t = 0; t < 20; ++t) {
        const Term a = random_term_any_dim(rng, k3, 5);
        CHECK(term_dim(phi(a, k3)) == 2 * term_dim(a));
    }
}

TEST_CASE("catalytic: phi emulates zeta at the lower level") {
    // eval of Phi(zeta^j), lifted back to level k, squares to zeta^j on each wire.
    for (int kk : {3, 4}) {
        const Precision k(kk);
        const Precision down(kk - 1);
        for (long j = 0; j < k.order(); ++j) {
            const ExactMatrix m = eval(phi(Term::zeta(j), k), down);
            CHECK(m.is_unitary());
            // (Phi zeta)^2 = zeta_{k-1} . id, so Phi(zeta^j)^2 = zeta_{k-1}^j . id
            CHECK(m * m == ExactMatrix::identity(down, 2)
                               .scaled(RingElem::zeta_pow(down, j)));
        }
    }
}

TEST_CASE("catalytic: catalyst") {
    const Precision k3(3);
    CHECK(term_dim(catalyst(k3, 4)) == 8);
    CHECK_THROWS_AS(catalyst(Precision(2), 1), ValidationError);
    // eval(catalyst(3,1)) = H * T exactly, and it is unitary
    const ExactMatrix c = eval(catalyst(k3, 1), k3);
    CHECK(c == eval(gate::h(k3), k3) * eval(gate::t(k3), k3));
    CHECK(c.is_unitary());
}

TEST_CASE("catalytic: catalysis identity on known instances") {
    const Precision k3(3);
    // a = zeta: rhs = diag(zeta, -zeta)
    CHECK(catalysis_check(Term::zeta(1), k3));
    const Term a = Term::zeta(1);
    const Term rhs = Term::sum(a, term_conj(a, k3));
    const ExactMatrix rhs_m = eval(rhs, k3);
    CHECK(rhs_m.at(0, 0) == RingElem::zeta_pow(k3, 1));
    CHECK(rhs_m.at(1, 1) == -RingElem::zeta_pow(k3, 1));

    // a = V: both sides are V (+) V
    CHECK(catalysis_check(Term::v(), k3));
    CHECK(catalysis_check(gate::x(), k3));
    CHECK(catalysis_check(Term::swap_plus(2, 1), k3));
    CHECK(catalysis_check(gate::s(k3), k3));
    CHECK(catalysis_check(gate::h(k3), k3));
}

TEST_CASE("catalytic: catalysis identity on random terms") {
    for (int kk : {3, 4, 5}) {
        const Precision k(kk);
        Rng rng(500 + kk);
        for (int t = 0; t < 40; ++t) {
            const Term a = random_term_any_dim(rng, k, 6);
            CAPTURE(kk);
            CHECK(catalysis_check(a, k));
        }
    }
}

TEST_CASE("catalytic: precision transfer") {
    const Precision k3(3);
    const Term v = Term::v(), s = gate::s(k3);
    const Term vsv = Term::comp(v, Term::comp(s, v));
    const Term svs = Term::comp(s, Term::comp(v, s));
    CHECK(precision_transfer_check(vsv, svs, k3));
    CHECK(eq(phi(vsv, k3), phi(svs, k3), Precision(2)));
    CHECK(precision_transfer_check(v, gate::x(), k3));
    CHECK_FALSE(eq(phi(v, k3), phi(gate::x(), k3), Precision(2)));

    Rng rng(61);
    for (int t = 0; t < 25; ++t) {
        const long d = rng.range(1, 4);
        const Term a = random_term(rng, k3, d);
        const Term b = random_term(rng, k3, d);
        CHECK(precision_transfer_check(a, b, k3));
    }
}

TEST_CASE("catalytic: phi respects composition by construction") {
    const Precision k3(3);
    Rng rng(65);
    for (int t = 0; t < 15; ++t) {
        const long d = rng.range(1, 4);
        const Term a = random_term(rng, k3, d);
        const Term b = random_term(rng, k3, d);
        CHECK(eval(phi(Term::comp(a, b), k3), Precision(2)) ==
              eval(phi(a, k3), Precision(2)) * eval(phi(b, k3), Precision(2)));
    }
}

TEST_CASE("catalytic: iterating phi down to k = 2") {
    const Precision k4(4);
    Rng rng(67);
    for (int t = 0; t < 10; ++t) {
        const Term a = random_term_any_dim(rng, k4, 3);
        const Term down1 = phi(a, k4);
        const Term down2 = phi(down1, Precision(3));
        CHECK(term_dim(down2) == 4 * term_dim(a));
        CHECK(eval(down2, Precision(2)).is_unitary());
    }
    // eq-preservation survives the full descent: two levels down, dim x 4
    for (int t = 0; t < 8; ++t) {
        const long d = rng.range(1, 3);
        const Term a = random_term(rng, k4, d);
        const Term b = random_term(rng, k4, d);
        const bool top = eq(a, b, k4);
        const bool bottom =
            eq(phi(phi(a, k4), Precision(3)), phi(phi(b, k4), Precision(3)), Precision(2));
        CHECK(top == bottom);
    }
}
