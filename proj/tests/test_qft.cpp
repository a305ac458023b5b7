#include <doctest.h>

#include "pik/qft.hpp"
#include "support.hpp"

using namespace pik;
using namespace pik::testing;

TEST_CASE("qft: one qubit is the Hadamard") {
    const Precision k3(3);
    CHECK(eval(build_qft(1, k3), k3) == eval(gate::h(k3), k3));
}

TEST_CASE("qft: matches the ring-valued DFT oracle") {
    for (long n = 1; n <= 3; ++n) {
        const Precision k(std::max(3L, n));
        const ExactMatrix got = eval(build_qft(n, k), k);
        CAPTURE(n);
        CHECK(got == dft_oracle(n, k));
        CHECK(got.is_unitary());
    }
    // float cross-check at n = 2: entries (1/2) * i^{xy}
    const Precision k3(3);
    const ExactMatrix q2 = eval(build_qft(2, k3), k3);
    const std::complex<long double> i{0.0L, 1.0L};
    std::vector<std::vector<std::complex<long double>>> want(4);
    for (long x = 0; x < 4; ++x)
        for (long y = 0; y < 4; ++y)
            want[x].push_back(0.5L * std::pow(i, static_cast<long double>(x * y)));
    CHECK(matrix_close(q2, want));
}

TEST_CASE("qft: diagonalises the cyclic shift") {
    for (long n = 1; n <= 3; ++n) {
        const Precision k(std::max(3L, n));
        const long dim = 1L << n;
        std::vector<long> shift(dim);
        for (long x = 0; x < dim; ++x)
            shift[x] = (x + 1) % dim;
        const ExactMatrix q = eval(build_qft(n, k), k);
        const ExactMatrix d = q * ExactMatrix::permutation(k, shift) * q.dagger();
        // diagonal with entries zeta_{2^n}^j
        for (long x = 0; x < dim; ++x)
            for (long y = 0; y < dim; ++y) {
                if (x == y)
                    continue;
                CHECK(d.at(x, y).is_zero());
            }
        const long root = 1L << (k.k - n);
        for (long x = 0; x < dim; ++x)
            CHECK(d.at(x, x) == RingElem::zeta_pow(k, root * x));
    }
}

TEST_CASE("qft: refuses out-of-range parameters") {
    CHECK_THROWS_AS(build_qft(4, Precision(3)), ValidationError);
    CHECK_THROWS_AS(build_qft(2, Precision(2)), ValidationError);
    CHECK_THROWS_AS(build_qft(0, Precision(3)), ValidationError);
}

TEST_CASE("qft: stats reproduce the scaling counts") {
    CHECK(qft_stats(5, Precision(4)).approx_cp == 1);
    CHECK(qft_stats(5, Precision(3)).approx_cp == 3);
    CHECK(qft_stats(5, Precision(5)).approx_cp == 0);

    for (long n = 1; n <= 12; ++n)
        for (int kk = 2; kk <= 12; ++kk) {
            const QftStats s = qft_stats(n, Precision(kk));
            CHECK(s.h_count == n);
            CHECK(s.swap_count == n / 2);
            CHECK(s.native_cp + s.approx_cp == n * (n - 1) / 2);
            if (n > kk) {
                const long x = n - kk + 1;
                CHECK(s.approx_cp == x * (x - 1) / 2);
            } else {
                CHECK(s.approx_cp == 0);
            }
        }
}
