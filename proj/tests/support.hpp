#pragma once

// Shared oracles for the test suites. Everything here recomputes expected
// values through an independent route (complex arithmetic, brute-force
// permutation enumeration, direct ring construction) rather than through the
// code path under test.

#include <cmath>
#include <complex>
#include <vector>

#include "pik/eval.hpp"

namespace pik::testing {

/// Independent complex-arithmetic evaluation of a ring element.
inline std::complex<long double> cplx(const RingElem& e) {
    const long double pi = 3.14159265358979323846264338327950288L;
    const long double order = static_cast<long double>(e.precision().order());
    std::complex<long double> acc(0.0L, 0.0L);
    for (size_t i = 0; i < e.coeffs().size(); ++i) {
        const long double c = static_cast<long double>(e.coeffs()[i].get_d());
        if (c == 0.0L)
            continue;
        const long double angle = 2.0L * pi * static_cast<long double>(i) / order;
        acc += c * std::complex<long double>(std::cos(angle), std::sin(angle));
    }
    return acc * std::pow(0.5L, static_cast<long double>(e.den_exp()));
}

inline long double cdist(std::complex<long double> a, std::complex<long double> b) {
    return std::abs(a - b);
}

/// Near-equality for float cross-checks.
inline bool close(const RingElem& e, std::complex<long double> want, long double tol = 1e-12L) {
    return cdist(cplx(e), want) < tol;
}

/// Matrix close to a complex reference, entrywise.
inline bool matrix_close(const ExactMatrix& m,
                         const std::vector<std::vector<std::complex<long double>>>& want,
                         long double tol = 1e-12L) {
    if (m.rows() != static_cast<long>(want.size()))
        return false;
    for (long i = 0; i < m.rows(); ++i) {
        if (m.cols() != static_cast<long>(want[i].size()))
            return false;
        for (long j = 0; j < m.cols(); ++j)
            if (!close(m.at(i, j), want[i][j], tol))
                return false;
    }
    return true;
}

/// Apply a permutation matrix to a basis index by brute force; -1 if not a
/// permutation column.
inline long image_of_basis(const ExactMatrix& m, long j) {
    long hit = -1;
    for (long i = 0; i < m.rows(); ++i) {
        const RingElem& e = m.at(i, j);
        if (e.is_zero())
            continue;
        if (!e.is_one() || hit >= 0)
            return -1;
        hit = i;
    }
    return hit;
}

/// Whole-matrix permutation extraction; empty if the matrix is not a 0/1
/// permutation matrix.
inline std::vector<long> as_permutation(const ExactMatrix& m) {
    std::vector<long> p;
    for (long j = 0; j < m.cols(); ++j) {
        const long i = image_of_basis(m, j);
        if (i < 0)
            return {};
        p.push_back(i);
    }
    return p;
}

/// The exact DFT on 2^n points over D[zeta_k], built directly from ring
/// constants: entries 2^{-n/2} * zeta_{2^n}^{xy} with zeta_{2^n} = zeta_k^{2^{k-n}}.
inline ExactMatrix dft_oracle(long n, Precision k) {
    const long dim = 1L << n;
    // 2^{-n/2}: for odd n use 2^{-(n+1)/2} * (zeta^{2^{k-3}} + zeta^{-2^{k-3}}).
    RingElem scale = RingElem::dyadic(k, 1, (n + 1) / 2);
    if (n % 2 == 1) {
        const long e = 1L << (k.k - 3);
        scale = scale * (RingElem::zeta_pow(k, e) + RingElem::zeta_pow(k, -e));
    }
    ExactMatrix m(k, dim, dim);
    const long root = 1L << (k.k - n);
    for (long x = 0; x < dim; ++x)
        for (long y = 0; y < dim; ++y)
            m.set(y, x, scale * RingElem::zeta_pow(k, root * x * y));
    return m;
}

/// Partial trace over the minor factor of dimension g (rows/cols = major * g).
inline ExactMatrix trace_out_minor(const ExactMatrix& m, long g) {
    const long major = m.rows() / g;
    ExactMatrix out(m.precision(), major, major);
    for (long x = 0; x < major; ++x)
        for (long y = 0; y < major; ++y) {
            RingElem acc = RingElem::zero(m.precision());
            for (long t = 0; t < g; ++t)
                acc = acc + m.at(x * g + t, y * g + t);
            out.set(x, y, acc);
        }
    return out;
}

/// Exact rank-one density |psi><psi| from column c of a unitary matrix.
inline ExactMatrix density_from_column(const ExactMatrix& u, long c) {
    const long n = u.rows();
    ExactMatrix rho(u.precision(), n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            rho.set(i, j, u.at(i, c) * u.at(j, c).complex_conj());
    return rho;
}

} // namespace pik::testing
