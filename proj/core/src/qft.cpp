#include "pik/qft.hpp"

namespace pik {

namespace {

/// Single-qubit gate embedded at qubit position q of n qubits (MSB first).
Term on_qubit(const Term& g, long q, long n) {
    Term t = g;
    if (q > 0)
        t = Term::kron(Term::id(1L << q), std::move(t));
    if (q + 1 < n)
        t = Term::kron(std::move(t), Term::id(1L << (n - q - 1)));
    return t;
}

/// diag(1, zeta^{2^{k-d}}) applied when both qubits a < b are set.
Term cphase_on(Precision k, int d, long a, long b, long n) {
    Term phase = Term::sum(Term::id(1), Term::zeta(1L << (k.k - d)));
    Term inner = phase; // acts on qubits a+1 .. n-1
    if (b > a + 1)
        inner = Term::kron(Term::id(1L << (b - a - 1)), std::move(inner));
    if (b + 1 < n)
        inner = Term::kron(std::move(inner), Term::id(1L << (n - b - 1)));
    Term gated = gate::ctrl(inner);
    if (a > 0)
        gated = Term::kron(Term::id(1L << a), std::move(gated));
    return gated;
}

/// Basis permutation exchanging the values of qubits a and b.
Term qubit_swap(long a, long b, long n) {
    const long dim = 1L << n;
    std::vector<long> p(dim);
    for (long x = 0; x < dim; ++x) {
        const long bit_a = (x >> (n - 1 - a)) & 1;
        const long bit_b = (x >> (n - 1 - b)) & 1;
        long y = x & ~((1L << (n - 1 - a)) | (1L << (n - 1 - b)));
        y |= bit_a << (n - 1 - b);
        y |= bit_b << (n - 1 - a);
        p[x] = y;
    }
    return perm_to_term(p);
}

} // namespace

Term build_qft(long n, Precision k) {
    if (k.k < 3)
        throw ValidationError("QFT construction requires k >= 3 (Hadamard)");
    if (n < 1)
        throw ValidationError("QFT qubit count must be positive");
    if (n > k.k)
        throw ValidationError("QFT with n = " + std::to_string(n) + " at k = " +
                              std::to_string(k.k) +
                              " needs non-native phase gates; approximation is out of scope");

    const Term h = gate::h(k);
    Term circuit = Term::id(1L << n);
    for (long q = 0; q < n; ++q) {
        circuit = comp_simplified(on_qubit(h, q, n), std::move(circuit));
        for (int d = 2; d <= n - q; ++d)
            circuit = comp_simplified(cphase_on(k, d, q, q + d - 1, n), std::move(circuit));
    }
    for (long q = 0; q < n / 2; ++q)
        circuit = comp_simplified(qubit_swap(q, n - 1 - q, n), std::move(circuit));
    return circuit;
}

QftStats qft_stats(long n, Precision k) {
    if (n < 1)
        throw ValidationError("QFT qubit count must be positive");
    QftStats stats;
    stats.n = n;
    stats.k = k.k;
    stats.h_count = n;
    const long total_cp = n * (n - 1) / 2;
    if (n > k.k) {
        const long excess = n - k.k + 1; // angles 2^{-d} for d in (k, n]
        stats.approx_cp = excess * (excess - 1) / 2;
    }
    stats.native_cp = total_cp - stats.approx_cp;
    stats.swap_count = n / 2;
    return stats;
}

} // namespace pik
