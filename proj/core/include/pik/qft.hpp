#pragma once

#include "pik/eval.hpp"

namespace pik {

/// Gate-count accounting for an n-qubit QFT at precision k.
struct QftStats {
    long n = 0;
    int k = 0;
    long h_count = 0;    // Hadamards: n
    long native_cp = 0;  // controlled phases with native angles (d <= k)
    long approx_cp = 0;  // controlled phases that would need approximation
    long swap_count = 0; // final reversal swaps: floor(n/2)

    bool operator==(const QftStats&) const = default;
};

/**
 * The n-qubit quantum Fourier transform as a term on object 2^n:
 * per qubit a Hadamard followed by controlled phases cphase(d), then the
 * final qubit-reversal swaps. Qubit 0 is the most significant.
 *
 * All phases must be native: requires 3 <= k and n <= k (approximation
 * synthesis is out of scope, so larger n is refused).
 */
Term build_qft(long n, Precision k);

/// Controlled-phase counts per the precision-scaling analysis; no term built.
QftStats qft_stats(long n, Precision k);

} // namespace pik
