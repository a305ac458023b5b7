#pragma once

#include <complex>
#include <vector>

#include <gmpxx.h>

#include "pik/common.hpp"

namespace pik {

using Integer = mpz_class;

/**
 * An element of D[zeta_k] = Z[1/2, zeta_k], where zeta_k = e^{2 pi i / 2^k}.
 *
 * Stored as (1/2^den_exp) * sum_i coeffs[i] * zeta^i with 0 <= i < 2^{k-1},
 * under the defining relation zeta^{2^{k-1}} = -1.
 *
 * Canonical form: den_exp == 0 or at least one coefficient is odd. Values are
 * canonicalised on construction, so equality is componentwise and structural.
 * Instances are immutable.
 */
class RingElem {
public:
    RingElem(Precision k, long den_exp, std::vector<Integer> coeffs);

    static RingElem zero(Precision k);
    static RingElem one(Precision k);
    static RingElem from_int(Precision k, long value);
    /// value / 2^den_exp
    static RingElem dyadic(Precision k, const Integer& value, long den_exp);
    /// zeta^j; j is reduced mod 2^k, negative powers wrap around.
    static RingElem zeta_pow(Precision k, long j);

    Precision precision() const { return k_; }
    long den_exp() const { return den_exp_; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;

    RingElem operator+(const RingElem& rhs) const;
    RingElem operator-(const RingElem& rhs) const;
    RingElem operator*(const RingElem& rhs) const;
    RingElem operator-() const;

    bool operator==(const RingElem& rhs) const;
    bool operator!=(const RingElem& rhs) const { return !(*this == rhs); }

    /// The ring automorphism zeta -> -zeta (the star operation on terms).
    RingElem galois_star() const;
    /// The ring automorphism zeta -> zeta^{-1} (complex conjugation).
    RingElem complex_conj() const;

    /// Evaluate in floating point. Diagnostics only; never used for equality.
    std::complex<double> float_embed() const;

    /// Inclusion into the larger ring D[zeta_{to_k}] via zeta_k = zeta_{to_k}^{2^{to_k - k}}.
    RingElem lift(Precision to_k) const;

    std::string to_string() const;

private:
    Precision k_;
    long den_exp_;
    std::vector<Integer> coeffs_;

    void canonicalise();
    static void check_same_k(const RingElem& a, const RingElem& b);
};

} // namespace pik
