#include "pik/ring.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace pik {

RingElem::RingElem(Precision k, long den_exp, std::vector<Integer> coeffs)
    : k_(k), den_exp_(den_exp), coeffs_(std::move(coeffs)) {
    if (den_exp_ < 0)
        throw ValidationError("den_exp must be non-negative");
    if (static_cast<long>(coeffs_.size()) != k_.coeff_len())
        throw ValidationError("coefficient vector must have length 2^{k-1}");
    canonicalise();
}

void RingElem::canonicalise() {
    while (den_exp_ > 0) {
        bool all_even = true;
        for (const Integer& c : coeffs_) {
            if (mpz_odd_p(c.get_mpz_t())) {
                all_even = false;
                break;
            }
        }
        if (!all_even)
            break;
        for (Integer& c : coeffs_)
            c >>= 1;
        --den_exp_;
    }
}

void RingElem::check_same_k(const RingElem& a, const RingElem& b) {
    if (a.k_ != b.k_)
        throw PrecisionMismatch("ring operands at k=" + std::to_string(a.k_.k) +
                                " and k=" + std::to_string(b.k_.k));
}

RingElem RingElem::zero(Precision k) {
    return RingElem(k, 0, std::vector<Integer>(k.coeff_len(), 0));
}

RingElem RingElem::one(Precision k) {
    std::vector<Integer> c(k.coeff_len(), 0);
    c[0] = 1;
    return RingElem(k, 0, std::move(c));
}

RingElem RingElem::from_int(Precision k, long value) {
    std::vector<Integer> c(k.coeff_len(), 0);
    c[0] = value;
    return RingElem(k, 0, std::move(c));
}

RingElem RingElem::dyadic(Precision k, const Integer& value, long den_exp) {
    std::vector<Integer> c(k.coeff_len(), 0);
    c[0] = value;
    return RingElem(k, den_exp, std::move(c));
}

RingElem RingElem::zeta_pow(Precision k, long j) {
    const long order = k.order();
    long r = j % order;
    if (r < 0)
        r += order;
    std::vector<Integer> c(k.coeff_len(), 0);
    if (r < k.coeff_len())
        c[r] = 1;
    else
        c[r - k.coeff_len()] = -1; // zeta^{2^{k-1}} = -1
    return RingElem(k, 0, std::move(c));
}

bool RingElem::is_zero() const {
    for (const Integer& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool RingElem::is_one() const {
    if (den_exp_ != 0 || coeffs_[0] != 1)
        return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return false;
    return true;
}

bool RingElem::operator==(const RingElem& rhs) const {
    check_same_k(*this, rhs);
    return den_exp_ == rhs.den_exp_ && coeffs_ == rhs.coeffs_;
}

RingElem RingElem::operator+(const RingElem& rhs) const {
    check_same_k(*this, rhs);
    const long e = std::max(den_exp_, rhs.den_exp_);
    std::vector<Integer> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] = coeffs_[i] << (e - den_exp_);
        c[i] += rhs.coeffs_[i] << (e - rhs.den_exp_);
    }
    return RingElem(k_, e, std::move(c));
}

RingElem RingElem::operator-(const RingElem& rhs) const {
    return *this + (-rhs);
}

RingElem RingElem::operator-() const {
    std::vector<Integer> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = -coeffs_[i];
    return RingElem(k_, den_exp_, std::move(c));
}

RingElem RingElem::operator*(const RingElem& rhs) const {
    check_same_k(*this, rhs);
    if (is_zero() || rhs.is_zero())
        return zero(k_);
    if (is_one())
        return rhs;
    if (rhs.is_one())
        return *this;
    const long n = k_.coeff_len();
    std::vector<Integer> c(n, 0);
    for (long i = 0; i < n; ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (long j = 0; j < n; ++j) {
            if (rhs.coeffs_[j] == 0)
                continue;
            Integer prod = coeffs_[i] * rhs.coeffs_[j];
            long idx = i + j;
            if (idx >= n)
                c[idx - n] -= prod; // zeta^{2^{k-1}} = -1
            else
                c[idx] += prod;
        }
    }
    return RingElem(k_, den_exp_ + rhs.den_exp_, std::move(c));
}

RingElem RingElem::galois_star() const {
    std::vector<Integer> c(coeffs_);
    for (size_t i = 1; i < c.size(); i += 2)
        c[i] = -c[i];
    return RingElem(k_, den_exp_, std::move(c));
}

RingElem RingElem::complex_conj() const {
    const long n = k_.coeff_len();
    std::vector<Integer> c(n, 0);
    c[0] = coeffs_[0];
    for (long i = 1; i < n; ++i)
        c[n - i] = -coeffs_[i]; // zeta^{-i} = -zeta^{2^{k-1}-i}
    return RingElem(k_, den_exp_, std::move(c));
}

std::complex<double> RingElem::float_embed() const {
    const double scale = std::ldexp(1.0, static_cast<int>(-den_exp_));
    std::complex<double> acc(0.0, 0.0);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(k_.order());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        const double angle = step * static_cast<double>(i);
        acc += coeffs_[i].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc * scale;
}

RingElem RingElem::lift(Precision to_k) const {
    if (to_k.k < k_.k)
        throw ValidationError("ring_lift target precision must be >= source");
    if (to_k == k_)
        return *this;
    const long stride = 1L << (to_k.k - k_.k);
    std::vector<Integer> c(to_k.coeff_len(), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        c[static_cast<long>(i) * stride] = coeffs_[i];
    return RingElem(to_k, den_exp_, std::move(c));
}

std::string RingElem::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        if (!first)
            os << " + ";
        os << coeffs_[i].get_str();
        if (i > 0)
            os << "*z^" << i;
        first = false;
    }
    if (first)
        os << "0";
    if (den_exp_ > 0)
        os << " / 2^" << den_exp_;
    return os.str();
}

} // namespace pik
