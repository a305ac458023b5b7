#pragma once

#include <vector>

#include "pik/ring.hpp"

namespace pik {

/**
 * Dense row-major matrix over D[zeta_k], with exact entrywise equality.
 *
 * Every entry shares the same precision k. Non-square matrices only appear
 * inside the channel layer (isometry slices); everything the term semantics
 * produces is square and unitary.
 */
class ExactMatrix {
public:
    ExactMatrix(Precision k, long rows, long cols);
    ExactMatrix(Precision k, long rows, long cols, std::vector<RingElem> entries);

    static ExactMatrix identity(Precision k, long n);
    static ExactMatrix zero(Precision k, long rows, long cols);
    /// 0/1 matrix sending basis vector j to basis vector p[j].
    static ExactMatrix permutation(Precision k, const std::vector<long>& p);

    Precision precision() const { return k_; }
    long rows() const { return rows_; }
    long cols() const { return cols_; }

    const RingElem& at(long r, long c) const { return entries_[r * cols_ + c]; }
    void set(long r, long c, RingElem v);

    ExactMatrix operator*(const ExactMatrix& rhs) const;
    bool operator==(const ExactMatrix& rhs) const;
    bool operator!=(const ExactMatrix& rhs) const { return !(*this == rhs); }

    /// Scale every entry.
    ExactMatrix scaled(const RingElem& s) const;

    /// Conjugate transpose (uses complex_conj entrywise).
    ExactMatrix dagger() const;
    /// galois_star applied entrywise, no transpose.
    ExactMatrix star_entrywise() const;

    bool is_square() const { return rows_ == cols_; }
    /// True iff a * dagger(a) = I exactly. Throws on non-square input.
    bool is_unitary() const;

    /// Lift all entries to a larger precision.
    ExactMatrix lift(Precision to_k) const;

    friend ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b);
    /// Kronecker product, left factor major:
    /// entry ((i*b.rows+i'), (j*b.cols+j')) = a[i,j] * b[i',j'].
    friend ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

    std::string to_string() const;

private:
    Precision k_;
    long rows_, cols_;
    std::vector<RingElem> entries_;
};

ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

} // namespace pik
