#include "pik/matrix.hpp"

#include <sstream>

namespace pik {

ExactMatrix::ExactMatrix(Precision k, long rows, long cols)
    : k_(k), rows_(rows), cols_(cols), entries_(rows * cols, RingElem::zero(k)) {
    if (rows <= 0 || cols <= 0)
        throw ShapeError("matrix dimensions must be positive");
}

ExactMatrix::ExactMatrix(Precision k, long rows, long cols, std::vector<RingElem> entries)
    : k_(k), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows <= 0 || cols <= 0)
        throw ShapeError("matrix dimensions must be positive");
    if (static_cast<long>(entries_.size()) != rows * cols)
        throw ShapeError("entry count does not match matrix shape");
    for (const RingElem& e : entries_)
        if (e.precision() != k_)
            throw PrecisionMismatch("matrix entry precision differs from matrix precision");
}

void ExactMatrix::set(long r, long c, RingElem v) {
    if (v.precision() != k_)
        throw PrecisionMismatch("entry precision differs from matrix precision");
    entries_[r * cols_ + c] = std::move(v);
}

ExactMatrix ExactMatrix::identity(Precision k, long n) {
    ExactMatrix m(k, n, n);
    for (long i = 0; i < n; ++i)
        m.set(i, i, RingElem::one(k));
    return m;
}

ExactMatrix ExactMatrix::zero(Precision k, long rows, long cols) {
    return ExactMatrix(k, rows, cols);
}

ExactMatrix ExactMatrix::permutation(Precision k, const std::vector<long>& p) {
    const long n = static_cast<long>(p.size());
    std::vector<bool> seen(n, false);
    for (long v : p) {
        if (v < 0 || v >= n || seen[v])
            throw ValidationError("permutation is not a bijection");
        seen[v] = true;
    }
    ExactMatrix m(k, n, n);
    for (long j = 0; j < n; ++j)
        m.set(p[j], j, RingElem::one(k));
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
    if (k_ != rhs.k_)
        throw PrecisionMismatch("matrix product across precisions");
    if (cols_ != rhs.rows_)
        throw ShapeError("matrix product shape mismatch: " + std::to_string(cols_) + " vs " +
                         std::to_string(rhs.rows_));
    ExactMatrix out(k_, rows_, rhs.cols_);
    // Skip zero entries; permutation-shaped factors make most products sparse.
    for (long i = 0; i < rows_; ++i) {
        for (long l = 0; l < cols_; ++l) {
            const RingElem& a = at(i, l);
            if (a.is_zero())
                continue;
            for (long j = 0; j < rhs.cols_; ++j) {
                const RingElem& b = rhs.at(l, j);
                if (b.is_zero())
                    continue;
                out.entries_[i * out.cols_ + j] = out.at(i, j) + a * b;
            }
        }
    }
    return out;
}

bool ExactMatrix::operator==(const ExactMatrix& rhs) const {
    if (k_ != rhs.k_ || rows_ != rhs.rows_ || cols_ != rhs.cols_)
        return false;
    return entries_ == rhs.entries_;
}

ExactMatrix ExactMatrix::scaled(const RingElem& s) const {
    ExactMatrix out(k_, rows_, cols_);
    for (long i = 0; i < rows_ * cols_; ++i)
        out.entries_[i] = entries_[i] * s;
    return out;
}

ExactMatrix ExactMatrix::dagger() const {
    ExactMatrix out(k_, cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            out.set(j, i, at(i, j).complex_conj());
    return out;
}

ExactMatrix ExactMatrix::star_entrywise() const {
    ExactMatrix out(k_, rows_, cols_);
    for (long i = 0; i < rows_ * cols_; ++i)
        out.entries_[i] = entries_[i].galois_star();
    return out;
}

bool ExactMatrix::is_unitary() const {
    if (!is_square())
        throw ShapeError("unitarity is defined for square matrices only");
    return (*this) * dagger() == identity(k_, rows_);
}

ExactMatrix ExactMatrix::lift(Precision to_k) const {
    std::vector<RingElem> entries;
    entries.reserve(entries_.size());
    for (const RingElem& e : entries_)
        entries.push_back(e.lift(to_k));
    return ExactMatrix(to_k, rows_, cols_, std::move(entries));
}

ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.k_ != b.k_)
        throw PrecisionMismatch("direct_sum across precisions");
    ExactMatrix out(a.k_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (long i = 0; i < a.rows_; ++i)
        for (long j = 0; j < a.cols_; ++j)
            out.set(i, j, a.at(i, j));
    for (long i = 0; i < b.rows_; ++i)
        for (long j = 0; j < b.cols_; ++j)
            out.set(a.rows_ + i, a.cols_ + j, b.at(i, j));
    return out;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.k_ != b.k_)
        throw PrecisionMismatch("kron across precisions");
    ExactMatrix out(a.k_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (long i = 0; i < a.rows_; ++i)
        for (long j = 0; j < a.cols_; ++j) {
            if (a.at(i, j).is_zero())
                continue;
            for (long i2 = 0; i2 < b.rows_; ++i2)
                for (long j2 = 0; j2 < b.cols_; ++j2) {
                    if (b.at(i2, j2).is_zero())
                        continue;
                    out.set(i * b.rows_ + i2, j * b.cols_ + j2, a.at(i, j) * b.at(i2, j2));
                }
        }
    return out;
}

std::string ExactMatrix::to_string() const {
    std::ostringstream os;
    for (long i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (long j = 0; j < cols_; ++j) {
            os << "[" << at(i, j).to_string() << "]";
            if (j + 1 < cols_)
                os << " ";
        }
        os << (i + 1 < rows_ ? "\n" : "]");
    }
    return os.str();
}

} // namespace pik
