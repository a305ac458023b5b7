#include "pik/channel.hpp"

#include <sstream>

namespace pik {

void CqObject::validate() const {
    if (dims.empty())
        throw ValidationError("cq object must have at least one block");
    for (long d : dims)
        if (d < 1)
            throw ValidationError("cq object dimensions must be positive");
}

long CqObject::total() const {
    long t = 0;
    for (long d : dims)
        t += d;
    return t;
}

CqObject operator*(const CqObject& a, const CqObject& b) {
    std::vector<long> dims;
    dims.reserve(a.blocks() * b.blocks());
    for (long x : a.dims)
        for (long y : b.dims)
            dims.push_back(x * y);
    return CqObject(std::move(dims));
}

CqObject operator+(const CqObject& a, const CqObject& b) {
    std::vector<long> dims(a.dims);
    dims.insert(dims.end(), b.dims.begin(), b.dims.end());
    return CqObject(std::move(dims));
}

std::string CqObject::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < dims.size(); ++i)
        os << (i ? "," : "") << dims[i];
    os << "]";
    return os.str();
}

Channel::Channel(Precision k, CqObject dom, CqObject cod,
                 std::vector<std::vector<ExactMatrix>> choi)
    : k_(k), dom_(std::move(dom)), cod_(std::move(cod)), choi_(std::move(choi)) {
    if (choi_.size() != dom_.blocks())
        throw ShapeError("choi block rows must match input blocks");
    for (size_t i = 0; i < dom_.blocks(); ++i) {
        if (choi_[i].size() != cod_.blocks())
            throw ShapeError("choi block cols must match output blocks");
        const long n = dom_.dims[i];
        ExactMatrix tr = ExactMatrix::zero(k_, n, n);
        for (size_t j = 0; j < cod_.blocks(); ++j) {
            const long m = cod_.dims[j];
            const ExactMatrix& block = choi_[i][j];
            if (block.rows() != m * n || block.cols() != m * n)
                throw ShapeError("choi block " + std::to_string(i) + "," + std::to_string(j) +
                                 " has wrong shape");
            if (block.precision() != k_)
                throw PrecisionMismatch("choi block precision mismatch");
            for (long a = 0; a < n; ++a)
                for (long b = 0; b < n; ++b) {
                    RingElem acc = tr.at(a, b);
                    for (long x = 0; x < m; ++x)
                        acc = acc + block.at(x * n + a, x * n + b);
                    tr.set(a, b, acc);
                }
        }
        if (tr != ExactMatrix::identity(k_, n))
            throw ValidationError("channel is not exactly trace-preserving on input block " +
                                  std::to_string(i));
    }
}

bool Channel::operator==(const Channel& rhs) const {
    if (k_ != rhs.k_ || dom_ != rhs.dom_ || cod_ != rhs.cod_)
        return false;
    return choi_ == rhs.choi_;
}

std::vector<ExactMatrix> Channel::apply(size_t in_block, const ExactMatrix& rho) const {
    const long n = dom_.dims[in_block];
    if (rho.rows() != n || rho.cols() != n)
        throw ShapeError("density matrix does not fit input block");
    std::vector<ExactMatrix> out;
    out.reserve(cod_.blocks());
    for (size_t j = 0; j < cod_.blocks(); ++j) {
        const long m = cod_.dims[j];
        const ExactMatrix& block = choi_[in_block][j];
        ExactMatrix o = ExactMatrix::zero(k_, m, m);
        for (long x = 0; x < m; ++x)
            for (long y = 0; y < m; ++y) {
                RingElem acc = RingElem::zero(k_);
                for (long a = 0; a < n; ++a)
                    for (long b = 0; b < n; ++b) {
                        const RingElem& c = block.at(x * n + a, y * n + b);
                        if (c.is_zero())
                            continue;
                        const RingElem& r = rho.at(a, b);
                        if (r.is_zero())
                            continue;
                        acc = acc + r * c;
                    }
                o.set(x, y, acc);
            }
        out.push_back(std::move(o));
    }
    return out;
}

namespace {

/// Choi block of rho -> W rho W^dag with a partial trace over the minor factor
/// of the output: W is d x m, the output is read as (d/g) x g with g minor.
ExactMatrix choi_of_isometry_traced(const ExactMatrix& w, long garbage, Precision k) {
    const long d = w.rows();
    const long m = w.cols();
    if (d % garbage != 0)
        throw ShapeError("garbage factor must divide the isometry height");
    const long out = d / garbage;
    ExactMatrix block = ExactMatrix::zero(k, out * m, out * m);
    for (long x = 0; x < out; ++x)
        for (long a = 0; a < m; ++a)
            for (long y = 0; y < out; ++y)
                for (long b = 0; b < m; ++b) {
                    RingElem acc = RingElem::zero(k);
                    for (long t = 0; t < garbage; ++t) {
                        const RingElem& wa = w.at(x * garbage + t, a);
                        if (wa.is_zero())
                            continue;
                        const RingElem& wb = w.at(y * garbage + t, b);
                        if (wb.is_zero())
                            continue;
                        acc = acc + wa * wb.complex_conj();
                    }
                    block.set(x * m + a, y * m + b, acc);
                }
    return block;
}

ExactMatrix identity_choi(Precision k, long n) {
    ExactMatrix block = ExactMatrix::zero(k, n * n, n * n);
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y)
            block.set(x * n + x, y * n + y, RingElem::one(k));
    return block;
}

ExactMatrix zero_choi(Precision k, long n, long m) {
    return ExactMatrix::zero(k, m * n, m * n);
}

} // namespace

Channel chan_of_unitary(const Term& t, Precision k) {
    const ExactMatrix u = eval(t, k);
    const long d = u.rows();
    ExactMatrix block = ExactMatrix::zero(k, d * d, d * d);
    for (long x = 0; x < d; ++x)
        for (long a = 0; a < d; ++a) {
            const RingElem& ua = u.at(x, a);
            if (ua.is_zero())
                continue;
            for (long y = 0; y < d; ++y)
                for (long b = 0; b < d; ++b) {
                    const RingElem& ub = u.at(y, b);
                    if (ub.is_zero())
                        continue;
                    block.set(x * d + a, y * d + b, ua * ub.complex_conj());
                }
        }
    return Channel(k, CqObject{d}, CqObject{d}, {{std::move(block)}});
}

Channel chan_id(const CqObject& a, Precision k) {
    std::vector<std::vector<ExactMatrix>> choi;
    for (size_t i = 0; i < a.blocks(); ++i) {
        std::vector<ExactMatrix> row;
        for (size_t j = 0; j < a.blocks(); ++j)
            row.push_back(i == j ? identity_choi(k, a.dims[i])
                                 : zero_choi(k, a.dims[i], a.dims[j]));
        choi.push_back(std::move(row));
    }
    return Channel(k, a, a, std::move(choi));
}

Channel chan_from_hug(const HugPresentation& p, Precision k) {
    if (p.m < 1 || p.n < 1 || p.h < 0 || p.g < 1)
        throw ValidationError("invalid heap/garbage presentation");
    if (p.m + p.h != p.n * p.g)
        throw ValidationError("heap/garbage dimension equation m + h = n * g violated");
    const ExactMatrix u = eval(p.u, k);
    if (u.rows() != p.m + p.h)
        throw ShapeError("core term does not act on m + h");
    // Isometry slice: heap initialised via the first injection.
    ExactMatrix w(k, u.rows(), p.m);
    for (long r = 0; r < u.rows(); ++r)
        for (long c = 0; c < p.m; ++c)
            w.set(r, c, u.at(r, c));
    ExactMatrix block = choi_of_isometry_traced(w, p.g, k);
    return Channel(k, CqObject{p.m}, CqObject{p.n}, {{std::move(block)}});
}

Channel chan_new(Precision k) {
    ExactMatrix block = ExactMatrix::zero(k, 2, 2);
    block.set(0, 0, RingElem::one(k));
    return Channel(k, CqObject{1}, CqObject{2}, {{std::move(block)}});
}

Channel chan_measure(long a, long b, Precision k) {
    if (a < 1 || b < 1)
        throw ValidationError("measurement blocks must be positive");
    const long n = a + b;
    ExactMatrix first = ExactMatrix::zero(k, a * n, a * n);
    for (long x = 0; x < a; ++x)
        for (long y = 0; y < a; ++y)
            first.set(x * n + x, y * n + y, RingElem::one(k));
    ExactMatrix second = ExactMatrix::zero(k, b * n, b * n);
    for (long x = 0; x < b; ++x)
        for (long y = 0; y < b; ++y)
            second.set(x * n + (a + x), y * n + (a + y), RingElem::one(k));
    return Channel(k, CqObject{n}, CqObject{a, b}, {{std::move(first), std::move(second)}});
}

Channel chan_discard(long n, Precision k) {
    if (n < 1)
        throw ValidationError("discard dimension must be positive");
    return Channel(k, CqObject{n}, CqObject{1}, {{ExactMatrix::identity(k, n)}});
}

Channel chan_compose(const Channel& g, const Channel& f) {
    if (f.precision() != g.precision())
        throw PrecisionMismatch("channel composition across precisions");
    if (f.cod() != g.dom())
        throw ShapeError("channel composition object mismatch: " + f.cod().to_string() + " vs " +
                         g.dom().to_string());
    const Precision k = f.precision();
    const CqObject& dom = f.dom();
    const CqObject& mid = f.cod();
    const CqObject& cod = g.cod();
    std::vector<std::vector<ExactMatrix>> choi;
    for (size_t i = 0; i < dom.blocks(); ++i) {
        const long n = dom.dims[i];
        std::vector<ExactMatrix> row;
        for (size_t l = 0; l < cod.blocks(); ++l) {
            const long p = cod.dims[l];
            ExactMatrix out = ExactMatrix::zero(k, p * n, p * n);
            for (size_t j = 0; j < mid.blocks(); ++j) {
                const long m = mid.dims[j];
                const ExactMatrix& jf = f.choi(i, j);
                const ExactMatrix& jg = g.choi(j, l);
                // J[(x,a),(y,b)] += sum_{u,v} Jf[(u,a),(v,b)] * Jg[(x,u),(y,v)]
                for (long u = 0; u < m; ++u)
                    for (long v = 0; v < m; ++v) {
                        for (long a = 0; a < n; ++a)
                            for (long b = 0; b < n; ++b) {
                                const RingElem& cf = jf.at(u * n + a, v * n + b);
                                if (cf.is_zero())
                                    continue;
                                for (long x = 0; x < p; ++x)
                                    for (long y = 0; y < p; ++y) {
                                        const RingElem& cg = jg.at(x * m + u, y * m + v);
                                        if (cg.is_zero())
                                            continue;
                                        out.set(x * n + a, y * n + b,
                                                out.at(x * n + a, y * n + b) + cf * cg);
                                    }
                            }
                    }
            }
            row.push_back(std::move(out));
        }
        choi.push_back(std::move(row));
    }
    return Channel(k, dom, cod, std::move(choi));
}

Channel chan_oplus(const Channel& f, const Channel& g) {
    if (f.precision() != g.precision())
        throw PrecisionMismatch("channel sum across precisions");
    const Precision k = f.precision();
    const CqObject dom = f.dom() + g.dom();
    const CqObject cod = f.cod() + g.cod();
    const size_t fi = f.dom().blocks(), fo = f.cod().blocks();
    std::vector<std::vector<ExactMatrix>> choi;
    for (size_t i = 0; i < dom.blocks(); ++i) {
        std::vector<ExactMatrix> row;
        for (size_t j = 0; j < cod.blocks(); ++j) {
            const bool in_f = i < fi, out_f = j < fo;
            if (in_f && out_f)
                row.push_back(f.choi(i, j));
            else if (!in_f && !out_f)
                row.push_back(g.choi(i - fi, j - fo));
            else
                row.push_back(zero_choi(k, dom.dims[i], cod.dims[j]));
        }
        choi.push_back(std::move(row));
    }
    return Channel(k, dom, cod, std::move(choi));
}

Channel chan_tensor(const Channel& f, const Channel& g) {
    if (f.precision() != g.precision())
        throw PrecisionMismatch("channel tensor across precisions");
    const Precision k = f.precision();
    const CqObject dom = f.dom() * g.dom();
    const CqObject cod = f.cod() * g.cod();
    const size_t gi = g.dom().blocks(), go = g.cod().blocks();
    std::vector<std::vector<ExactMatrix>> choi;
    for (size_t i = 0; i < dom.blocks(); ++i) {
        const size_t i1 = i / gi, i2 = i % gi;
        const long n1 = f.dom().dims[i1], n2 = g.dom().dims[i2];
        const long n = n1 * n2;
        std::vector<ExactMatrix> row;
        for (size_t j = 0; j < cod.blocks(); ++j) {
            const size_t j1 = j / go, j2 = j % go;
            const long m1 = f.cod().dims[j1], m2 = g.cod().dims[j2];
            const long m = m1 * m2;
            const ExactMatrix& jf = f.choi(i1, j1);
            const ExactMatrix& jg = g.choi(i2, j2);
            ExactMatrix out = ExactMatrix::zero(k, m * n, m * n);
            for (long x1 = 0; x1 < m1; ++x1)
                for (long a1 = 0; a1 < n1; ++a1)
                    for (long y1 = 0; y1 < m1; ++y1)
                        for (long b1 = 0; b1 < n1; ++b1) {
                            const RingElem& cf = jf.at(x1 * n1 + a1, y1 * n1 + b1);
                            if (cf.is_zero())
                                continue;
                            for (long x2 = 0; x2 < m2; ++x2)
                                for (long a2 = 0; a2 < n2; ++a2)
                                    for (long y2 = 0; y2 < m2; ++y2)
                                        for (long b2 = 0; b2 < n2; ++b2) {
                                            const RingElem& cg =
                                                jg.at(x2 * n2 + a2, y2 * n2 + b2);
                                            if (cg.is_zero())
                                                continue;
                                            const long x = x1 * m2 + x2, y = y1 * m2 + y2;
                                            const long a = a1 * n2 + a2, b = b1 * n2 + b2;
                                            out.set(x * n + a, y * n + b, cf * cg);
                                        }
                        }
            row.push_back(std::move(out));
        }
        choi.push_back(std::move(row));
    }
    return Channel(k, dom, cod, std::move(choi));
}

Channel chan_copair(const Channel& f, const Channel& g) {
    if (f.precision() != g.precision())
        throw PrecisionMismatch("channel copair across precisions");
    if (f.cod() != g.cod())
        throw ShapeError("copair requires equal codomains");
    const CqObject dom = f.dom() + g.dom();
    std::vector<std::vector<ExactMatrix>> choi;
    for (size_t i = 0; i < f.dom().blocks(); ++i) {
        std::vector<ExactMatrix> row;
        for (size_t j = 0; j < f.cod().blocks(); ++j)
            row.push_back(f.choi(i, j));
        choi.push_back(std::move(row));
    }
    for (size_t i = 0; i < g.dom().blocks(); ++i) {
        std::vector<ExactMatrix> row;
        for (size_t j = 0; j < g.cod().blocks(); ++j)
            row.push_back(g.choi(i, j));
        choi.push_back(std::move(row));
    }
    return Channel(f.precision(), dom, f.cod(), std::move(choi));
}

Channel chan_inj(int side, const CqObject& a, const CqObject& b, Precision k) {
    if (side != 0 && side != 1)
        throw ValidationError("injection side must be 0 or 1");
    const CqObject cod = a + b;
    const CqObject& dom = side == 0 ? a : b;
    const size_t offset = side == 0 ? 0 : a.blocks();
    std::vector<std::vector<ExactMatrix>> choi;
    for (size_t i = 0; i < dom.blocks(); ++i) {
        std::vector<ExactMatrix> row;
        for (size_t j = 0; j < cod.blocks(); ++j)
            row.push_back(j == i + offset ? identity_choi(k, dom.dims[i])
                                          : zero_choi(k, dom.dims[i], cod.dims[j]));
        choi.push_back(std::move(row));
    }
    return Channel(k, dom, cod, std::move(choi));
}

bool chan_eq(const Channel& f, const Channel& g) {
    if (f.precision() != g.precision())
        throw PrecisionMismatch("channel comparison across precisions");
    if (f.dom() != g.dom() || f.cod() != g.cod())
        throw ShapeError("channel comparison object mismatch");
    return f == g;
}

bool completeness_check(const Term& f, const Term& g, Precision k) {
    const bool channels_equal = chan_eq(chan_of_unitary(f, k), chan_of_unitary(g, k));
    const bool phase_equal = eq_up_to_phase(f, g, k).has_value();
    return channels_equal == phase_equal;
}

} // namespace pik
