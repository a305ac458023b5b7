#pragma once

#include <vector>

#include "pik/checks.hpp"
#include "pik/decide.hpp"

namespace pik {

/**
 * A classical-quantum object: an ordered list of positive dimensions,
 * branching on measurement outcomes.
 */
struct CqObject {
    std::vector<long> dims;

    CqObject(std::initializer_list<long> d) : dims(d) { validate(); }
    explicit CqObject(std::vector<long> d) : dims(std::move(d)) { validate(); }

    size_t blocks() const { return dims.size(); }
    long total() const;
    bool operator==(const CqObject&) const = default;

    /// Blockwise product [a_i] (x) [b_j] = [a_i * b_j], (i, j) lexicographic.
    friend CqObject operator*(const CqObject& a, const CqObject& b);
    /// Concatenation [a_i] (+) [b_j].
    friend CqObject operator+(const CqObject& a, const CqObject& b);

    std::string to_string() const;

private:
    void validate() const;
};

/**
 * A completely positive trace-preserving map between classical-quantum
 * objects, stored as exact Choi blocks over D[zeta_k].
 *
 * For input block i (dim n) and output block j (dim m), choi(i, j) is the
 * (m*n) x (m*n) matrix J with J[x*n+a, y*n+b] = Phi_ij(E_ab)[x, y], i.e. the
 * convention J(Phi) = sum_ab Phi(|a><b|) (x) |a><b| with the output factor
 * major. Equality of channels is exact blockwise Choi equality.
 *
 * Every constructor checks exact trace preservation:
 * sum_j Tr_out(choi(i, j)) = I_{n_i} for each input block i.
 */
class Channel {
public:
    Channel(Precision k, CqObject dom, CqObject cod, std::vector<std::vector<ExactMatrix>> choi);

    Precision precision() const { return k_; }
    const CqObject& dom() const { return dom_; }
    const CqObject& cod() const { return cod_; }
    const ExactMatrix& choi(size_t in_block, size_t out_block) const {
        return choi_[in_block][out_block];
    }

    bool operator==(const Channel& rhs) const;
    bool operator!=(const Channel& rhs) const { return !(*this == rhs); }

    /**
     * Apply to a density matrix living in input block i; returns one output
     * density matrix per output block. Test instrumentation.
     */
    std::vector<ExactMatrix> apply(size_t in_block, const ExactMatrix& rho) const;

private:
    Precision k_;
    CqObject dom_, cod_;
    std::vector<std::vector<ExactMatrix>> choi_;
};

/// The unitary channel rho -> U rho U^dag of a well-formed endo term.
Channel chan_of_unitary(const Term& t, Precision k);

/// Identity channel on an object.
Channel chan_id(const CqObject& a, Precision k);

/**
 * Heap/garbage presentation of a channel by a reversible core:
 * u acts on m + h = n * g; the heap is initialised to the first coordinate
 * block and the size-g minor tensor factor of the output is traced out.
 */
struct HugPresentation {
    long m, n; // channel [m] -> [n]
    long h, g; // heap and garbage dimensions; m + h = n * g
    Term u;
};

Channel chan_from_hug(const HugPresentation& p, Precision k);

/// State preparation [1] -> [2]: rho -> rho |0><0|.
Channel chan_new(Precision k);

/// Block measurement [a+b] -> [a, b].
Channel chan_measure(long a, long b, Precision k);

/// Full trace [n] -> [1].
Channel chan_discard(long n, Precision k);

Channel chan_compose(const Channel& g, const Channel& f);
Channel chan_oplus(const Channel& f, const Channel& g);
Channel chan_tensor(const Channel& f, const Channel& g);

/// Classical control: dispatch on input block; copair(f, g) . inj_i recovers f or g.
Channel chan_copair(const Channel& f, const Channel& g);
/// side 0: [A] -> [A, B]; side 1: [B] -> [A, B].
Channel chan_inj(int side, const CqObject& a, const CqObject& b, Precision k);

/// Exact blockwise Choi equality (with object compatibility check).
bool chan_eq(const Channel& f, const Channel& g);

/**
 * The channel-completeness biconditional for unitary terms:
 * chan_of_unitary(f) = chan_of_unitary(g)  <=>  f = g up to a global phase.
 */
bool completeness_check(const Term& f, const Term& g, Precision k);

/**
 * Verify the presentation axioms (A)-(L) of the algebraic theory of quantum
 * channels, instantiated with random unitary terms, as exact Choi equalities.
 */
CheckReport staton_suite(Precision k, int trials, std::uint64_t seed);

} // namespace pik
