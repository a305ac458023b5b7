#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pik {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two operands live at different precision levels k.
class PrecisionMismatch : public Error {
public:
    explicit PrecisionMismatch(const std::string& msg) : Error(msg) {}
};

/// Matrix shapes or term arities do not line up.
class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& msg) : Error(msg) {}
};

/// Bad argument values (k out of range, non-bijective permutation, ...).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// Surface-syntax errors, carrying line:column.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& msg)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line(line), column(column) {}
    int line;
    int column;
};

/// Cooperative cancellation was requested mid-operation.
class Cancelled : public Error {
public:
    Cancelled() : Error("operation cancelled") {}
};

/**
 * Precision level k of the cyclotomic ring and the term language.
 * All constructions require k >= 2; the H and omega gates need k >= 3.
 */
struct Precision {
    int k;

    explicit Precision(int k_) : k(k_) {
        if (k < 2)
            throw ValidationError("precision level must be >= 2, got " + std::to_string(k));
        if (k > 30)
            throw ValidationError("precision level too large: " + std::to_string(k));
    }

    long order() const { return 1L << k; }           // 2^k, size of the scalar group
    long coeff_len() const { return 1L << (k - 1); } // 2^{k-1}, length of coefficient vectors

    bool operator==(const Precision&) const = default;
};

/// splitmix64: tiny deterministic PRNG so suite reports are identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Uniform value in [lo, hi] inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool flip() { return (next() & 1) != 0; }

private:
    std::uint64_t state_;
};

} // namespace pik
