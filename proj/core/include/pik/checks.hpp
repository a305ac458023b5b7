#pragma once

#include <string>
#include <vector>

#include "pik/eval.hpp"

namespace pik {

/// Result of a verification suite; serialised as the pik-report-1 schema.
struct CheckReport {
    std::string suite;
    int k = 0;
    int trials = 0;
    std::vector<std::string> checks;   // names of the checks that ran
    std::vector<std::string> failures; // empty iff everything passed

    bool ok() const { return failures.empty(); }
    void record(const std::string& name, bool passed) {
        checks.push_back(name);
        if (!passed)
            failures.push_back(name);
    }
};

/**
 * Verify the defining relations at level k by exact evaluation:
 * V^2 = X, V S V = S V S, zeta^{2^k} = 1, and for k >= 3 the derived
 * identities HH = id, S^2 = Z and T^{2^{k-2}} = S.
 */
CheckReport check_axioms(Precision k);

/**
 * Verify the two-monoidal-structure coherences on random instances:
 * annihilation, right distributivity (f(+)g)(x)h = (f(x)h)(+)(g(x)h),
 * the sigma_+ compatibility square, the four-summand delta_L diagram,
 * and interchange.
 */
CheckReport check_coherence(Precision k, int trials, std::uint64_t seed);

} // namespace pik
