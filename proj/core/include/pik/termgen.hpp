#pragma once

#include "pik/term.hpp"
#include "pik/common.hpp"

namespace pik {

/// Knobs for random term generation (property suites and the CLI drivers).
struct TermGenOptions {
    int max_depth = 4;
    bool allow_kron = true;
    bool allow_scale = true;
    bool allow_h = true; // only effective when k >= 3
    bool allow_v = true;
};

/// A random well-formed term acting on the given object.
Term random_term(Rng& rng, Precision k, long dim, const TermGenOptions& opts = {});

/// A random well-formed term with dim drawn from [1, max_dim].
Term random_term_any_dim(Rng& rng, Precision k, long max_dim, const TermGenOptions& opts = {});

} // namespace pik
