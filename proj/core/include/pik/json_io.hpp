#pragma once

#include <string>

#include "pik/matrix.hpp"

namespace pik {

// Wire formats:
//   RingElem    {"k": k, "den_exp": e, "coeffs": [c_0, ...]}     (length exactly 2^{k-1})
//   ExactMatrix {"k": k, "rows": r, "cols": c, "entries": [[RingElem, ...], ...]} (row-major)
//
// Coefficients are JSON integers; values outside the exactly-representable
// range of a double are written (and accepted) as decimal strings so the
// format stays bit-exact at any magnitude.
//
// indent < 0 emits compact single-line JSON.

std::string ring_to_json_text(const RingElem& e, int indent = -1);
RingElem ring_from_json_text(const std::string& text);

std::string matrix_to_json_text(const ExactMatrix& m, int indent = -1);
ExactMatrix matrix_from_json_text(const std::string& text);

} // namespace pik
