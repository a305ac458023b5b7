#pragma once

#include <string>

#include "pik/term.hpp"

namespace pik {

/**
 * Parse the textual term syntax:
 *
 *   term := seq
 *   seq  := sum { ";" sum }            left-assoc, diagrammatic order: "f ; g" is g after f
 *   sum  := prod { "(+)" prod }
 *   prod := atom { "(x)" atom }
 *   atom := "id(" nat ")" | "swap(" nat "," nat ")" | "zeta" ["^" int]
 *         | "V" | "X" | "S" | "T" | "H" | "omega"
 *         | "ctrl(" term ")" | "cphase(" nat ")"
 *         | "dagger(" term ")" | "conj(" term ")"
 *         | "scale(" int "," term ")" | "(" term ")"
 *
 * (x) binds tighter than (+), which binds tighter than ";".
 * The derived builders X/S/T/H/omega/cphase, as well as dagger and conj,
 * expand at parse time using the session precision k.
 */
Term parse(const std::string& src, Precision k);

/**
 * Canonical rendering with minimal parentheses. parse(pretty(t), k) is
 * structurally equal to t for every well-formed Kron-free or Kron-bearing
 * term (dagger/conj/builders never appear in output).
 */
std::string pretty(const Term& t);

} // namespace pik
