#ifndef GIRA_PARSER_HPP
#define GIRA_PARSER_HPP

#include <string>

#include "gira/formula.hpp"

namespace gira {

/// Surface syntax:
///   formula := imp
///   imp     := or ("->" imp)?            right-associative
///   or      := and ("\/" and)*
///   and     := mul ("/\" mul)*
///   mul     := un ("*" un)*
///   un      := ("~"|"!"|"?")* atom
///   atom    := "1" | "0" | "T" | "F" | ident | "(" formula ")"
/// Equation: formula "=" formula.
/// Quasiequation: eq ("&" eq)* "=>" eq.
/// Errors throw AlgebraError("SYNTAX-ERROR", ...) carrying the byte offset.
FormulaPtr parse_formula(const std::string& text);
Equation parse_equation(const std::string& text);
Quasiequation parse_quasiequation(const std::string& text);

}  // namespace gira

#endif
