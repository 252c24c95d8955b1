#ifndef GIRA_ALGEBRA_IO_HPP
#define GIRA_ALGEBRA_IO_HPP

#include <iosfwd>
#include <string>

#include "gira/algebra.hpp"

namespace gira {

/// Line-oriented algebra format. '#' starts a comment, blank lines are
/// skipped and unknown keys are errors:
///
///   algebra <name>
///   size <n>
///   elements <lbl0> ... <lbl(n-1)>
///   const one = <lbl>            (likewise zero, top, bot)
///   table meet                   (n rows of n labels; row = left argument)
///   ...
///   table neg                    (a single row of n labels; likewise bang)
FiniteAlgebra parse_algebra(const std::string& text);
FiniteAlgebra parse_algebra_file(const std::string& path);

std::string print_algebra(const FiniteAlgebra& a);

}  // namespace gira

#endif
