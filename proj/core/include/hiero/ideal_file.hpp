#pragma once

// Text format for (ring, order, grading, ideal):
//
//   ring x11@0,1,1 x12@0,1,2 y;
//   order lex x11, x12, y;
//   grading 2: x11=[1,0] x12=[0,1] y=[1,1];   # optional, default standard
//   gens x11*x12 - 2/3*y^2, y;
//
// "#" starts a comment running to the end of the line. The order must list
// every variable once. An empty generator list ("gens;") is the zero ideal.

#include <string>
#include <string_view>

#include "hiero/groebner.hpp"
#include "hiero/zoo.hpp"

namespace hiero {

struct IdealFile {
  Ring ring;
  TermOrder order;
  Grading grading;
  Ideal ideal;
};

/// Throws SyntaxError (with position), UndeclaredVariable, DuplicateVariable
/// or NonPositiveGrading.
IdealFile parse_ideal_file(std::string_view text);

/// Canonical text for `f`; parse_ideal_file reads it back to the same value.
/// Throws InvalidArgument for names that are not identifiers or for
/// generators with a constant term.
std::string print_ideal_file(const IdealFile& f);

IdealFile to_ideal_file(const Problem& p);

}  // namespace hiero
