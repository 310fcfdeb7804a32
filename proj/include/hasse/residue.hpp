#pragma once

#include <vector>

#include "hasse/squareclass.hpp"

namespace hasse {

// tame residue of the quaternion symbol (a, f) over Q(t) along a divisor:
// the square class of (-1)^{v(a)v(f)} a^{v(f)} f^{-v(a)} in the residue
// field, with v the divisor's valuation (v(a)=0 for constant a; v = -deg at
// infinity).  Trivial iff the symbol extends over the divisor.
SquareClass residue_tame(const Rat& a, const QRatFunc& f, const Divisor& D);

// divisors with nontrivial residue: the zeros and poles of f, plus infinity,
// filtered by residue_tame.  Empty iff the class is constant.
std::vector<Divisor> ramification_locus(const Rat& a, const QRatFunc& f);

// square class of the reduction of f mod an odd prime p, in F_p or F_p(t);
// numerator and denominator are scaled to unit content before reducing
SquareClass reduction_residue(const Int& p, const QRatFunc& f);

}  // namespace hasse
