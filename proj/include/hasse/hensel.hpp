#pragma once

#include <vector>

#include "hasse/numeric.hpp"

namespace hasse {

// Sparse sum of monomials c * x_var^exp (exp = 0 gives a constant term;
// var is ignored then). Covers diagonal forms, norm equations and the
// weighted quartic; partial derivatives stay in the same shape.
struct Monomial {
  Int c;
  int var = -1;
  unsigned exp = 0;
};

struct DiagonalEquation {
  int nvars = 0;
  std::vector<Monomial> terms;

  Int eval_mod(const std::vector<Int>& x, const Int& mod) const;
  Int partial_mod(int var, const std::vector<Int>& x, const Int& mod) const;
};

enum class HenselOutcome {
  Certified,             // v(f) > 2*min_i v(df/dx_i), decided at this level
  NotCertified,          // criterion decidedly fails at this level
  InsufficientPrecision  // the inequality cannot be decided at level k
};

// Single-equation strong Hensel criterion at a residue point mod p^k.
// Valuations are read from residues; a quantity that vanishes mod p^k has
// only the lower bound k, and the outcome is InsufficientPrecision whenever
// that bound cannot settle the comparison. Never coerced to a boolean.
HenselOutcome hensel_liftable(const DiagonalEquation& f, const std::vector<Int>& point,
                              const Int& p, int level);

// Newton refinement of a Certified residue point to a deeper level. Returns
// coordinates mod p^target with f(point) ≡ 0 mod p^target (and in fact to
// target + delta where delta is the pivot derivative valuation). Empty
// optional when the input does not certify.
std::optional<std::vector<Int>> hensel_refine(const DiagonalEquation& f,
                                              const std::vector<Int>& point,
                                              const Int& p, int level, int target);

}  // namespace hasse
