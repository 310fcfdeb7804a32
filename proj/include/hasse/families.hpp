#pragma once

#include <map>
#include <string>
#include <vector>

#include "hasse/solubility.hpp"

namespace hasse {

// residual fibre over a coordinate divisor {a_i = 0}: the diagonal form in
// the remaining variables
struct FiberDescriptor {
  int variables;
  int degree;
};

// the family of diagonal degree-d forms in m variables, fibred over the
// coefficient space P^{m-1}
struct Family {
  int d = 2;
  int m = 3;

  static Family diagonal(int d, int m);
  static Family conics() { return diagonal(2, 3); }
  static Family cubic_surfaces() { return diagonal(3, 4); }

  int n() const { return m - 1; }  // base dimension
  std::vector<FiberDescriptor> divisor_fibres() const;
  DiagonalForm fibre(const std::vector<long>& a) const;  // all a_i nonzero
  std::string descriptor() const;
};

// ---- split-fibre invariants -------------------------------------------------

struct DivisorDelta {
  int divisor;  // index of the vanishing coefficient
  Rat delta;
};

struct DeltaReport {
  std::vector<DivisorDelta> per_divisor;
  Rat total;  // Delta(pi) = sum (1 - delta_D)
};

// delta for a d-line fibre: the fraction of the affine group
// {j -> s j + t : s in (Z/d)^*, t in Z/d} with a fixed point, by enumeration
Rat affine_fixed_fraction(int d);

DeltaReport delta_invariant(const Family& fam);

// ---- Schanuel prediction ----------------------------------------------------

struct SchanuelConstantsQ {
  int n;
  double zeta;         // zeta(n+1)
  double coefficient;  // 2^{n+1} / (2 zeta(n+1)): leading term of N_tot(B)/B^{n+1}
};

SchanuelConstantsQ schanuel_prediction(int n);

// ---- census -----------------------------------------------------------------

struct CensusReport {
  std::string family;
  long B = 0;
  long long N_tot = 0;
  long long N_loc = 0;
  long long degenerate = 0;  // base points with some a_i = 0 (never in N_loc)
  std::map<std::string, long long> per_place_failures;  // first failing place
  long long work_units = 0;                             // fibres decided
  Rat ratio() const;                                    // N_loc / N_tot
};

// One pass over all nondegenerate fibres of height <= max(Bs), reported at
// each rung of the ladder. nparts > 1 runs disjoint first-coordinate
// partitions sequentially and merges them (determinism check).
std::vector<CensusReport> census_ladder(const Family& fam, std::vector<long> Bs, int nparts = 1);
CensusReport census(const Family& fam, long B, int nparts = 1);

struct DecayFit {
  double exponent;  // x in N_loc/B^{n+1} ~ C (log B)^{-x}
  double residual;  // root-mean-square fit residual
  int points;
};

// least squares of log(N_loc/B^{n+1}) against -x log log B + const
DecayFit decay_exponent_fit(const std::vector<CensusReport>& reports, int n);

}  // namespace hasse
