#pragma once

#include <vector>

#include "hasse/padic.hpp"

namespace hasse {

// Element of Q/Z, reduced, in [0,1). Quaternion classes land in {0, 1/2}.
struct QmodZ {
  long num = 0;
  long den = 1;

  static QmodZ zero() { return {0, 1}; }
  static QmodZ half() { return {1, 2}; }
  QmodZ normalized() const;
  QmodZ operator+(const QmodZ& o) const;
  bool is_zero() const { return num == 0; }
  friend bool operator==(const QmodZ& a, const QmodZ& b) {
    QmodZ x = a.normalized(), y = b.normalized();
    return x.num == y.num && x.den == y.den;
  }
  friend bool operator<(const QmodZ& a, const QmodZ& b) {
    QmodZ x = a.normalized(), y = b.normalized();
    return x.num * y.den < y.num * x.den;
  }
  std::string str() const;
};

// Local invariant of the quaternion algebra (a,b) over Q_v, in {0, 1/2}.
// Real place: 1/2 iff a<0 and b<0. Odd p: tame formula on valuations and
// unit Legendre symbols. p=2: the epsilon/omega mod-8 formula.
QmodZ hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

// Same symbol when b is only known as a p-adic approximation; nullopt when
// the precision cannot settle the unit class (mod p for odd p, mod 8 at 2).
std::optional<QmodZ> hilbert_symbol_approx(const Rat& a, const PadicApprox& b);

enum class OracleAnswer { IsNorm, NotNorm, Undecided };

struct NormSearchResult {
  OracleAnswer answer = OracleAnswer::Undecided;
  int level_used = 0;
  std::vector<Int> witness;  // (x, y) residues for IsNorm found by search
};

// Ground-truth oracle: is b a norm from Q_v(sqrt(a))? Decided by direct
// search for x^2 - a y^2 = b (real: sign analysis; finite: residue tree
// with Hensel certification of hits, exhaustion certifies misses). Split
// algebras (a a square in Q_v) are norms of everything. Deliberately
// independent of the hilbert_symbol formulas.
NormSearchResult norm_oracle(const Rat& a, const Rat& b, const Place& v, int level);

// Candidate support of (a,b): the real place, 2, and odd primes dividing
// numerator or denominator of a or b.
std::vector<Place> candidate_places(const Rat& a, const Rat& b);

struct LocalInvariant {
  Place v;
  QmodZ inv;
};

// Invariants at every candidate place (all other places are tame with unit
// arguments, hence 0).
std::vector<LocalInvariant> local_invariants(const Rat& a, const Rat& b);

// Sum of all local invariants in Q/Z (the reciprocity total).
QmodZ invariant_sum(const Rat& a, const Rat& b);

// Places where the invariant is nonzero.
std::vector<Place> invariant_support(const Rat& a, const Rat& b);

// Quadratic reciprocity for distinct odd primes, derived two ways: once from
// Legendre symbols directly, once by isolating terms of invariant_sum(p,q)=0.
bool reciprocity_check(const Int& p, const Int& q);

}  // namespace hasse
