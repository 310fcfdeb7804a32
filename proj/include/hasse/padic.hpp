#pragma once

#include <optional>

#include "hasse/place.hpp"

namespace hasse {

// v_p(x) for x in Q; nullopt encodes +infinity (x = 0). p must be prime.
std::optional<long> valuation(const Rat& x, const Int& p);
std::optional<long> valuation(const Int& x, const Int& p);

// Euler's criterion via fast modular exponentiation. p an odd prime,
// p does not divide a. Returns +1 or -1.
int legendre_symbol(const Int& a, const Int& p);

// Is x a nonzero square in Q_v?  x = 0 is rejected (square classes live in
// Q_v^*). real: sign test; odd p: even valuation and residue test on the
// unit part; p = 2: even valuation and unit ≡ 1 mod 8.
bool is_square_in_qv(const Rat& x, const Place& v);

// Unit-and-valuation split: x = p^val * u with u a p-adic unit; u is
// returned mod p^prec (prec >= 1). x != 0.
struct UnitSplit {
  long val;
  Int unit;  // in [0, p^prec)
};
UnitSplit unit_split(const Rat& x, const Int& p, int prec);

// An element of Q_p known to finite precision: p^val * u where u is a unit
// known mod p^prec. Used for evaluating functions at approximate points.
struct PadicApprox {
  Int p;
  long val = 0;
  Int unit = 1;  // in [0, p^prec), not divisible by p
  int prec = 1;

  PadicApprox mul(const PadicApprox& o) const;
  PadicApprox div(const PadicApprox& o) const;
  PadicApprox pow(int k) const;  // k may be negative
  static PadicApprox exact(const Rat& x, const Int& p, int prec);
  // From a raw residue r mod p^level (r != 0 mod p^level): valuation is
  // read off exactly, the unit keeps the precision that remains.
  static PadicApprox from_residue(const Int& r, const Int& p, int level);
};

}  // namespace hasse
