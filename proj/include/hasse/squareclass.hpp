#pragma once

#include <string>
#include <vector>

#include "hasse/qpoly.hpp"

namespace hasse {

// divisor on the projective line over Q: a monic irreducible pi(t), or infinity
struct Divisor {
  bool infinite = false;
  QPoly pi;

  static Divisor at_infinity();
  static Divisor finite(QPoly pi);  // validates monic irreducible
  std::string str() const;
  bool operator==(const Divisor& o) const;
};

// an element of F*/(F*)^2 for the residue fields that actually occur:
// Q (degree-1 divisors and infinity), Q[t]/(pi) with a constant representative,
// F_p, and F_p(t)
class SquareClass {
 public:
  enum class Field { Rational, NumberField, Fp, FpRatFunc };

  static SquareClass rational(const Rat& rep);
  static SquareClass number_field(QPoly modulus, const Rat& rep);
  static SquareClass fp(const Int& p, const Int& rep);
  static SquareClass fp_ratfunc(const Int& p, std::vector<Int> num, std::vector<Int> den);

  Field field() const { return field_; }
  bool is_trivial() const { return trivial_; }
  SquareClass operator*(const SquareClass& o) const;  // same field required
  std::string str() const;

  const Rat& rep_rational() const { return rep_q_; }
  const QPoly& modulus() const { return modulus_; }

 private:
  SquareClass() = default;
  Field field_ = Field::Rational;
  Rat rep_q_ = 1;
  QPoly modulus_;
  Int p_ = 0;
  Int rep_int_ = 1;
  std::vector<Int> rep_num_, rep_den_;
  bool trivial_ = true;
};

// is the constant a a square in the residue field of D?  Complete for
// residue fields of degree 1, 2, 3, 4 and all odd degrees; throws on even
// degrees >= 6 (no such divisor arises in scope)
bool is_square_in_residue_field(const Rat& a, const Divisor& D);

// is the polynomial g mod p a perfect square in F_p[t] up to a unit, and is
// that unit a square?  (p odd)
bool fp_ratfunc_is_square(const Int& p, const std::vector<Int>& num,
                          const std::vector<Int>& den);

}  // namespace hasse
