#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hasse/numeric.hpp"

namespace hasse {

// dense univariate polynomial over Q; coeffs[i] multiplies t^i and the
// leading coefficient is nonzero (zero polynomial has empty coeffs)
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs);
  static QPoly constant(const Rat& c);
  static QPoly t();  // the variable
  static QPoly parse(const std::string& text);

  bool is_zero() const { return c_.empty(); }
  int deg() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rat& coeff(int i) const;
  const Rat& lead() const;
  const std::vector<Rat>& coeffs() const { return c_; }

  QPoly operator+(const QPoly&) const;
  QPoly operator-(const QPoly&) const;
  QPoly operator*(const QPoly&) const;
  QPoly operator*(const Rat&) const;
  bool operator==(const QPoly&) const = default;

  // division with remainder; divisor must be nonzero
  std::pair<QPoly, QPoly> divmod(const QPoly&) const;
  QPoly derivative() const;
  Rat eval(const Rat&) const;
  QPoly monic() const;
  QPoly primitive_part() const;  // integer coefficients, content 1, lead > 0

  std::string str() const;

 private:
  std::vector<Rat> c_;
  void trim();
};

QPoly gcd(const QPoly& a, const QPoly& b);  // monic gcd

// monic irreducible factors with multiplicities, plus the constant in front;
// complete for deg <= 4 after squarefree splitting (higher degrees throw if
// an irreducibility question beyond quartics actually comes up)
struct QPolyFactor {
  QPoly poly;  // monic irreducible
  int mult;
};
struct QPolyFactorization {
  Rat unit;
  std::vector<QPolyFactor> factors;
};
QPolyFactorization factorize(const QPoly& f);
bool is_irreducible(const QPoly& f);  // deg >= 1, rational coefficients

// rational function a(t) = num/den in lowest terms, den monic
class QRatFunc {
 public:
  QRatFunc() : num_(QPoly::constant(0)), den_(QPoly::constant(1)) {}
  QRatFunc(QPoly num, QPoly den);
  static QRatFunc parse(const std::string& text);  // quotient of polynomials

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  QRatFunc operator*(const QRatFunc&) const;
  QRatFunc operator+(const QRatFunc&) const;

  // order of vanishing along t = root of pi (pi monic irreducible), and at
  // the place t = infinity (deg den - deg num)
  long order_at(const QPoly& pi) const;
  long order_at_infinity() const;

  std::string str() const;

 private:
  QPoly num_, den_;
};

}  // namespace hasse
