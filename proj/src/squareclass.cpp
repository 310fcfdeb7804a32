#include "hasse/squareclass.hpp"

#include <stdexcept>

#include "hasse/padic.hpp"

namespace hasse {

Divisor Divisor::at_infinity() {
  Divisor d;
  d.infinite = true;
  return d;
}

Divisor Divisor::finite(QPoly pi) {
  if (pi.deg() < 1 || pi.lead() != 1) throw std::invalid_argument("divisor: need monic, deg >= 1");
  if (!is_irreducible(pi)) throw std::invalid_argument("divisor: " + pi.str() + " is reducible");
  Divisor d;
  d.pi = std::move(pi);
  return d;
}

std::string Divisor::str() const {
  if (infinite) return "infinity";
  return "(" + pi.str() + ")";
}

bool Divisor::operator==(const Divisor& o) const {
  if (infinite != o.infinite) return false;
  return infinite || pi == o.pi;
}

// ---- square tests in residue fields ---------------------------------------

namespace {

// a in Q*, square in the quartic field Q[t]/(pi)?  Reduce to rational-root
// questions about the resolvent cubic of the depressed quartic: sqrt(a) lies
// in the field iff some quadratic subfield matches, and those are indexed by
// rational resolvent roots.
bool square_in_quartic_field(const Rat& a, const QPoly& pi) {
  if (is_rational_square(a)) return true;
  Rat sh = -pi.coeff(3) / 4;
  QPoly tt = QPoly::t() + QPoly::constant(sh);
  QPoly dep = QPoly::constant(0);
  for (int i = 4; i >= 0; --i) dep = dep * tt + QPoly::constant(pi.coeff(i));
  Rat p = dep.coeff(2), q = dep.coeff(1), r = dep.coeff(0);
  QPoly resolvent({-q * q, p * p - 4 * r, 2 * p, Rat(1)});
  // rational_roots is internal to qpoly; recover roots by factoring
  for (const auto& fac : factorize(resolvent).factors) {
    if (fac.poly.deg() != 1) continue;
    Rat y = -fac.poly.coeff(0);
    if (y == 0) {
      if (q == 0 && is_rational_square(a * (p * p - 4 * r))) return true;
    } else if (is_rational_square(a * y)) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_square_in_residue_field(const Rat& a, const Divisor& D) {
  if (a == 0) throw std::invalid_argument("square test on zero");
  if (D.infinite) return is_rational_square(a);
  int n = D.pi.deg();
  if (n % 2 == 1) return is_rational_square(a);  // odd-degree fields add no squares
  if (n == 2) {
    Rat disc = D.pi.coeff(1) * D.pi.coeff(1) - 4 * D.pi.coeff(0);
    return is_rational_square(a) || is_rational_square(a * disc);
  }
  if (n == 4) return square_in_quartic_field(a, D.pi);
  throw std::invalid_argument("square test in residue field of degree " + std::to_string(n) +
                              " not supported");
}

// ---- F_p[t] helpers --------------------------------------------------------

namespace {

std::vector<Int> fp_trim(std::vector<Int> v, const Int& p) {
  for (Int& c : v) {
    c %= p;
    if (c < 0) c += p;
  }
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

std::vector<Int> fp_mul(const std::vector<Int>& a, const std::vector<Int>& b, const Int& p) {
  if (a.empty() || b.empty()) return {};
  std::vector<Int> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return fp_trim(std::move(r), p);
}

Int fp_inv(const Int& x, const Int& p) {
  Int r;
  if (!mpz_invert(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()))
    throw std::logic_error("fp_inv: not invertible");
  return r;
}

// exact square root of a monic polynomial over F_p (p odd), if one exists
std::optional<std::vector<Int>> fp_monic_sqrt(const std::vector<Int>& g, const Int& p) {
  if (g.empty() || (g.size() - 1) % 2 != 0) return std::nullopt;
  size_t k = (g.size() - 1) / 2;
  std::vector<Int> h(k + 1, 0);
  h[k] = 1;
  Int inv2 = fp_inv(2, p);
  for (size_t j = 1; j <= k; ++j) {
    // coefficient of t^{2k-j} in h^2 must equal g[2k-j]
    Int cross = 0;
    for (size_t i = 1; i < j; ++i) cross += h[k - i] * h[k - (j - i)];
    Int c = (g[2 * k - j] - cross) % p;
    h[k - j] = (c * inv2) % p;
    if (h[k - j] < 0) h[k - j] += p;
  }
  if (fp_mul(h, h, p) == fp_trim(std::vector<Int>(g), p)) return h;
  return std::nullopt;
}

}  // namespace

bool fp_ratfunc_is_square(const Int& p, const std::vector<Int>& num,
                          const std::vector<Int>& den) {
  std::vector<Int> g = fp_mul(fp_trim(std::vector<Int>(num), p), fp_trim(std::vector<Int>(den), p), p);
  if (g.empty()) throw std::invalid_argument("square test on zero");
  Int lc = g.back();
  Int lci = fp_inv(lc, p);
  for (Int& c : g) {
    c = (c * lci) % p;
    if (c < 0) c += p;
  }
  if (g.size() % 2 == 0) return false;  // odd degree
  if (!fp_monic_sqrt(g, p)) return false;
  return legendre_symbol(lc, p) == 1;
}

// ---- SquareClass -----------------------------------------------------------

SquareClass SquareClass::rational(const Rat& rep) {
  if (rep == 0) throw std::invalid_argument("square class of zero");
  SquareClass c;
  c.field_ = Field::Rational;
  c.rep_q_ = rep;
  c.trivial_ = is_rational_square(rep);
  return c;
}

SquareClass SquareClass::number_field(QPoly modulus, const Rat& rep) {
  if (rep == 0) throw std::invalid_argument("square class of zero");
  SquareClass c;
  c.field_ = Field::NumberField;
  c.rep_q_ = rep;
  c.modulus_ = std::move(modulus);
  c.trivial_ = is_square_in_residue_field(rep, Divisor::finite(c.modulus_));
  return c;
}

SquareClass SquareClass::fp(const Int& p, const Int& rep) {
  SquareClass c;
  c.field_ = Field::Fp;
  c.p_ = p;
  c.rep_int_ = rep % p;
  if (c.rep_int_ < 0) c.rep_int_ += p;
  if (c.rep_int_ == 0) throw std::invalid_argument("square class of zero");
  c.trivial_ = (p == 2) || legendre_symbol(c.rep_int_, p) == 1;
  return c;
}

SquareClass SquareClass::fp_ratfunc(const Int& p, std::vector<Int> num, std::vector<Int> den) {
  SquareClass c;
  c.field_ = Field::FpRatFunc;
  c.p_ = p;
  c.rep_num_ = fp_trim(std::move(num), p);
  c.rep_den_ = fp_trim(std::move(den), p);
  if (c.rep_num_.empty() || c.rep_den_.empty())
    throw std::invalid_argument("square class of zero");
  c.trivial_ = fp_ratfunc_is_square(p, c.rep_num_, c.rep_den_);
  return c;
}

SquareClass SquareClass::operator*(const SquareClass& o) const {
  if (field_ != o.field_) throw std::invalid_argument("square class product across fields");
  switch (field_) {
    case Field::Rational:
      return rational(rep_q_ * o.rep_q_);
    case Field::NumberField:
      if (!(modulus_ == o.modulus_))
        throw std::invalid_argument("square class product across moduli");
      return number_field(modulus_, rep_q_ * o.rep_q_);
    case Field::Fp:
      if (p_ != o.p_) throw std::invalid_argument("square class product across primes");
      return fp(p_, rep_int_ * o.rep_int_);
    default:
      if (p_ != o.p_) throw std::invalid_argument("square class product across primes");
      return fp_ratfunc(p_, fp_mul(rep_num_, o.rep_num_, p_), fp_mul(rep_den_, o.rep_den_, p_));
  }
}

namespace {
std::string fp_poly_str(const std::vector<Int>& v) {
  if (v.empty()) return "0";
  std::string s;
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
    if (v[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0 || v[i] != 1) s += v[i].get_str();
    if (i > 0) {
      if (v[i] != 1) s += "*";
      s += "t";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}
}  // namespace

std::string SquareClass::str() const {
  std::string tag = trivial_ ? "trivial" : "nontrivial";
  switch (field_) {
    case Field::Rational:
      return "[" + Rat(rep_q_).get_str() + " in Q] " + tag;
    case Field::NumberField:
      return "[" + Rat(rep_q_).get_str() + " in Q[t]/(" + modulus_.str() + ")] " + tag;
    case Field::Fp:
      return "[" + rep_int_.get_str() + " in F_" + p_.get_str() + "] " + tag;
    default:
      return "[(" + fp_poly_str(rep_num_) + ")/(" + fp_poly_str(rep_den_) + ") in F_" +
             p_.get_str() + "(t)] " + tag;
  }
}

}  // namespace hasse
