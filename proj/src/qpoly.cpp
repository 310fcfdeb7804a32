#include "hasse/qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hasse {

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const Rat& c) {
  QPoly p;
  if (c != 0) p.c_ = {c};
  return p;
}

QPoly QPoly::t() {
  QPoly p;
  p.c_ = {Rat(0), Rat(1)};
  return p;
}

const Rat& QPoly::coeff(int i) const {
  static const Rat zero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[i];
}

const Rat& QPoly::lead() const {
  if (c_.empty()) throw std::invalid_argument("lead of zero polynomial");
  return c_.back();
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (c_.empty() || o.c_.empty()) return QPoly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const Rat& s) const {
  std::vector<Rat> r = c_;
  for (Rat& x : r) x *= s;
  return QPoly(std::move(r));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& g) const {
  if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
  QPoly r = *this;
  std::vector<Rat> q(deg() >= g.deg() ? deg() - g.deg() + 1 : 0, Rat(0));
  while (!r.is_zero() && r.deg() >= g.deg()) {
    Rat f = r.lead() / g.lead();
    int sh = r.deg() - g.deg();
    q[sh] = f;
    std::vector<Rat> sub(sh, Rat(0));
    sub.insert(sub.end(), g.c_.begin(), g.c_.end());
    QPoly s(std::move(sub));
    r = r - s * f;
  }
  return {QPoly(std::move(q)), r};
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return QPoly();
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return QPoly(std::move(r));
}

Rat QPoly::eval(const Rat& x) const {
  Rat v(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rat(1) / lead());
}

QPoly QPoly::primitive_part() const {
  if (is_zero()) return *this;
  Int l(1);
  for (const Rat& x : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  Int g(0);
  std::vector<Int> ic(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) {
    Rat v = c_[i] * Rat(l);
    ic[i] = v.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ic[i].get_mpz_t());
  }
  if (sgn(ic.back()) < 0) g = -g;
  std::vector<Rat> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = Rat(ic[i] / g);
  return QPoly(std::move(r));
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = deg(); i >= 0; --i) {
    const Rat& c = c_[i];
    if (c == 0) continue;
    Rat ac = abs(c);
    if (s.empty())
      s += (sgn(c) < 0 ? "-" : "");
    else
      s += (sgn(c) < 0 ? " - " : " + ");
    bool unit = (ac == 1) && i > 0;
    if (!unit) s += ac.get_str();
    if (i > 0) {
      if (!unit) s += "*";
      s += "t";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = x.divmod(y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

// ---- factorization ---------------------------------------------------------

namespace {

std::vector<Int> all_divisors(const Int& n) {
  std::vector<Int> ds{Int(1)};
  if (n == 0) return ds;
  for (const PrimePower& pp : factor(abs(n))) {
    size_t sz = ds.size();
    Int pe(1);
    for (unsigned e = 1; e <= pp.e; ++e) {
      pe *= pp.p;
      for (size_t i = 0; i < sz; ++i) ds.push_back(ds[i] * pe);
    }
  }
  return ds;
}

// rational roots of a nonzero polynomial, via the p/q test on its primitive part
std::vector<Rat> rational_roots(const QPoly& f) {
  std::vector<Rat> roots;
  QPoly g = f.primitive_part();
  while (g.deg() >= 1 && g.coeff(0) == 0) {  // strip all powers of t
    roots.push_back(Rat(0));
    g = g.divmod(QPoly::t()).first;
  }
  if (g.deg() < 1) return roots;
  Int c0 = g.coeff(0).get_num();  // primitive part has integer coefficients
  Int cl = g.lead().get_num();
  for (const Int& p : all_divisors(c0))
    for (const Int& q : all_divisors(cl)) {
      Rat r(p, q);
      r.canonicalize();
      if (g.eval(r) == 0) roots.push_back(r);
      if (g.eval(-r) == 0) roots.push_back(-r);
    }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// monic squarefree quartic with no rational roots: either irreducible or a
// product of two monic irreducible quadratics; decide via the depressed form
// x^4 + p x^2 + q x + r and the resolvent cubic y^3 + 2p y^2 + (p^2-4r) y - q^2
std::vector<QPoly> split_quartic(const QPoly& f) {
  Rat sh = -f.coeff(3) / 4;  // substitute t -> t + sh to kill the cubic term
  QPoly tt = QPoly::t() + QPoly::constant(sh);
  QPoly dep = QPoly::constant(0);
  for (int i = 4; i >= 0; --i) dep = dep * tt + QPoly::constant(f.coeff(i));
  Rat p = dep.coeff(2), q = dep.coeff(1), r = dep.coeff(0);

  auto undo = [&](const QPoly& g) {  // substitute t -> t - sh back
    QPoly tb = QPoly::t() - QPoly::constant(sh);
    QPoly acc = QPoly::constant(0);
    for (int i = g.deg(); i >= 0; --i) acc = acc * tb + QPoly::constant(g.coeff(i));
    return acc;
  };

  if (q == 0) {  // biquadratic: x^4 + p x^2 + r = (x^2+b)(x^2+d) iff p^2-4r square
    Rat disc = p * p - 4 * r;
    if (disc >= 0 && is_rational_square(disc)) {
      Rat s = sqrt_rational(disc);
      Rat b = (p + s) / 2, d = (p - s) / 2;
      QPoly t2 = QPoly::t() * QPoly::t();
      return {undo(t2 + QPoly::constant(b)), undo(t2 + QPoly::constant(d))};
    }
  }
  QPoly resolvent({-q * q, p * p - 4 * r, 2 * p, Rat(1)});
  for (const Rat& y : rational_roots(resolvent)) {
    if (y <= 0 || !is_rational_square(y)) continue;
    Rat a = sqrt_rational(y);
    Rat b = (p + y - q / a) / 2;
    Rat d = (p + y + q / a) / 2;
    QPoly f1({b, a, Rat(1)});
    QPoly f2({d, -a, Rat(1)});
    if (f1 * f2 == dep) return {undo(f1), undo(f2)};
  }
  return {};  // irreducible
}

// factor a monic squarefree polynomial into monic irreducibles
std::vector<QPoly> factor_squarefree(QPoly f) {
  std::vector<QPoly> out;
  if (f.deg() < 1) return out;
  for (const Rat& r : rational_roots(f)) {
    QPoly lin({-r, Rat(1)});
    auto [q, rem] = f.divmod(lin);
    if (!rem.is_zero()) throw std::logic_error("root does not divide");
    out.push_back(lin);
    f = q;
  }
  if (f.deg() == 0) return out;
  if (f.deg() <= 3) {  // no rational roots left: quadratics and cubics are done
    out.push_back(f.monic());
    return out;
  }
  if (f.deg() == 4) {
    auto parts = split_quartic(f.monic());
    if (parts.empty())
      out.push_back(f.monic());
    else
      for (auto& g : parts) out.push_back(g.monic());
    return out;
  }
  throw std::invalid_argument("factorization beyond degree 4 not supported");
}

}  // namespace

QPolyFactorization factorize(const QPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("factorize: zero polynomial");
  QPolyFactorization out;
  out.unit = f.lead();
  QPoly g = f.monic();
  if (g.deg() < 1) return out;

  // Yun's squarefree decomposition: g = prod s_i^i
  std::vector<QPoly> sqf;  // sqf[i-1] = s_i (monic, possibly constant 1)
  {
    QPoly gp = g.derivative();
    QPoly a = gcd(g, gp);
    QPoly b = g.divmod(a).first;
    QPoly c = gp.divmod(a).first;
    QPoly d = c - b.derivative();
    while (b.deg() > 0) {
      QPoly s = gcd(b, d);
      sqf.push_back(s);
      b = b.divmod(s).first;
      c = d.divmod(s).first;
      d = c - b.derivative();
    }
  }
  for (size_t i = 0; i < sqf.size(); ++i) {
    if (sqf[i].deg() < 1) continue;
    for (const QPoly& irr : factor_squarefree(sqf[i]))
      out.factors.push_back({irr, static_cast<int>(i + 1)});
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const QPolyFactor& x, const QPolyFactor& y) {
              if (x.poly.deg() != y.poly.deg()) return x.poly.deg() < y.poly.deg();
              return x.poly.coeffs() < y.poly.coeffs();
            });
  return out;
}

bool is_irreducible(const QPoly& f) {
  if (f.deg() < 1) return false;
  auto fac = factorize(f);
  return fac.factors.size() == 1 && fac.factors[0].mult == 1;
}

// ---- rational functions ----------------------------------------------------

QRatFunc::QRatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = QPoly::constant(1);
    return;
  }
  QPoly g = gcd(num_, den_);
  if (g.deg() >= 1) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  Rat l = den_.lead();
  den_ = den_ * (Rat(1) / l);
  num_ = num_ * (Rat(1) / l);
}

QRatFunc QRatFunc::operator*(const QRatFunc& o) const {
  return QRatFunc(num_ * o.num_, den_ * o.den_);
}

QRatFunc QRatFunc::operator+(const QRatFunc& o) const {
  return QRatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

long QRatFunc::order_at(const QPoly& pi) const {
  if (is_zero()) throw std::invalid_argument("order of the zero function");
  if (pi.deg() < 1) throw std::invalid_argument("order along a constant");
  auto mult = [&](QPoly f) {
    long m = 0;
    while (true) {
      auto [q, r] = f.divmod(pi);
      if (!r.is_zero()) return m;
      f = q;
      ++m;
    }
  };
  return mult(num_) - mult(den_);
}

long QRatFunc::order_at_infinity() const {
  if (is_zero()) throw std::invalid_argument("order of the zero function");
  return den_.deg() - num_.deg();
}

std::string QRatFunc::str() const {
  if (den_ == QPoly::constant(1)) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

// ---- parsing ---------------------------------------------------------------

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
  }

  QRatFunc expr() {
    QRatFunc v = term();
    while (true) {
      skip();
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v + term() * QRatFunc(QPoly::constant(-1), QPoly::constant(1));
      else
        return v;
    }
  }

  QRatFunc term() {
    QRatFunc v = factor();
    while (true) {
      skip();
      if (eat('*'))
        v = v * factor();
      else if (eat('/')) {
        QRatFunc w = factor();
        if (w.is_zero()) fail("division by zero");
        v = v * QRatFunc(w.den(), w.num());
      } else
        return v;
    }
  }

  QRatFunc factor() {
    skip();
    if (eat('-')) return factor() * QRatFunc(QPoly::constant(-1), QPoly::constant(1));
    QRatFunc v = primary();
    skip();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("exponent");
      long e = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        e = e * 10 + (s[pos] - '0');
        if (e > 64) fail("exponent too large");
        ++pos;
      }
      QRatFunc r(QPoly::constant(1), QPoly::constant(1));
      for (long i = 0; i < e; ++i) r = r * v;
      if (neg) {
        if (r.is_zero()) fail("division by zero");
        r = QRatFunc(r.den(), r.num());
      }
      return r;
    }
    return v;
  }

  QRatFunc primary() {
    skip();
    if (eat('(')) {
      QRatFunc v = expr();
      if (!eat(')')) fail("expected )");
      return v;
    }
    if (pos < s.size() && (s[pos] == 't' || s[pos] == 'T')) {
      ++pos;
      return QRatFunc(QPoly::t(), QPoly::constant(1));
    }
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      Int n(s.substr(start, pos - start));
      return QRatFunc(QPoly::constant(Rat(n)), QPoly::constant(1));
    }
    fail("expected number, t, or (");
  }
};

}  // namespace

QRatFunc QRatFunc::parse(const std::string& text) {
  Parser p{text};
  QRatFunc v = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return v;
}

QPoly QPoly::parse(const std::string& text) {
  QRatFunc v = QRatFunc::parse(text);
  if (v.den().deg() != 0) throw std::invalid_argument("not a polynomial: " + text);
  return v.num();
}

}  // namespace hasse
