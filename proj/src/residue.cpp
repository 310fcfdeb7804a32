#include "hasse/residue.hpp"

#include <algorithm>
#include <stdexcept>

#include "hasse/padic.hpp"

namespace hasse {

SquareClass residue_tame(const Rat& a, const QRatFunc& f, const Divisor& D) {
  if (a == 0) throw std::invalid_argument("residue_tame: a must be a nonzero constant");
  if (f.is_zero()) throw std::invalid_argument("residue_tame: f = 0");
  long v = D.infinite ? f.order_at_infinity() : f.order_at(D.pi);
  // constant a has v(a) = 0 everywhere, so the tame symbol collapses to a^v
  Rat rep = (v % 2 == 0) ? Rat(1) : a;
  if (D.infinite || D.pi.deg() == 1) return SquareClass::rational(rep);
  return SquareClass::number_field(D.pi, rep);
}

std::vector<Divisor> ramification_locus(const Rat& a, const QRatFunc& f) {
  if (a == 0) throw std::invalid_argument("ramification_locus: a must be nonzero");
  if (f.is_zero()) throw std::invalid_argument("ramification_locus: f = 0");
  std::vector<Divisor> candidates;
  for (const QPoly& part : {f.num(), f.den()})
    if (part.deg() >= 1)
      for (const auto& fac : factorize(part).factors) candidates.push_back(Divisor::finite(fac.poly));
  candidates.push_back(Divisor::at_infinity());

  std::vector<Divisor> out;
  for (const Divisor& D : candidates) {
    if (std::find(out.begin(), out.end(), D) != out.end()) continue;
    if (!residue_tame(a, f, D).is_trivial()) out.push_back(D);
  }
  return out;
}

SquareClass reduction_residue(const Int& p, const QRatFunc& f) {
  if (!is_prime(p) || p == 2)
    throw std::invalid_argument("reduction_residue: p must be an odd prime");
  if (f.is_zero()) throw std::invalid_argument("reduction_residue: f = 0");

  // scale a polynomial by a power of p so its coefficients are p-integral
  // with unit content, then reduce
  auto reduce = [&](const QPoly& g) {
    long vmin = 0;
    bool first = true;
    for (const Rat& c : g.coeffs()) {
      if (c == 0) continue;
      long v = *valuation(c, p);
      if (first || v < vmin) vmin = v;
      first = false;
    }
    std::vector<Int> out;
    for (const Rat& c : g.coeffs()) {
      if (c == 0) {
        out.push_back(0);
        continue;
      }
      UnitSplit s = unit_split(c, p, 1);
      Int pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(s.val - vmin));
      out.push_back((s.unit * pe) % p);
    }
    return out;
  };

  std::vector<Int> num = reduce(f.num()), den = reduce(f.den());
  auto deg = [](const std::vector<Int>& v) {
    int d = -1;
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) d = static_cast<int>(i);
    return d;
  };
  if (deg(num) <= 0 && deg(den) <= 0) {
    Int n = num.empty() ? Int(0) : num[0], d = den.empty() ? Int(1) : den[0];
    Int di;
    mpz_invert(di.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
    return SquareClass::fp(p, n * di);
  }
  return SquareClass::fp_ratfunc(p, std::move(num), std::move(den));
}

}  // namespace hasse
