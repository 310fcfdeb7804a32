#include "hasse/padic.hpp"

namespace hasse {

std::optional<long> valuation(const Int& x, const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("valuation: p not prime");
  if (x == 0) return std::nullopt;
  Int m = abs(x);
  long v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++v;
  }
  return v;
}

std::optional<long> valuation(const Rat& x, const Int& p) {
  if (sgn(x) == 0) {
    if (!is_prime(p)) throw std::invalid_argument("valuation: p not prime");
    return std::nullopt;
  }
  return *valuation(Int(x.get_num()), p) - *valuation(Int(x.get_den()), p);
}

int legendre_symbol(const Int& a, const Int& p) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("legendre: p must be an odd prime");
  if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t()))
    throw std::invalid_argument("legendre: p | a");
  Int e = (p - 1) / 2, r;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return r == 1 ? 1 : -1;
}

bool is_square_in_qv(const Rat& x, const Place& v) {
  if (sgn(x) == 0) throw std::invalid_argument("is_square_in_qv: zero input");
  if (v.is_real()) return sgn(x) > 0;
  const Int& p = v.prime();
  long val = *valuation(x, p);
  if (val % 2 != 0) return false;
  if (p == 2) {
    UnitSplit s = unit_split(x, p, 3);
    return s.unit % 8 == 1;
  }
  UnitSplit s = unit_split(x, p, 1);
  return legendre_symbol(s.unit, p) == 1;
}

UnitSplit unit_split(const Rat& x, const Int& p, int prec) {
  if (sgn(x) == 0) throw std::invalid_argument("unit_split: zero input");
  if (prec < 1) throw std::invalid_argument("unit_split: prec < 1");
  long vn = *valuation(Int(x.get_num()), p);
  long vd = *valuation(Int(x.get_den()), p);
  Int pe_n, pe_d, mod;
  mpz_pow_ui(pe_n.get_mpz_t(), p.get_mpz_t(), vn);
  mpz_pow_ui(pe_d.get_mpz_t(), p.get_mpz_t(), vd);
  mpz_pow_ui(mod.get_mpz_t(), p.get_mpz_t(), prec);
  Int un = Int(x.get_num()) / pe_n;
  Int ud = Int(x.get_den()) / pe_d;
  Int inv;
  if (!mpz_invert(inv.get_mpz_t(), ud.get_mpz_t(), mod.get_mpz_t()))
    throw std::logic_error("unit_split: denominator unit not invertible");
  Int u = ((un % mod) * inv) % mod;
  if (u < 0) u += mod;
  return {vn - vd, u};
}

PadicApprox PadicApprox::mul(const PadicApprox& o) const {
  if (p != o.p) throw std::invalid_argument("PadicApprox: mixed primes");
  PadicApprox r;
  r.p = p;
  r.val = val + o.val;
  r.prec = std::min(prec, o.prec);
  Int mod;
  mpz_pow_ui(mod.get_mpz_t(), p.get_mpz_t(), r.prec);
  r.unit = (unit * o.unit) % mod;
  return r;
}

PadicApprox PadicApprox::div(const PadicApprox& o) const {
  if (p != o.p) throw std::invalid_argument("PadicApprox: mixed primes");
  PadicApprox r;
  r.p = p;
  r.val = val - o.val;
  r.prec = std::min(prec, o.prec);
  Int mod;
  mpz_pow_ui(mod.get_mpz_t(), p.get_mpz_t(), r.prec);
  Int inv;
  if (!mpz_invert(inv.get_mpz_t(), o.unit.get_mpz_t(), mod.get_mpz_t()))
    throw std::logic_error("PadicApprox::div: unit not invertible");
  r.unit = ((unit % mod) * inv) % mod;
  return r;
}

PadicApprox PadicApprox::pow(int k) const {
  PadicApprox r;
  r.p = p;
  r.val = static_cast<long>(k) * val;
  r.prec = prec;
  Int mod;
  mpz_pow_ui(mod.get_mpz_t(), p.get_mpz_t(), prec);
  Int base = unit;
  if (k < 0) {
    Int inv;
    if (!mpz_invert(inv.get_mpz_t(), base.get_mpz_t(), mod.get_mpz_t()))
      throw std::logic_error("PadicApprox::pow: unit not invertible");
    base = inv;
  }
  unsigned long e = static_cast<unsigned long>(k < 0 ? -static_cast<long>(k) : k);
  Int ee(static_cast<unsigned long>(e));
  mpz_powm(r.unit.get_mpz_t(), base.get_mpz_t(), ee.get_mpz_t(), mod.get_mpz_t());
  return r;
}

PadicApprox PadicApprox::exact(const Rat& x, const Int& p, int prec) {
  UnitSplit s = unit_split(x, p, prec);
  PadicApprox r;
  r.p = p;
  r.val = s.val;
  r.unit = s.unit;
  r.prec = prec;
  return r;
}

PadicApprox PadicApprox::from_residue(const Int& r0, const Int& p, int level) {
  Int mod;
  mpz_pow_ui(mod.get_mpz_t(), p.get_mpz_t(), level);
  Int r = r0 % mod;
  if (r < 0) r += mod;
  if (r == 0)
    throw std::invalid_argument("PadicApprox::from_residue: residue is 0 at this level");
  long v = 0;
  while (mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t())) {
    r /= p;
    ++v;
  }
  PadicApprox a;
  a.p = p;
  a.val = v;
  a.unit = r;
  a.prec = level - static_cast<int>(v);
  return a;
}

}  // namespace hasse
