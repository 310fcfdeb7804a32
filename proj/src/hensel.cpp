#include "hasse/hensel.hpp"

namespace hasse {

namespace {

Int pow_mod(const Int& b, unsigned e, const Int& mod) {
  Int r;
  Int ee(static_cast<unsigned long>(e));
  Int bb = b % mod;
  if (bb < 0) bb += mod;
  mpz_powm(r.get_mpz_t(), bb.get_mpz_t(), ee.get_mpz_t(), mod.get_mpz_t());
  return r;
}

long val_capped(const Int& r, const Int& p, int cap) {
  // valuation of r (already reduced mod p^cap); cap means ">= cap"
  if (r == 0) return cap;
  Int m = r;
  long v = 0;
  while (v < cap && mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++v;
  }
  return v;
}

}  // namespace

Int DiagonalEquation::eval_mod(const std::vector<Int>& x, const Int& mod) const {
  Int s = 0;
  for (const auto& t : terms) {
    if (t.exp == 0)
      s += t.c % mod;
    else
      s += (t.c % mod) * pow_mod(x.at(t.var), t.exp, mod);
    s %= mod;
  }
  if (s < 0) s += mod;
  return s;
}

Int DiagonalEquation::partial_mod(int var, const std::vector<Int>& x, const Int& mod) const {
  Int s = 0;
  for (const auto& t : terms) {
    if (t.var != var || t.exp == 0) continue;
    Int c = (t.c * static_cast<unsigned long>(t.exp)) % mod;
    s += c * pow_mod(x.at(t.var), t.exp - 1, mod);
    s %= mod;
  }
  if (s < 0) s += mod;
  return s;
}

HenselOutcome hensel_liftable(const DiagonalEquation& f, const std::vector<Int>& point,
                              const Int& p, int level) {
  if (level < 1) throw std::invalid_argument("hensel_liftable: level < 1");
  if (static_cast<int>(point.size()) != f.nvars)
    throw std::invalid_argument("hensel_liftable: wrong point dimension");
  Int mod;
  mpz_pow_ui(mod.get_mpz_t(), p.get_mpz_t(), level);

  Int F = f.eval_mod(point, mod);
  long vf = val_capped(F, p, level);  // == level means ">= level"
  bool vf_exact = vf < level;

  long vmin = level;
  bool vmin_exact = false;
  for (int i = 0; i < f.nvars; ++i) {
    Int D = f.partial_mod(i, point, mod);
    long vd = val_capped(D, p, level);
    if (vd < vmin) vmin = vd;
    if (vd < level) vmin_exact = true;
  }

  if (vmin_exact) {
    if (vf_exact) return vf > 2 * vmin ? HenselOutcome::Certified : HenselOutcome::NotCertified;
    // v(f) >= level
    if (level > 2 * vmin) return HenselOutcome::Certified;
    return HenselOutcome::InsufficientPrecision;
  }
  // every derivative vanishes mod p^level: v_min >= level
  if (vf_exact) return HenselOutcome::NotCertified;  // vf < level <= 2*vmin
  return HenselOutcome::InsufficientPrecision;
}

std::optional<std::vector<Int>> hensel_refine(const DiagonalEquation& f,
                                              const std::vector<Int>& point,
                                              const Int& p, int level, int target) {
  if (hensel_liftable(f, point, p, level) != HenselOutcome::Certified) return std::nullopt;
  Int modk;
  mpz_pow_ui(modk.get_mpz_t(), p.get_mpz_t(), level);

  // pivot: coordinate with the smallest derivative valuation at this level
  int pivot = -1;
  long delta = level;
  for (int i = 0; i < f.nvars; ++i) {
    Int D = f.partial_mod(i, point, modk);
    long vd = val_capped(D, p, level);
    if (vd < delta) {
      delta = vd;
      pivot = i;
    }
  }
  if (pivot < 0) return std::nullopt;

  int work = target + static_cast<int>(delta) + 2;
  Int MOD;
  mpz_pow_ui(MOD.get_mpz_t(), p.get_mpz_t(), work);
  Int pd;
  mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), delta);

  std::vector<Int> x = point;
  for (auto& c : x) {
    c %= MOD;
    if (c < 0) c += MOD;
  }

  for (int iter = 0; iter < 64; ++iter) {
    Int F = f.eval_mod(x, MOD);
    if (val_capped(F, p, work) >= target + delta) {
      Int modt;
      mpz_pow_ui(modt.get_mpz_t(), p.get_mpz_t(), target);
      std::vector<Int> out = x;
      for (auto& c : out) c %= modt;
      return out;
    }
    Int D = f.partial_mod(pivot, x, MOD);
    // D = p^delta * unit; the Newton step F/D is integral since v(F) > 2*delta
    Int Du = D / pd;
    Int inv;
    if (!mpz_invert(inv.get_mpz_t(), Du.get_mpz_t(), MOD.get_mpz_t())) return std::nullopt;
    Int step = ((F / pd) * inv) % MOD;
    x[pivot] = (x[pivot] - step) % MOD;
    if (x[pivot] < 0) x[pivot] += MOD;
  }
  return std::nullopt;  // did not converge within budget (not expected)
}

}  // namespace hasse
