#include "hasse/solubility.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "hasse/symbols.hpp"

namespace hasse {

DiagonalForm DiagonalForm::make(long degree, std::vector<Int> coeffs) {
  if (degree < 2) throw std::invalid_argument("diagonal form: degree must be >= 2");
  if (coeffs.size() < 2) throw std::invalid_argument("diagonal form: need >= 2 variables");
  Int g = 0;
  for (const Int& c : coeffs) {
    if (c == 0) throw std::invalid_argument("diagonal form: zero coefficient");
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  for (Int& c : coeffs) c /= g;
  DiagonalForm f;
  f.d = degree;
  f.a = std::move(coeffs);
  return f;
}

Int DiagonalForm::coeff_product() const {
  Int p = 1;
  for (const Int& c : a) p *= c;
  return p;
}

DiagonalEquation DiagonalForm::equation() const {
  DiagonalEquation eq;
  eq.nvars = m();
  for (int i = 0; i < m(); ++i)
    eq.terms.push_back({a[i], i, static_cast<unsigned>(d)});
  return eq;
}

std::string DiagonalForm::str() const {
  std::string s;
  for (int i = 0; i < m(); ++i) {
    if (i) s += " + ";
    s += a[i].get_str() + "*x" + std::to_string(i) + "^" + std::to_string(d);
  }
  return s;
}

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Soluble: return "soluble";
    case Verdict::Insoluble: return "insoluble";
    default: return "undecided";
  }
}

int default_level(const DiagonalForm& f, const Int& p) {
  Int n = Int(f.d) * Int(f.d) * f.coeff_product();
  long v = *valuation(n, p);
  return static_cast<int>(2 * v + 3);
}

SolubilityResult solve_real(const DiagonalForm& f) {
  SolubilityResult r;
  if (f.d % 2 == 1) {
    r.verdict = Verdict::Soluble;
    r.sign_pattern.assign(f.m(), 0);
    // a_0 t^d = -a_1: pick t with the right sign
    r.sign_pattern[0] = -sgn(f.a[0]) * sgn(f.a[1]);
    r.sign_pattern[1] = 1;
    r.note = "odd degree";
    return r;
  }
  int pos = -1, neg = -1;
  for (int i = 0; i < f.m(); ++i) {
    if (sgn(f.a[i]) > 0 && pos < 0) pos = i;
    if (sgn(f.a[i]) < 0 && neg < 0) neg = i;
  }
  if (pos >= 0 && neg >= 0) {
    r.verdict = Verdict::Soluble;
    r.sign_pattern.assign(f.m(), 0);
    r.sign_pattern[pos] = 1;
    r.sign_pattern[neg] = 1;
    r.note = "mixed signs";
  } else {
    r.verdict = Verdict::Insoluble;
    r.note = "definite form";
  }
  return r;
}

namespace {

constexpr std::uint64_t kSumsetBound = 4096;

// d-th root of c mod p when gcd(d, p-1) == 2 and c is a QR.  Either the odd
// part of p-1 absorbs d (A=1), or v_2(d)=1 and one square root reduces the
// problem to an invertible exponent.
std::uint64_t root_g2(std::uint64_t c, long d, std::uint64_t p) {
  std::uint64_t h = (p - 1) / 2;
  if (h % 2 == 1) {
    std::uint64_t e = invmod_u64(static_cast<std::uint64_t>(d % h), h);
    return powmod_u64(c, e, p);
  }
  auto s = sqrt_mod_prime(c, p);
  if (!s) throw std::logic_error("root_g2: input not a square");
  std::uint64_t b = static_cast<std::uint64_t>(d) / 2;  // odd, coprime to p-1
  return powmod_u64(*s, invmod_u64(b % (p - 1), p - 1), p);
}

// nontrivial root of sum_i u_i x_i^d = 0 over F_p (u_i units); coordinates
// of the root are returned for the same index order as `u`.  Complete (a
// nullopt return means no nontrivial root exists) except where it throws.
std::optional<std::vector<std::uint64_t>> find_root_mod_p(
    const std::vector<std::uint64_t>& u, long d, std::uint64_t p) {
  const int k = static_cast<int>(u.size());
  if (k <= 1) return std::nullopt;

  if (p == 2) {  // all units are 1; x^d = x
    std::vector<std::uint64_t> r(k, 0);
    r[0] = r[1] = 1;
    return r;
  }

  std::uint64_t g = std::gcd(static_cast<std::uint64_t>(d), p - 1);
  if (g == 1) {  // x -> x^d is a bijection on units
    std::uint64_t c = mulmod_u64(p - u[0], invmod_u64(u[1], p), p);
    std::uint64_t e = invmod_u64(static_cast<std::uint64_t>(d) % (p - 1), p - 1);
    std::vector<std::uint64_t> r(k, 0);
    r[0] = 1;
    r[1] = powmod_u64(c, e, p);
    return r;
  }

  if (p <= kSumsetBound) {
    // dynamic program over variables: reach[v] = a sum v attainable with at
    // least one nonzero coordinate among processed variables, with parent
    // links for witness extraction
    std::vector<std::uint64_t> powd(p);
    for (std::uint64_t x = 0; x < p; ++x)
      powd[x] = powmod_u64(x, static_cast<std::uint64_t>(d), p);

    std::vector<long> parent(p, -1);   // previous sum, or -2 at the base
    std::vector<int> var_of(p, -1);
    std::vector<std::uint64_t> x_of(p, 0);
    std::vector<char> reached(p, 0);

    for (int t = 0; t < k && !reached[0]; ++t) {
      for (std::uint64_t x = 1; x < p; ++x) {  // base: only var t nonzero
        std::uint64_t w = mulmod_u64(u[t], powd[x], p);
        if (!reached[w]) {
          reached[w] = 1;
          parent[w] = -2;
          var_of[w] = t;
          x_of[w] = x;
        }
      }
      if (reached[0]) break;
      std::vector<std::uint64_t> prev;
      for (std::uint64_t v = 0; v < p; ++v)
        if (reached[v] && var_of[v] < t) prev.push_back(v);
      for (std::uint64_t c : prev) {
        for (std::uint64_t x = 1; x < p; ++x) {
          std::uint64_t val = (c + mulmod_u64(u[t], powd[x], p)) % p;
          if (!reached[val]) {
            reached[val] = 1;
            parent[val] = static_cast<long>(c);
            var_of[val] = t;
            x_of[val] = x;
          }
        }
        if (reached[0]) break;
      }
    }
    if (!reached[0]) return std::nullopt;
    std::vector<std::uint64_t> r(k, 0);
    long cur = 0;
    while (true) {
      r[var_of[cur]] = x_of[cur];
      if (parent[cur] == -2) break;
      cur = parent[cur];
    }
    return r;
  }

  // large p with g >= 2.  g == 2: the d-th power image on units is exactly
  // the squares, membership is an Euler test and roots come from root_g2.
  if (g == 2) {
    auto is_qr = [&](std::uint64_t c) { return powmod_u64(c, (p - 1) / 2, p) == 1; };
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        std::uint64_t c = mulmod_u64(p - u[i], invmod_u64(u[j], p), p);
        if (is_qr(c)) {
          std::vector<std::uint64_t> r(k, 0);
          r[i] = 1;
          r[j] = root_g2(c, d, p);
          return r;
        }
      }
    if (k >= 3) {
      // ternary forms over F_p are isotropic once p exceeds d^4, which holds
      // here; scan one coordinate until the complementary value is a square
      std::uint64_t u2_inv = invmod_u64(u[2], p);
      for (std::uint64_t x = 1; x < kSumsetBound; ++x) {
        std::uint64_t s =
            (mulmod_u64(u[0], powmod_u64(x, static_cast<std::uint64_t>(d), p), p) + u[1]) % p;
        std::uint64_t c = mulmod_u64((p - s) % p, u2_inv, p);
        if (c != 0 && is_qr(c)) {
          std::vector<std::uint64_t> r(k, 0);
          r[0] = x;
          r[1] = 1;
          r[2] = root_g2(c, d, p);
          return r;
        }
      }
      throw std::logic_error("isotropic ternary form with no root found");
    }
    return std::nullopt;
  }
  throw std::invalid_argument(
      "root search beyond enumeration budget: p > 4096 with gcd(d, p-1) > 2");
}

SolubilityResult tame_solve(const DiagonalForm& f, const Int& p, int max_level) {
  const int m = f.m();
  const long d = f.d;
  SolubilityResult res;

  // fixed unit parts and evolving exponents
  std::vector<Int> unit(m);
  std::vector<long> e(m);
  for (int i = 0; i < m; ++i) {
    UnitSplit s = unit_split(Rat(f.a[i]), p, 1);
    e[i] = s.val;
    unit[i] = f.a[i];
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e[i]);
    unit[i] /= pe;
  }
  std::uint64_t pu = p.get_ui();
  std::vector<std::uint64_t> unit_mod(m);
  for (int i = 0; i < m; ++i) {
    Int r = unit[i] % p;
    if (r < 0) r += p;
    unit_mod[i] = r.get_ui();
  }

  std::vector<long> sigma(m, 0);
  // content reduction keeps min(e)=0, but tolerate un-normalized input
  long depth = *std::min_element(e.begin(), e.end());
  if (depth > 0)
    for (long& ei : e) ei -= depth;
  std::set<std::vector<long>> visited;
  visited.insert(e);

  while (true) {
    std::vector<int> S;
    for (int i = 0; i < m; ++i)
      if (e[i] == 0) S.push_back(i);

    std::vector<std::uint64_t> us;
    for (int i : S) us.push_back(unit_mod[i]);
    std::optional<std::vector<std::uint64_t>> root;
    if (S.size() >= 2) root = find_root_mod_p(us, d, pu);

    if (root) {
      // witness on the current form, then map back through substitutions
      DiagonalForm cur;
      cur.d = d;
      cur.a.resize(m);
      for (int i = 0; i < m; ++i) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e[i]);
        cur.a[i] = unit[i] * pe;
      }
      DiagonalEquation ceq = cur.equation();
      std::vector<Int> W(m, 0);
      for (size_t t = 0; t < S.size(); ++t) W[S[t]] = Int(static_cast<unsigned long>((*root)[t]));

      int lw = static_cast<int>(2 * depth + 3);
      auto refined = hensel_refine(ceq, W, p, 1, lw);
      if (!refined) throw std::logic_error("tame witness failed to refine");
      Int modw;
      mpz_pow_ui(modw.get_mpz_t(), p.get_mpz_t(), lw);
      std::vector<Int> X(m);
      for (int i = 0; i < m; ++i) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), sigma[i]);
        X[i] = ((*refined)[i] * pe) % modw;
      }
      DiagonalEquation oeq = f.equation();
      if (hensel_liftable(oeq, X, p, lw) != HenselOutcome::Certified)
        throw std::logic_error("mapped witness failed certification");
      res.verdict = Verdict::Soluble;
      res.witness = X;
      res.witness_level = lw;
      res.level_reached = lw;
      res.note = depth ? "descent depth " + std::to_string(depth) : "smooth mod p";
      return res;
    }

    // no nontrivial root: all unit-level coordinates vanish mod p
    if (static_cast<int>(S.size()) == m) {
      res.verdict = Verdict::Insoluble;
      res.level_reached = static_cast<int>(depth + 1);
      res.note = "reduced form anisotropic; any solution would be imprimitive";
      return res;
    }
    for (int i : S) {
      e[i] += d;
      sigma[i] += 1;
    }
    long drop = *std::min_element(e.begin(), e.end());
    for (int i = 0; i < m; ++i) e[i] -= drop;
    depth += drop;
    if (depth > max_level) {
      res.verdict = Verdict::Undecided;
      res.level_reached = static_cast<int>(depth);
      res.note = "descent exceeded level budget";
      return res;
    }
    if (!visited.insert(e).second) {
      res.verdict = Verdict::Insoluble;
      res.level_reached = static_cast<int>(depth);
      res.note = "valuation state cycle: infinite descent";
      return res;
    }
  }
}

// Exact wild decision at K = 2 v_p(d) + 2 max_i v_p(a_i) + 1: a primitive
// solution mod p^K has a unit coordinate j, and v(d a_j x_j^{d-1}) =
// v_p(d) + v_p(a_j) < K/2 certifies it, so the form is soluble iff the
// diagonal sumset reaches 0 mod p^K with at least one unit coordinate.
// Out-of-budget moduli return nullopt and fall back to the lift tree.
std::optional<SolubilityResult> wild_exact(const DiagonalForm& f, const Int& p, int max_level) {
  const int m = f.m();
  long vd = 0;
  {
    Int dd(f.d);
    while (mpz_divisible_p(dd.get_mpz_t(), p.get_mpz_t())) {
      dd /= p;
      ++vd;
    }
  }
  long emax = 0;
  for (const Int& c : f.a) {
    Int u = c;
    long e = 0;
    while (mpz_divisible_p(u.get_mpz_t(), p.get_mpz_t())) {
      u /= p;
      ++e;
    }
    emax = std::max(emax, e);
  }
  int K = static_cast<int>(2 * (vd + emax) + 1);
  if (K > max_level) return std::nullopt;
  if (!p.fits_slong_p()) return std::nullopt;
  long pl = p.get_si();
  long P = 1;
  for (int i = 0; i < K; ++i) {
    if (P > 200000 / pl) return std::nullopt;
    P *= pl;
  }

  auto powd = [&](long t) {
    unsigned long r = 1, b = static_cast<unsigned long>(t % P);
    long e = f.d;
    while (e) {
      if (e & 1) r = r * b % static_cast<unsigned long>(P);
      b = b * b % static_cast<unsigned long>(P);
      e >>= 1;
    }
    return static_cast<long>(r);
  };
  std::vector<long> ares(m);
  for (int i = 0; i < m; ++i)
    ares[i] = static_cast<long>(mpz_fdiv_ui(f.a[i].get_mpz_t(), static_cast<unsigned long>(P)));

  // per-coordinate term values a_i t^d mod P, split by whether t is a unit
  std::vector<std::vector<long>> unit_vals(m), deep_vals(m);
  {
    std::vector<uint8_t> seen_u(P), seen_n(P);
    for (int i = 0; i < m; ++i) {
      std::fill(seen_u.begin(), seen_u.end(), 0);
      std::fill(seen_n.begin(), seen_n.end(), 0);
      for (long t = 0; t < P; ++t) (t % pl ? seen_u : seen_n)[ares[i] * powd(t) % P] = 1;
      for (long v = 0; v < P; ++v) {
        if (seen_u[v]) unit_vals[i].push_back(v);
        if (seen_n[v]) deep_vals[i].push_back(v);
      }
    }
  }
  double work = 0;
  for (int i = 0; i < m; ++i)
    work += static_cast<double>(unit_vals[i].size() + deep_vals[i].size()) * P;
  if (work > 3e8) return std::nullopt;

  // reach[i][0]: sums of the first i terms, all coordinates divisible by p;
  // reach[i][1]: at least one unit coordinate so far
  std::vector<std::array<std::vector<uint8_t>, 2>> reach(m + 1);
  reach[0][0].assign(P, 0);
  reach[0][1].assign(P, 0);
  reach[0][0][0] = 1;
  for (int i = 0; i < m; ++i) {
    reach[i + 1][0].assign(P, 0);
    reach[i + 1][1].assign(P, 0);
    auto& no = reach[i + 1][0];
    auto& yes = reach[i + 1][1];
    for (long s = 0; s < P; ++s) {
      if (reach[i][0][s]) {
        for (long v : deep_vals[i]) no[s + v >= P ? s + v - P : s + v] = 1;
        for (long v : unit_vals[i]) yes[s + v >= P ? s + v - P : s + v] = 1;
      }
      if (reach[i][1][s]) {
        for (long v : deep_vals[i]) yes[s + v >= P ? s + v - P : s + v] = 1;
        for (long v : unit_vals[i]) yes[s + v >= P ? s + v - P : s + v] = 1;
      }
    }
  }

  SolubilityResult res;
  res.level_reached = K;
  if (!reach[m][1][0]) {
    res.verdict = Verdict::Insoluble;
    res.note = "primitive residue classes exhausted at level " + std::to_string(K);
    return res;
  }
  // walk the tables backwards to exhibit one certified solution
  res.verdict = Verdict::Soluble;
  res.witness.assign(m, Int(0));
  res.witness_level = K;
  res.note = "unit-coordinate congruence certificate";
  long T = 0;
  int state = 1;
  for (int i = m - 1; i >= 0; --i) {
    bool done = false;
    for (long t = 0; t < P && !done; ++t) {
      long rem = T - ares[i] * powd(t) % P;
      if (rem < 0) rem += P;
      bool unit = t % pl != 0;
      int prev = -1;
      if (state == 1) {
        if (unit && reach[i][0][rem])
          prev = 0;
        else if (reach[i][1][rem])
          prev = 1;
      } else if (!unit && reach[i][0][rem]) {
        prev = 0;
      }
      if (prev >= 0) {
        res.witness[i] = t;
        T = rem;
        state = prev;
        done = true;
      }
    }
    if (!done) throw std::logic_error("wild_exact: reconstruction left the table");
  }
  return res;
}

SolubilityResult wild_solve(const DiagonalForm& f, const Int& p, int max_level) {
  const int m = f.m();
  SolubilityResult res;

  // Normalize coefficient valuations before searching: a_i p^{dk} x^d loses
  // nothing under x -> x/p^k, and a common p factor divides out of the
  // equation. Both keep the solution set; without them high-valuation
  // coefficients drag dead residue branches through many levels.
  std::vector<int> shift(m, 0);
  {
    std::vector<Int> a = f.a;
    std::vector<long> e(m, 0);
    for (int i = 0; i < m; ++i) {
      while (mpz_divisible_p(a[i].get_mpz_t(), p.get_mpz_t())) {
        a[i] /= p;
        ++e[i];
      }
      shift[i] = static_cast<int>(e[i] / f.d);
      e[i] %= f.d;
    }
    long cmin = *std::min_element(e.begin(), e.end());
    for (int i = 0; i < m; ++i)
      for (long r = 0; r < e[i] - cmin; ++r) a[i] *= p;
    int smax = *std::max_element(shift.begin(), shift.end());
    if (cmin > 0 || smax > 0) {
      DiagonalForm nf;
      nf.d = f.d;
      nf.a = std::move(a);
      res = wild_solve(nf, p, max_level);
      if (res.verdict == Verdict::Soluble && !res.witness.empty() && smax > 0) {
        // deepen the certificate so the mapped witness can be peeled back to
        // a primitive vector without exhausting its level
        int target = res.witness_level + static_cast<int>(f.d) * smax;
        if (auto deep = hensel_refine(nf.equation(), res.witness, p,
                                      res.witness_level, target)) {
          res.witness = *deep;
          res.witness_level = target;
        }
        // nf arises from y_i = p^{shift_i} x_i, so x_i = y_i p^{smax-shift_i}
        // after clearing denominators by the homogeneous scaling p^{smax}
        Int mod = 1;
        for (int l = 0; l < res.witness_level; ++l) mod *= p;
        for (int i = 0; i < m; ++i) {
          for (int r = shift[i]; r < smax; ++r) res.witness[i] *= p;
          res.witness[i] %= mod;
        }
        auto all_deep = [&] {
          for (const Int& w : res.witness)
            if (w % p != 0) return false;
          return true;
        };
        while (res.witness_level > f.d && all_deep()) {
          for (Int& w : res.witness) w /= p;
          res.witness_level -= static_cast<int>(f.d);
        }
      }
      return res;
    }
  }

  if (auto exact = wild_exact(f, p, max_level)) return *exact;

  double budget = 1.0;
  for (int i = 0; i < m; ++i) budget *= p.get_d();
  if (budget > 2e6) {
    res.verdict = Verdict::Undecided;
    res.note = "wild enumeration beyond work budget";
    return res;
  }

  DiagonalEquation eq = f.equation();
  std::vector<std::vector<Int>> frontier;
  {
    std::vector<Int> x(m, 0);
    // odometer over [0,p)^m, skipping the zero vector
    while (true) {
      bool all0 = std::all_of(x.begin(), x.end(), [](const Int& c) { return c == 0; });
      if (!all0 && eq.eval_mod(x, p) == 0) frontier.push_back(x);
      int i = 0;
      while (i < m) {
        x[i] += 1;
        if (x[i] < p) break;
        x[i] = 0;
        ++i;
      }
      if (i == m) break;
    }
  }

  Int mod = p;
  constexpr std::size_t kNodeCap = 500000;
  for (int lvl = 1; lvl <= max_level; ++lvl) {
    std::vector<std::vector<Int>> keep;
    for (auto& n : frontier) {
      switch (hensel_liftable(eq, n, p, lvl)) {
        case HenselOutcome::Certified:
          res.verdict = Verdict::Soluble;
          res.witness = n;
          res.witness_level = lvl;
          res.level_reached = lvl;
          res.note = "lift tree certificate";
          return res;
        default:
          keep.push_back(std::move(n));
      }
    }
    frontier = std::move(keep);
    if (frontier.empty()) {
      res.verdict = Verdict::Insoluble;
      res.level_reached = lvl;
      res.note = "lift tree exhausted at level " + std::to_string(lvl);
      return res;
    }
    if (lvl == max_level) break;
    Int nmod = mod * p;
    std::vector<std::vector<Int>> next;
    for (auto& n : frontier) {
      std::vector<Int> delta(m, 0);
      while (true) {
        std::vector<Int> child(m);
        for (int i = 0; i < m; ++i) child[i] = n[i] + delta[i] * mod;
        if (eq.eval_mod(child, nmod) == 0) {
          next.push_back(std::move(child));
          if (next.size() > kNodeCap) {
            res.verdict = Verdict::Undecided;
            res.level_reached = lvl;
            res.note = "lift tree beyond node budget";
            return res;
          }
        }
        int i = 0;
        while (i < m) {
          delta[i] += 1;
          if (delta[i] < p) break;
          delta[i] = 0;
          ++i;
        }
        if (i == m) break;
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) {
      res.verdict = Verdict::Insoluble;
      res.level_reached = lvl + 1;
      res.note = "lift tree exhausted at level " + std::to_string(lvl + 1);
      return res;
    }
    mod = nmod;
  }
  res.verdict = Verdict::Undecided;
  res.level_reached = max_level;
  res.note = "level budget reached with live branches";
  return res;
}

}  // namespace

SolubilityResult solve_padic(const DiagonalForm& f, const Int& p, int max_level) {
  if (!is_prime(p)) throw std::invalid_argument("solve_padic: p not prime");
  if (max_level < 1) throw std::invalid_argument("solve_padic: max_level < 1");
  bool wild = mpz_divisible_p(Int(f.d).get_mpz_t(), p.get_mpz_t());
  return wild ? wild_solve(f, p, max_level) : tame_solve(f, p, max_level);
}

bool conic_soluble(const Int& a0, const Int& a1, const Int& a2, const Place& v) {
  if (a0 == 0 || a1 == 0 || a2 == 0)
    throw std::invalid_argument("conic_soluble: zero coefficient");
  Rat A(-a0 * a1), B(-a0 * a2);
  return hilbert_symbol(A, B, v).is_zero();
}

EverywhereReport everywhere_locally_soluble(const DiagonalForm& f) {
  if (!(f.d < f.m()))
    throw std::invalid_argument(
        "everywhere_locally_soluble requires degree < variables (good primes via Chevalley-Warning)");
  EverywhereReport rep;
  std::vector<Place> bad{Place::real(), Place::finite(2)};
  Int n = Int(f.d) * f.coeff_product();
  for (const Int& q : prime_divisors(n))
    if (q != 2) bad.push_back(Place::finite(q));
  std::sort(bad.begin(), bad.end());

  rep.verdict = Verdict::Soluble;
  for (const Place& v : bad) {
    SolubilityResult r = v.is_real() ? solve_real(f)
                                     : solve_padic(f, v.prime(), default_level(f, v.prime()));
    if (r.verdict == Verdict::Insoluble && rep.verdict != Verdict::Undecided)
      rep.verdict = Verdict::Insoluble;
    if (r.verdict == Verdict::Undecided) rep.verdict = Verdict::Undecided;
    rep.places.push_back({v, std::move(r)});
  }
  return rep;
}

// ---- Lind-Reichardt --------------------------------------------------------

DiagonalEquation lr_equation() {
  DiagonalEquation eq;
  eq.nvars = 3;
  eq.terms = {{Int(2), 1, 2}, {Int(-1), 0, 4}, {Int(17), 2, 4}};
  return eq;
}

namespace {

bool lr_primitive_mod4(const Int& x, const Int& y, const Int& z) {
  // weighted primitivity: not (2|x and 4|y and 2|z); decidable mod 4
  return !(x % 2 == 0 && y % 4 == 0 && z % 2 == 0);
}

SolubilityResult lr_local_2(int max_level) {
  DiagonalEquation eq = lr_equation();
  SolubilityResult res;
  std::vector<std::array<Int, 3>> frontier;
  for (Int x = 0; x < 4; ++x)
    for (Int y = 0; y < 4; ++y)
      for (Int z = 0; z < 4; ++z) {
        if (!lr_primitive_mod4(x, y, z)) continue;
        std::vector<Int> pt{x, y, z};
        if (eq.eval_mod(pt, 4) == 0) frontier.push_back({x, y, z});
      }
  Int mod = 4;
  for (int lvl = 2; lvl <= max_level; ++lvl) {
    std::vector<std::array<Int, 3>> keep;
    for (auto& n : frontier) {
      std::vector<Int> pt{n[0], n[1], n[2]};
      if (hensel_liftable(eq, pt, 2, lvl) == HenselOutcome::Certified) {
        res.verdict = Verdict::Soluble;
        res.witness = pt;
        res.witness_level = lvl;
        res.level_reached = lvl;
        res.note = "weighted lift tree certificate";
        return res;
      }
      keep.push_back(n);
    }
    frontier = std::move(keep);
    if (frontier.empty()) break;
    if (lvl == max_level) {
      res.verdict = Verdict::Undecided;
      res.level_reached = lvl;
      res.note = "level budget reached";
      return res;
    }
    Int nmod = mod * 2;
    std::vector<std::array<Int, 3>> next;
    for (auto& n : frontier)
      for (Int i = 0; i < 2; ++i)
        for (Int j = 0; j < 2; ++j)
          for (Int k = 0; k < 2; ++k) {
            std::array<Int, 3> c{n[0] + i * mod, n[1] + j * mod, n[2] + k * mod};
            std::vector<Int> pt{c[0], c[1], c[2]};
            if (eq.eval_mod(pt, nmod) == 0) next.push_back(c);
          }
    frontier = std::move(next);
    mod = nmod;
  }
  res.verdict = frontier.empty() ? Verdict::Insoluble : Verdict::Undecided;
  res.note = frontier.empty() ? "weighted lift tree exhausted" : "level budget reached";
  return res;
}

}  // namespace

SolubilityResult lind_reichardt_local(const Place& v, int max_level) {
  SolubilityResult res;
  if (v.is_real()) {
    // x = 1, z = 0: 2y^2 = 1 has the real root y = 1/sqrt(2)
    res.verdict = Verdict::Soluble;
    res.sign_pattern = {1, 1, 0};
    res.note = "x^4 dominates at z=0";
    return res;
  }
  const Int& p = v.prime();
  if (p == 2) return lr_local_2(max_level > 0 ? max_level : 16);

  std::uint64_t pu = p.get_ui();
  std::uint64_t inv2 = invmod_u64(2 % pu, pu);
  DiagonalEquation eq = lr_equation();
  for (std::uint64_t x = 0; x < pu; ++x)
    for (std::uint64_t z = 0; z < pu; ++z) {
      if (x == 0 && z == 0) continue;
      std::uint64_t x4 = powmod_u64(x, 4, pu);
      std::uint64_t z4 = powmod_u64(z, 4, pu);
      std::uint64_t rhs = (x4 + pu - mulmod_u64(17 % pu, z4, pu) % pu) % pu;
      std::uint64_t c = mulmod_u64(rhs, inv2, pu);  // y^2 = c mod p
      std::optional<std::uint64_t> y;
      if (c == 0) {
        if (x == 0) continue;  // needs unit x or unit y for a smooth point
        y = 0;
      } else {
        y = sqrt_mod_prime(c, pu);
        if (!y) continue;
      }
      std::vector<Int> pt{Int(static_cast<unsigned long>(x)), Int(static_cast<unsigned long>(*y)),
                          Int(static_cast<unsigned long>(z))};
      if (hensel_liftable(eq, pt, p, 1) != HenselOutcome::Certified) continue;
      int lw = 3;
      auto refined = hensel_refine(eq, pt, p, 1, lw);
      if (!refined) continue;
      res.verdict = Verdict::Soluble;
      res.witness = *refined;
      res.witness_level = lw;
      res.level_reached = lw;
      res.note = "smooth residue point";
      return res;
    }
  res.verdict = Verdict::Undecided;
  res.note = "no smooth residue point at level 1";
  return res;
}

LRCertificate lind_reichardt_global_insoluble(long q_check) {
  LRCertificate c;
  c.q_check = q_check;
  c.two_square_mod17 = legendre_symbol(2, 17) == 1;
  c.minus_one_square_mod17 = legendre_symbol(-1, 17) == 1;
  c.qr_descent_ok = true;
  for (long q = 3; q <= q_check; q += 2) {
    Int qq(q);
    if (!is_prime(qq) || q == 17) continue;
    if (legendre_symbol(17, qq) == 1 && legendre_symbol(qq, 17) != 1) {
      c.qr_descent_ok = false;
      break;
    }
  }
  std::set<long> fp;
  for (long x = 1; x < 17; ++x) fp.insert((x * x % 17) * (x * x % 17) % 17);
  c.fourth_powers_mod17.assign(fp.begin(), fp.end());
  c.two_is_fourth_power = fp.count(2) > 0;
  c.insoluble = c.two_square_mod17 && c.minus_one_square_mod17 && c.qr_descent_ok &&
                !c.two_is_fourth_power;
  return c;
}

}  // namespace hasse
