#include "hasse/brauer.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "hasse/hensel.hpp"

namespace hasse {

namespace {

Int pow_int(const Int& p, int k) {
  Int m;
  mpz_pow_ui(m.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k));
  return m;
}

// weights (1,2,1): a triple is imprimitive when p | x, p^2 | y, p | z all hold
bool weighted_primitive(const std::vector<Int>& t, const Int& p) {
  return !(mpz_divisible_p(t[0].get_mpz_t(), p.get_mpz_t()) &&
           mpz_divisible_p(t[1].get_mpz_t(), Int(p * p).get_mpz_t()) &&
           mpz_divisible_p(t[2].get_mpz_t(), p.get_mpz_t()));
}

// Does the residue triple have a Hensel-certified descendant within `depth`
// further levels?  Used at p = 2 where the strong criterion never resolves
// at the node's own level: x is odd on every viable branch, so v(df/dx) = 2
// and any depth-1 child with f ≡ 0 mod 2^(k+1), k+1 >= 5, certifies.
bool probe_certified(const DiagonalEquation& f, const std::vector<Int>& pt, const Int& p,
                     int level, int depth) {
  if (hensel_liftable(f, pt, p, level) == HenselOutcome::Certified) return true;
  if (depth == 0) return false;
  Int mod = pow_int(p, level);
  Int nmod = mod * p;
  long pl = p.get_si();
  std::vector<Int> child(3);
  for (long a = 0; a < pl; ++a)
    for (long b = 0; b < pl; ++b)
      for (long c = 0; c < pl; ++c) {
        child[0] = pt[0] + mod * a;
        child[1] = pt[1] + mod * b;
        child[2] = pt[2] + mod * c;
        if (f.eval_mod(child, nmod) != 0) continue;
        if (!weighted_primitive(child, p)) continue;
        if (probe_certified(f, child, p, level + 1, depth - 1)) return true;
      }
  return false;
}

std::vector<std::vector<Int>> lr_points_2(int level) {
  const Int p = 2;
  DiagonalEquation f = lr_equation();
  if (level > 16) throw std::length_error("lr_local_points: level budget exceeded at p = 2");
  std::vector<std::vector<Int>> cur;
  for (long x = 0; x < 4; ++x)
    for (long y = 0; y < 4; ++y)
      for (long z = 0; z < 4; ++z) {
        std::vector<Int> t = {Int(x), Int(y), Int(z)};
        if (!weighted_primitive(t, p)) continue;
        if (f.eval_mod(t, 4) != 0) continue;
        cur.push_back(std::move(t));
      }
  for (int lvl = 2; lvl < level; ++lvl) {
    Int mod = pow_int(p, lvl);
    Int nmod = mod * 2;
    std::vector<std::vector<Int>> next;
    for (const auto& t : cur)
      for (int b = 0; b < 8; ++b) {
        std::vector<Int> c = {t[0] + mod * (b & 1), t[1] + mod * ((b >> 1) & 1),
                              t[2] + mod * ((b >> 2) & 1)};
        if (f.eval_mod(c, nmod) != 0) continue;
        if (!weighted_primitive(c, p)) continue;
        next.push_back(std::move(c));
      }
    cur = std::move(next);
    if (cur.size() > 2000000) throw std::length_error("lr_local_points: node budget exceeded");
  }
  std::vector<std::vector<Int>> out;
  for (auto& t : cur)
    if (probe_certified(f, t, p, level, 4)) out.push_back(std::move(t));
  return out;
}

// Odd p: walk (x, z) mod p^level and read off the y with 2y^2 ≡ x^4 - 17z^4
// from a precomputed bucket table.  Every emitted node is certified to hold a
// Q_p point: when x is a unit, fix integers (y0, z0) from the residues and
// Hensel-solve X^4 = 17 z0^4 + 2 y0^2 (derivative 4x^3 is a unit, f ≡ 0 mod
// p^level at the node); when x ≡ 0 the same argument runs in the z direction
// (68 z^3 a unit, p != 17).  The excluded corner — x ≡ 0 with x^4 ≡ 17 z^4 ≡ 0
// mod p^level, z a unit — only happens at p = 17, where v(2y^2) = 1 is
// impossible, so those residues hold no points at all.
std::vector<std::vector<Int>> lr_points_odd(const Int& p, int level) {
  if (!p.fits_ulong_p()) throw std::length_error("lr_local_points: prime too large");
  const unsigned long pl = p.get_ui();
  unsigned long m = 1;
  for (int i = 0; i < level; ++i) {
    if (m > (1ul << 30) / pl) throw std::length_error("lr_local_points: residue modulus too large");
    m *= pl;
  }
  if (static_cast<double>(m) * static_cast<double>(m) > 1.1e6)
    throw std::length_error("lr_local_points: enumeration budget exceeded");

  std::vector<unsigned long> quart(m), t17(m), key(m);
  for (unsigned long x = 0; x < m; ++x) {
    unsigned long s = (x * x) % m;
    quart[x] = (s * s) % m;
    t17[x] = (17 * quart[x]) % m;
    key[x] = (2 * s) % m;  // 2x^2, the y-side of the equation
  }
  // counting sort of y by 2y^2 mod m
  std::vector<unsigned> start(m + 1, 0), order(m);
  for (unsigned long y = 0; y < m; ++y) ++start[key[y] + 1];
  for (unsigned long c = 0; c < m; ++c) start[c + 1] += start[c];
  {
    std::vector<unsigned> fill(start.begin(), start.end() - 1);
    for (unsigned long y = 0; y < m; ++y) order[fill[key[y]]++] = static_cast<unsigned>(y);
  }

  std::vector<std::vector<Int>> out;
  for (unsigned long x = 0; x < m; ++x) {
    bool xdiv = (x % pl == 0);
    for (unsigned long z = 0; z < m; ++z) {
      if (xdiv && z % pl == 0) continue;  // no weighted-primitive points over that corner
      unsigned long c = quart[x] + m - t17[z];
      if (c >= m) c -= m;
      unsigned b0 = start[c], b1 = start[c + 1];
      if (b0 == b1) continue;
      if (c == 0 && xdiv) continue;  // p = 17 only; such residues hold no points
      for (unsigned j = b0; j < b1; ++j)
        out.push_back({Int(x), Int(static_cast<unsigned long>(order[j])), Int(z)});
      if (out.size() > 1500000) throw std::length_error("lr_local_points: node budget exceeded");
    }
  }
  return out;
}

std::optional<Rat> eval_presentation_exact(const CurvePresentation& pr,
                                           const std::vector<Rat>& c) {
  auto powq = [](const Rat& b, int e) -> std::optional<Rat> {
    if (e == 0) return Rat(1);
    if (sgn(b) == 0) return std::nullopt;  // zero or pole of the function
    Rat base = e > 0 ? b : Rat(1) / b;
    Rat r = 1;
    for (int i = 0; i < (e > 0 ? e : -e); ++i) r *= base;
    return r;
  };
  std::optional<Rat> fx = powq(c[0], pr.ex), fy = powq(c[1], pr.ey), fz = powq(c[2], pr.ez);
  if (!fx || !fy || !fz) return std::nullopt;
  Rat val = pr.c * *fx * *fy * *fz;
  if (sgn(val) == 0) return std::nullopt;
  return val;
}

std::optional<PadicApprox> eval_presentation_residue(const CurvePresentation& pr,
                                                     const LocalPoint& pt) {
  const Int& p = pt.v.prime();
  Int mod = pow_int(p, pt.level);
  PadicApprox acc = PadicApprox::exact(pr.c, p, pt.level);
  int exps[3] = {pr.ex, pr.ey, pr.ez};
  for (int i = 0; i < 3; ++i) {
    if (exps[i] == 0) continue;
    Int r = pt.residues[i] % mod;
    if (r < 0) r += mod;
    // residue 0: valuation is only bounded below, the factor cannot be pinned
    if (r == 0) return std::nullopt;
    acc = acc.mul(PadicApprox::from_residue(r, p, pt.level).pow(exps[i]));
  }
  return acc;
}

int profile_level_for(const Int& p, int level) {
  if (p == 2) return std::max(level, 2);
  int lvl = level;
  while (lvl > 1) {
    double m = std::pow(p.get_d(), lvl);
    if (m * m <= 1.1e6) break;
    --lvl;
  }
  return lvl;
}

}  // namespace

std::string CurvePresentation::str() const {
  std::ostringstream num, den;
  auto put = [](std::ostringstream& os, const char* name, int e) {
    if (e == 0) return;
    if (os.tellp() > 0) os << "*";
    os << name;
    if (e != 1) os << "^" << e;
  };
  put(num, "X", ex > 0 ? ex : 0);
  put(num, "Y", ey > 0 ? ey : 0);
  put(num, "Z", ez > 0 ? ez : 0);
  put(den, "X", ex < 0 ? -ex : 0);
  put(den, "Y", ey < 0 ? -ey : 0);
  put(den, "Z", ez < 0 ? -ez : 0);
  std::ostringstream out;
  if (c != 1 || num.tellp() == 0) {
    out << c.get_str();
    if (num.tellp() > 0) out << "*";
  }
  out << num.str();
  if (den.tellp() > 0) out << "/" << (den.str().find('*') != std::string::npos ? "(" : "")
                           << den.str() << (den.str().find('*') != std::string::npos ? ")" : "");
  return out.str();
}

QuaternionSymbolClass QuaternionSymbolClass::on_curve(const Rat& a,
                                                      std::vector<CurvePresentation> ps) {
  if (sgn(a) == 0) throw std::invalid_argument("QuaternionSymbolClass: a = 0");
  if (ps.empty()) throw std::invalid_argument("QuaternionSymbolClass: no presentations");
  for (const auto& pr : ps) {
    if (sgn(pr.c) == 0) throw std::invalid_argument("QuaternionSymbolClass: zero presentation");
    if (pr.ex + 2 * pr.ey + pr.ez != 0)
      throw std::invalid_argument("QuaternionSymbolClass: presentation not of weighted degree 0");
  }
  QuaternionSymbolClass q;
  q.base_ = Base::LindReichardtCurve;
  q.a_ = a;
  q.curve_ps_ = std::move(ps);
  return q;
}

QuaternionSymbolClass QuaternionSymbolClass::on_line(const Rat& a, std::vector<QRatFunc> ps) {
  if (sgn(a) == 0) throw std::invalid_argument("QuaternionSymbolClass: a = 0");
  if (ps.empty()) throw std::invalid_argument("QuaternionSymbolClass: no presentations");
  for (const auto& f : ps)
    if (f.num().is_zero()) throw std::invalid_argument("QuaternionSymbolClass: zero presentation");
  QuaternionSymbolClass q;
  q.base_ = Base::ProjectiveLineQt;
  q.a_ = a;
  q.line_ps_ = std::move(ps);
  return q;
}

QuaternionSymbolClass QuaternionSymbolClass::lind_reichardt() {
  return on_curve(17, {{1, -2, 1, 0}, {1, 0, 1, -2}});
}

LocalPoint LocalPoint::exact_point(const Place& v, std::vector<Rat> coords) {
  if (coords.size() != 3) throw std::invalid_argument("LocalPoint: need 3 coordinates");
  LocalPoint pt;
  pt.v = v;
  pt.exact = true;
  pt.coords = std::move(coords);
  return pt;
}

LocalPoint LocalPoint::residue_point(const Int& p, std::vector<Int> residues, int level) {
  if (residues.size() != 3) throw std::invalid_argument("LocalPoint: need 3 residues");
  if (level < 1) throw std::invalid_argument("LocalPoint: level < 1");
  LocalPoint pt;
  pt.v = Place::finite(p);
  pt.exact = false;
  pt.residues = std::move(residues);
  pt.level = level;
  return pt;
}

QmodZ evaluate_at(const QuaternionSymbolClass& cls, const LocalPoint& pt, const Place& v) {
  if (cls.base() != QuaternionSymbolClass::Base::LindReichardtCurve)
    throw std::invalid_argument("evaluate_at: class does not live on the curve");
  if (!(pt.v == v)) throw std::invalid_argument("evaluate_at: point lives at a different place");
  // split shortcut: when a is a square in Q_v the algebra is split at every
  // point, no matter how (or whether) the presentations can be read off
  if (is_square_in_qv(cls.a(), v)) return QmodZ::zero();
  if (pt.exact) {
    for (const auto& pr : cls.curve_presentations()) {
      std::optional<Rat> val = eval_presentation_exact(pr, pt.coords);
      if (!val) continue;
      return hilbert_symbol(cls.a(), *val, v);
    }
    throw NoEvaluablePresentation("every presentation hits a zero or pole at the point");
  }
  if (v.is_real()) throw std::invalid_argument("evaluate_at: real points must be exact");
  for (const auto& pr : cls.curve_presentations()) {
    std::optional<PadicApprox> val = eval_presentation_residue(pr, pt);
    if (!val) continue;
    std::optional<QmodZ> inv = hilbert_symbol_approx(cls.a(), *val);
    if (inv) return *inv;
  }
  throw NoEvaluablePresentation("no presentation is decidable at this residue level");
}

std::vector<std::vector<Int>> lr_local_points(const Int& p, int level) {
  if (!is_prime(p)) throw std::invalid_argument("lr_local_points: p not prime");
  if (level < 1) throw std::invalid_argument("lr_local_points: level < 1");
  if (p == 2) {
    if (level < 2)
      throw std::invalid_argument("lr_local_points: need level >= 2 at p = 2 (primitivity)");
    return lr_points_2(level);
  }
  return lr_points_odd(p, level);
}

InvariantProfile invariant_profile(const QuaternionSymbolClass& cls, const Place& v, int level) {
  if (cls.base() != QuaternionSymbolClass::Base::LindReichardtCurve)
    throw std::invalid_argument("invariant_profile: class does not live on the curve");
  InvariantProfile prof;
  prof.v = v;
  prof.level = level;
  if (is_square_in_qv(cls.a(), v)) {
    // a splits in Q_v, so every presentation evaluates to 0 on every point;
    // no sampling needed (over R the curve has points: x^4 dominates for z
    // small)
    prof.attained = {QmodZ::zero()};
    prof.sample_count = 0;
    return prof;
  }
  if (v.is_real())
    throw std::invalid_argument("invariant_profile: real profile needs a > 0");
  const Int& p = v.prime();
  SolubilityResult loc = lind_reichardt_local(v);
  if (loc.verdict != Verdict::Soluble)
    throw std::logic_error("invariant_profile: curve not certified locally soluble at v");

  std::set<QmodZ> got;
  int lvl = level;
  for (int attempt = 0; attempt < 2; ++attempt) {
    std::vector<std::vector<Int>> pts;
    try {
      pts = lr_local_points(p, lvl);
    } catch (const std::length_error&) {
      if (attempt == 0) throw;
      prof.undecided = true;
      break;
    }
    bool failed = false;
    for (auto& t : pts) {
      LocalPoint pt = LocalPoint::residue_point(p, std::move(t), lvl);
      try {
        got.insert(evaluate_at(cls, pt, v));
      } catch (const NoEvaluablePresentation&) {
        failed = true;
      }
    }
    prof.sample_count = static_cast<long>(pts.size());
    prof.undecided = failed;
    if (!failed) break;
    lvl += 4;  // one refinement pass; failures that survive it stay undecided
  }
  prof.attained.assign(got.begin(), got.end());
  return prof;
}

ObstructionReport adelic_obstruction_test(const QuaternionSymbolClass& cls, const Int& prime_bound,
                                          int level) {
  if (cls.base() != QuaternionSymbolClass::Base::LindReichardtCurve)
    throw std::invalid_argument("adelic_obstruction_test: class does not live on the curve");
  if (level < 1) throw std::invalid_argument("adelic_obstruction_test: level < 1");
  if (prime_bound < 2) throw std::invalid_argument("adelic_obstruction_test: bound < 2");

  ObstructionReport rep;
  std::vector<Place> places{Place::real()};
  for (Int q = 2; q <= prime_bound; ++q)
    if (is_prime(q)) places.push_back(Place::finite(q));

  std::vector<QmodZ> sums{QmodZ::zero()};
  for (const Place& v : places) {
    PlaceReport pr;
    pr.v = v;
    pr.local_solubility = lind_reichardt_local(v).verdict;
    if (is_square_in_qv(cls.a(), v)) {
      // split places contribute 0 from every point; no enumeration needed
      pr.method = "split: a is a square in Q_v";
      pr.profile.v = v;
      pr.profile.level = 0;
      pr.profile.attained = {QmodZ::zero()};
      pr.profile.sample_count = 0;
    } else {
      int lvl = profile_level_for(v.prime(), level);
      pr.profile = invariant_profile(cls, v, lvl);
      pr.method = "enumeration at level " + std::to_string(lvl);
    }
    if (pr.profile.undecided || pr.profile.attained.empty()) rep.undecided = true;
    std::set<QmodZ> folded;
    for (const auto& s : sums)
      for (const auto& a : pr.profile.attained) folded.insert(s + a);
    if (!folded.empty()) sums.assign(folded.begin(), folded.end());
    rep.places.push_back(std::move(pr));
  }
  rep.sum_set = sums;
  if (rep.undecided) {
    rep.verdict = "undecided: some local profile could not be certified";
  } else if (sums.size() == 1 && sums[0] == QmodZ::half()) {
    rep.obstructed = true;
    rep.verdict = "obstructed (within certified range)";
  } else {
    rep.verdict = "no obstruction from this class within the certified range";
  }
  rep.tail_note =
      "places beyond the bound: split wherever a is a square in Q_v; others not enumerated";
  return rep;
}

bool is_prolific(const QuaternionSymbolClass& cls, const Place& v, int level) {
  InvariantProfile prof = invariant_profile(cls, v, level);
  return prof.attained.size() == 2;
}

}  // namespace hasse
