#include "hasse/symbols.hpp"

#include <numeric>

#include "hasse/hensel.hpp"

namespace hasse {

QmodZ QmodZ::normalized() const {
  if (den == 0) throw std::logic_error("QmodZ: zero denominator");
  long n = num % den;
  if (n < 0) n += std::abs(den);
  long d = std::abs(den);
  long g = std::gcd(n, d);
  if (g == 0) return {0, 1};
  return {n / g, d / g};
}

QmodZ QmodZ::operator+(const QmodZ& o) const {
  QmodZ r{num * o.den + o.num * den, den * o.den};
  return r.normalized();
}

std::string QmodZ::str() const {
  QmodZ n = normalized();
  if (n.num == 0) return "0";
  return std::to_string(n.num) + "/" + std::to_string(n.den);
}

namespace {

int eps_bit(const Int& u) { return mpz_fdiv_ui(u.get_mpz_t(), 4) == 3 ? 1 : 0; }
int omega_bit(const Int& u) {
  unsigned long r = mpz_fdiv_ui(u.get_mpz_t(), 8);
  return (r == 3 || r == 5) ? 1 : 0;
}

void check_nonzero(const Rat& a, const Rat& b) {
  if (sgn(a) == 0 || sgn(b) == 0)
    throw std::invalid_argument("hilbert symbol requires nonzero arguments");
}

}  // namespace

QmodZ hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
  check_nonzero(a, b);
  if (v.is_real())
    return (sgn(a) < 0 && sgn(b) < 0) ? QmodZ::half() : QmodZ::zero();
  const Int& p = v.prime();
  if (p == 2) {
    UnitSplit sa = unit_split(a, p, 3), sb = unit_split(b, p, 3);
    long alpha = sa.val, beta = sb.val;
    int bit = (eps_bit(sa.unit) & eps_bit(sb.unit)) ^
              ((alpha % 2) & omega_bit(sb.unit)) ^
              ((beta % 2) & omega_bit(sa.unit));
    return bit ? QmodZ::half() : QmodZ::zero();
  }
  UnitSplit sa = unit_split(a, p, 1), sb = unit_split(b, p, 1);
  long alpha = sa.val, beta = sb.val;
  int minus_one_bit = mpz_fdiv_ui(p.get_mpz_t(), 4) == 3 ? 1 : 0;  // (-1|p) = -1
  int bit = ((alpha & 1) & (beta & 1) & minus_one_bit);
  if (beta & 1) bit ^= legendre_symbol(sa.unit, p) == -1 ? 1 : 0;
  if (alpha & 1) bit ^= legendre_symbol(sb.unit, p) == -1 ? 1 : 0;
  return bit ? QmodZ::half() : QmodZ::zero();
}

std::optional<QmodZ> hilbert_symbol_approx(const Rat& a, const PadicApprox& b) {
  if (sgn(a) == 0) throw std::invalid_argument("hilbert symbol requires nonzero arguments");
  const Int& p = b.p;
  Place v = Place::finite(p);
  if (p == 2) {
    if (b.prec < 3) return std::nullopt;
    UnitSplit sa = unit_split(a, p, 3);
    int bit = (eps_bit(sa.unit) & eps_bit(b.unit)) ^
              ((sa.val % 2) & omega_bit(b.unit)) ^
              ((b.val % 2) & omega_bit(sa.unit));
    return bit ? QmodZ::half() : QmodZ::zero();
  }
  if (b.prec < 1) return std::nullopt;
  UnitSplit sa = unit_split(a, p, 1);
  long alpha = sa.val, beta = b.val;
  int minus_one_bit = mpz_fdiv_ui(p.get_mpz_t(), 4) == 3 ? 1 : 0;
  int bit = ((alpha & 1) & (beta & 1) & minus_one_bit);
  if (beta & 1) bit ^= legendre_symbol(sa.unit, p) == -1 ? 1 : 0;
  if (alpha & 1) {
    Int uw = b.unit % p;
    bit ^= legendre_symbol(uw, p) == -1 ? 1 : 0;
  }
  return bit ? QmodZ::half() : QmodZ::zero();
}

namespace {

// residue-tree search for x^2 - a y^2 = b over Z_p (a, b integral, a with
// valuation in {0,1} and not a square in Q_p; see norm_oracle)
NormSearchResult norm_tree_search(const Int& a, const Int& b, const Int& p, int level) {
  DiagonalEquation eq;
  eq.nvars = 2;
  eq.terms = {{Int(1), 0, 2}, {-a, 1, 2}, {-b, -1, 0}};

  struct Node {
    Int x, y;
  };
  std::vector<Node> frontier;
  Int mod = p;
  for (Int x = 0; x < p; ++x)
    for (Int y = 0; y < p; ++y) {
      std::vector<Int> pt{x, y};
      if (eq.eval_mod(pt, mod) == 0) frontier.push_back({x, y});
    }

  for (int lvl = 1; lvl <= level; ++lvl) {
    // certify or prune the current frontier at precision lvl
    std::vector<Node> keep;
    for (auto& n : frontier) {
      std::vector<Int> pt{n.x, n.y};
      switch (hensel_liftable(eq, pt, p, lvl)) {
        case HenselOutcome::Certified:
          return {OracleAnswer::IsNorm, lvl, {n.x, n.y}};
        case HenselOutcome::InsufficientPrecision:
          keep.push_back(n);
          break;
        case HenselOutcome::NotCertified:
          keep.push_back(n);  // criterion failed but branch may still extend
          break;
      }
    }
    frontier = std::move(keep);
    if (frontier.empty()) return {OracleAnswer::NotNorm, lvl, {}};
    if (lvl == level) break;
    // lift to the next level
    Int nmod = mod * p;
    std::vector<Node> next;
    for (auto& n : frontier)
      for (Int i = 0; i < p; ++i)
        for (Int j = 0; j < p; ++j) {
          Node m{n.x + i * mod, n.y + j * mod};
          std::vector<Int> pt{m.x, m.y};
          if (eq.eval_mod(pt, nmod) == 0) next.push_back(m);
        }
    frontier = std::move(next);
    if (frontier.empty()) return {OracleAnswer::NotNorm, lvl + 1, {}};
    mod = nmod;
  }
  return {OracleAnswer::Undecided, level, {}};
}

}  // namespace

NormSearchResult norm_oracle(const Rat& a, const Rat& b, const Place& v, int level) {
  check_nonzero(a, b);
  if (v.is_real()) {
    if (sgn(a) > 0) return {OracleAnswer::IsNorm, 0, {}};
    return {sgn(b) > 0 ? OracleAnswer::IsNorm : OracleAnswer::NotNorm, 0, {}};
  }
  const Int& p = v.prime();
  if (is_square_in_qv(a, v)) return {OracleAnswer::IsNorm, 0, {}};  // split: everything is a norm

  // integralize and reduce valuations mod 2 (norm group contains squares)
  auto normalize = [&](const Rat& x) {
    Rat y = x * Rat(x.get_den()) * Rat(x.get_den());
    Int z(y.get_num());
    long val = *valuation(z, p);
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(val - (val % 2)));
    return Int(z / pe);
  };
  Int ai = normalize(a), bi = normalize(b);
  // a not a square in Q_p => x^2 - a y^2 anisotropic => any Q_p solution is
  // integral once v(b) is reduced to {0,1}
  return norm_tree_search(ai, bi, p, level);
}

std::vector<Place> candidate_places(const Rat& a, const Rat& b) {
  check_nonzero(a, b);
  std::vector<Place> out{Place::real(), Place::finite(2)};
  std::vector<Int> ps = prime_support(a);
  for (const Int& q : prime_support(b)) ps.push_back(q);
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  for (const Int& q : ps)
    if (q != 2) out.push_back(Place::finite(q));
  return out;
}

std::vector<LocalInvariant> local_invariants(const Rat& a, const Rat& b) {
  std::vector<LocalInvariant> out;
  for (const Place& v : candidate_places(a, b))
    out.push_back({v, hilbert_symbol(a, b, v)});
  return out;
}

QmodZ invariant_sum(const Rat& a, const Rat& b) {
  QmodZ s = QmodZ::zero();
  for (const auto& li : local_invariants(a, b)) s = s + li.inv;
  return s;
}

std::vector<Place> invariant_support(const Rat& a, const Rat& b) {
  std::vector<Place> out;
  for (const auto& li : local_invariants(a, b))
    if (!li.inv.is_zero()) out.push_back(li.v);
  return out;
}

bool reciprocity_check(const Int& p, const Int& q) {
  if (p == q || p == 2 || q == 2 || !is_prime(p) || !is_prime(q))
    throw std::invalid_argument("reciprocity_check needs distinct odd primes");
  int lpq = legendre_symbol(p, q);
  int lqp = legendre_symbol(q, p);
  bool both3mod4 = mpz_fdiv_ui(p.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(q.get_mpz_t(), 4) == 3;
  bool direct = (lpq * lqp == (both3mod4 ? -1 : 1));

  // re-derivation from the invariant sum of the quaternion algebra (p, q)
  Rat pa(p), qa(q);
  QmodZ hp = hilbert_symbol(pa, qa, Place::finite(p));
  QmodZ hq = hilbert_symbol(pa, qa, Place::finite(q));
  QmodZ h2 = hilbert_symbol(pa, qa, Place::finite(2));
  QmodZ hinf = hilbert_symbol(pa, qa, Place::real());
  bool sum_zero = (hp + hq + h2 + hinf).is_zero() && invariant_sum(pa, qa).is_zero();
  // tame invariants encode the Legendre symbols: inv_p nonzero iff (q|p)=-1
  bool encode = ((hp == QmodZ::half()) == (lqp == -1)) &&
                ((hq == QmodZ::half()) == (lpq == -1)) && hinf.is_zero();
  // sum 0 forces: [q non-residue mod p] xor [p non-residue mod q] = [inv_2 != 0]
  bool isolated = ((!hp.is_zero()) ^ (!hq.is_zero())) == !h2.is_zero();
  bool inv2_matches = (!h2.is_zero()) == both3mod4;

  return direct && sum_zero && encode && isolated && inv2_matches;
}

}  // namespace hasse
