#pragma once

// Brute-force reference routes, written and frozen before the tests that use
// them. Everything here prefers exhaustion over cleverness; the library is
// measured against these, never the other way around.

#include <map>
#include <random>
#include <vector>

#include "hasse/numeric.hpp"
#include "hasse/place.hpp"
#include "hasse/symbols.hpp"

namespace oracle {

// Legendre symbol by literally counting squares mod p.
inline int legendre(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  for (long x = 1; x < p; ++x)
    if ((x * x) % p == a) return 1;
  return -1;
}

// Is a a square in Q_v? Exhaustive unit-residue search after stripping the
// even part of the valuation.
inline bool is_square_qv(const hasse::Rat& a, const hasse::Place& v) {
  using hasse::Int;
  if (a == 0) return true;
  if (v.is_real()) return a > 0;
  Int p = v.prime();
  Int n = a.get_num() * a.get_den();  // same square class as a
  long val = 0;
  while (n % p == 0) {
    n /= p;
    ++val;
  }
  if (val % 2 != 0) return false;
  Int m = p == 2 ? Int(8) : p;
  Int u = n % m;
  if (u < 0) u += m;
  for (Int x = 1; x < m; ++x)
    if ((x * x - u) % m == 0) return true;
  return false;
}

// Exact count of P^n(Q) points of height <= B: signed odometer, gcd filter,
// first nonzero coordinate positive. O((2B+1)^{n+1}); keep n <= 2, B <= 60.
inline long long count_points_brute(int n, long B) {
  std::vector<long> x(n + 1, -B);
  long long count = 0;
  while (true) {
    long g = 0;
    int first = -1;
    for (int i = 0; i <= n; ++i) {
      long ax = x[i] < 0 ? -x[i] : x[i];
      g = std::gcd(g, ax);
      if (first < 0 && x[i] != 0) first = i;
    }
    if (g == 1 && x[first] > 0) ++count;
    int i = n;
    while (i >= 0 && x[i] == B) x[i--] = -B;
    if (i < 0) break;
    ++x[i];
  }
  return count;
}

// Fraction of affine maps j -> s j + t on Z/d (s a unit) fixing some point,
// by scanning every (s, t, j).
inline hasse::Rat affine_delta_brute(int d) {
  long total = 0, fixing = 0;
  for (long s = 0; s < d; ++s) {
    if (std::gcd(s, static_cast<long>(d)) != 1) continue;
    for (long t = 0; t < d; ++t) {
      ++total;
      for (long j = 0; j < d; ++j)
        if ((s * j + t) % d == j) {
          ++fixing;
          break;
        }
    }
  }
  hasse::Rat r(fixing, total);
  r.canonicalize();
  return r;
}

// Exact conic solubility density over Q_p, via valuation parities and unit
// classes with geometric weights, each class decided by the norm search
// (independent of solve_padic and of the class machinery in density.cpp).
inline hasse::Rat conic_density_brute(long p) {
  using hasse::Int;
  using hasse::Rat;
  std::vector<long> units;
  Rat unit_w;
  if (p == 2) {
    units = {1, 3, 5, 7};
    unit_w = Rat(1, 4);
  } else {
    long nr = 0;
    for (long x = 2; x < p; ++x)
      if (legendre(x, p) == -1) {
        nr = x;
        break;
      }
    units = {1, nr};
    unit_w = Rat(1, 2);
  }
  // Pr[v_p odd] = 1/(p+1), Pr[even] = p/(p+1)
  Rat w_even(p, p + 1), w_odd(1, p + 1);
  std::map<std::vector<long>, bool> memo;
  hasse::Place vp = hasse::Place::finite(Int(p));
  Rat density = 0;
  int nu = static_cast<int>(units.size());
  for (int mask = 0; mask < 8 * nu * nu * nu; ++mask) {
    int rest = mask;
    std::vector<long> a(3);
    Rat weight = 1;
    for (int i = 0; i < 3; ++i) {
      int par = rest % 2;
      rest /= 2;
      int ui = rest % nu;
      rest /= nu;
      a[i] = (par ? p : 1) * units[ui];
      weight *= (par ? w_odd : w_even) * unit_w;
    }
    std::vector<long> key(a);
    std::sort(key.begin(), key.end());
    auto it = memo.find(key);
    bool ok;
    if (it != memo.end()) {
      ok = it->second;
    } else {
      Rat x = Rat(-a[0]) * a[1], y = Rat(-a[0]) * a[2];
      hasse::NormSearchResult r = hasse::norm_oracle(x, y, vp, 12);
      if (r.answer == hasse::OracleAnswer::Undecided)
        throw std::runtime_error("conic density oracle: norm search undecided");
      ok = r.answer == hasse::OracleAnswer::IsNorm;
      memo.emplace(std::move(key), ok);
    }
    if (ok) density += weight;
  }
  density.canonicalize();
  return density;
}

// seeded helpers
inline long rand_long(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

inline long rand_nonzero(std::mt19937_64& rng, long bound) {
  long v = 0;
  while (v == 0) v = rand_long(rng, -bound, bound);
  return v;
}

inline hasse::Rat rand_rational(std::mt19937_64& rng, long bound) {
  hasse::Rat q(rand_nonzero(rng, bound), rand_long(rng, 1, bound));
  q.canonicalize();
  return q;
}

}  // namespace oracle
