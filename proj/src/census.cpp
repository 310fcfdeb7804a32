#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

#include "hasse/families.hpp"
#include "hasse/padic.hpp"
#include "hasse/points.hpp"

namespace hasse {

namespace {

// --- factor tables up to B ---------------------------------------------------

struct FactorEntry {
  int32_t p;
  uint8_t e;
  int32_t cof;  // (n / p^e) mod p
};

struct SmallFactors {
  uint8_t k = 0;
  FactorEntry f[5];
};

struct SieveTables {
  long B;
  std::vector<uint8_t> v2;
  std::vector<int32_t> odd8;  // odd part mod 8
  std::vector<SmallFactors> fac;
  std::vector<int32_t> primes;  // odd primes <= B
  std::vector<int32_t> pidx;    // prime value -> index
  std::vector<uint64_t> qrbits;
  std::vector<uint32_t> qroff;
  std::vector<uint8_t> p3;  // p ≡ 3 mod 4

  explicit SieveTables(long bound) : B(bound) {
    if (B < 1 || B > 15000) throw std::invalid_argument("census tables: B out of range");
    std::vector<int32_t> spf(B + 1, 0);
    for (long i = 2; i <= B; ++i)
      if (spf[i] == 0)
        for (long j = i; j <= B; j += i)
          if (spf[j] == 0) spf[j] = static_cast<int32_t>(i);
    v2.assign(B + 1, 0);
    odd8.assign(B + 1, 0);
    fac.assign(B + 1, SmallFactors{});
    pidx.assign(B + 1, -1);
    for (long n = 1; n <= B; ++n) {
      long m = n;
      uint8_t t = 0;
      while (m % 2 == 0) {
        m /= 2;
        ++t;
      }
      v2[n] = t;
      odd8[n] = static_cast<int32_t>(m % 8);
      SmallFactors& L = fac[n];
      while (m > 1) {
        long p = spf[m];
        uint8_t e = 0;
        long pe = 1;
        while (m % p == 0) {
          m /= p;
          pe *= p;
          ++e;
        }
        L.f[L.k++] = {static_cast<int32_t>(p), e, static_cast<int32_t>((n / pe) % p)};
      }
    }
    for (long p = 3; p <= B; p += 2)
      if (spf[p] == p) {
        pidx[p] = static_cast<int32_t>(primes.size());
        primes.push_back(static_cast<int32_t>(p));
      }
    qroff.resize(primes.size());
    p3.resize(primes.size());
    uint32_t off = 0;
    for (size_t i = 0; i < primes.size(); ++i) {
      qroff[i] = off;
      off += static_cast<uint32_t>((primes[i] + 63) / 64);
      p3[i] = primes[i] % 4 == 3;
    }
    qrbits.assign(off, 0);
    for (size_t i = 0; i < primes.size(); ++i) {
      long p = primes[i];
      for (long x = 1; x <= (p - 1) / 2; ++x) {
        long r = (x * x) % p;
        qrbits[qroff[i] + (r >> 6)] |= 1ull << (r & 63);
      }
    }
  }

  bool qr(size_t pi, long r) const {
    return (qrbits[qroff[pi] + (r >> 6)] >> (r & 63)) & 1u;
  }
};

// cofactor mod p: n = p^e * c with the list entry when p | n, else n mod p
struct ValAt {
  int v = 0;
  long cof = 0;
};

ValAt val_at(const SieveTables& T, long n, long p) {
  const SmallFactors& L = T.fac[n];
  for (int i = 0; i < L.k; ++i)
    if (L.f[i].p == p) return {L.f[i].e, L.f[i].cof};
  return {0, n % p};
}

// --- first-failure buckets, indexed by fibre height --------------------------

struct Buckets {
  long B;
  std::vector<int64_t> nondeg, soluble, fail_real, fail_two;
  std::vector<std::vector<int64_t>> fail_odd;  // [odd prime index][height]
  Buckets(long bound, size_t nprimes)
      : B(bound),
        nondeg(bound + 1, 0),
        soluble(bound + 1, 0),
        fail_real(bound + 1, 0),
        fail_two(bound + 1, 0),
        fail_odd(nprimes, std::vector<int64_t>(bound + 1, 0)) {}
};

constexpr uint8_t kEps[8] = {0, 0, 0, 1, 0, 0, 0, 1};  // u ≡ 3 mod 4
constexpr uint8_t kOm[8] = {0, 0, 0, 1, 0, 1, 0, 0};   // u ≡ ±3 mod 8

// --- conic fast path ----------------------------------------------------------
// Soluble  <=>  hilbert(-a0 a1, -a0 a2)_v = 0 at every place.  By the product
// formula the largest odd bad prime's bit is the xor of all the others, so it
// is never computed: all computed bits zero => soluble; otherwise the first
// nonzero bit in place order (real, 2, odd ascending) is the attribution, and
// the skipped prime can never be first.
struct OddPrimeData {
  int32_t p;
  int32_t pi;
  uint8_t alpha, beta;  // valuation parities of -a0a1, -a0a2 at p
  uint8_t lax, lay;     // nonresidue bits of |a0a1|, |a0a2| unit parts
  uint8_t p3;
  uint8_t active;  // alpha or beta nonzero
};

void conic_pass(const SieveTables& T, long Bmax, int nparts, int part, Buckets& bk) {
  std::vector<OddPrimeData> merged(16);
  for (long a0 = 1; a0 <= Bmax; ++a0) {
    if (a0 % nparts != part) continue;
    const SmallFactors& F0 = T.fac[a0];
    for (long a1 = 1; a1 <= Bmax; ++a1) {
      const SmallFactors& F1 = T.fac[a1];
      long g01 = std::gcd(a0, a1);
      long h01 = std::max(a0, a1);
      int v2x = T.v2[a0] + T.v2[a1];
      int ux8a = (T.odd8[a0] * T.odd8[a1]) & 7;  // odd part of |a0 a1| mod 8
      for (long a2 = a1; a2 <= Bmax; ++a2) {
        if (g01 > 1 && std::gcd(g01, a2) > 1) continue;
        const SmallFactors& F2 = T.fac[a2];
        long h = std::max(h01, a2);
        int64_t mult = a2 == a1 ? 1 : 2;  // (a1, a2) swap symmetry

        // merge the three factor lists; largest prime is dropped below
        int nm = 0;
        {
          int i0 = 0, i1 = 0, i2 = 0;
          while (i0 < F0.k || i1 < F1.k || i2 < F2.k) {
            long p = LONG_MAX;
            if (i0 < F0.k) p = std::min(p, (long)F0.f[i0].p);
            if (i1 < F1.k) p = std::min(p, (long)F1.f[i1].p);
            if (i2 < F2.k) p = std::min(p, (long)F2.f[i2].p);
            int v0 = 0, v1 = 0, v2 = 0;
            long c0 = 0, c1 = 0, c2 = 0;
            bool d0 = i0 < F0.k && F0.f[i0].p == p;
            bool d1 = i1 < F1.k && F1.f[i1].p == p;
            bool d2 = i2 < F2.k && F2.f[i2].p == p;
            if (d0) {
              v0 = F0.f[i0].e;
              c0 = F0.f[i0].cof;
              ++i0;
            }
            if (d1) {
              v1 = F1.f[i1].e;
              c1 = F1.f[i1].cof;
              ++i1;
            }
            if (d2) {
              v2 = F2.f[i2].e;
              c2 = F2.f[i2].cof;
              ++i2;
            }
            OddPrimeData& D = merged[nm++];
            D.p = static_cast<int32_t>(p);
            D.alpha = (v0 + v1) & 1;
            D.beta = (v0 + v2) & 1;
            D.active = D.alpha | D.beta;
            if (!D.active) continue;
            D.pi = T.pidx[p];
            D.p3 = T.p3[D.pi];
            if (!d0) c0 = a0 % p;
            if (!d1) c1 = a1 % p;
            if (!d2) c2 = a2 % p;
            D.lax = !T.qr(D.pi, (c0 * c1) % p);
            D.lay = !T.qr(D.pi, (c0 * c2) % p);
          }
        }
        int v2y = T.v2[a0] + T.v2[a2];
        int uy8a = (T.odd8[a0] * T.odd8[a2]) & 7;
        uint8_t a2bit = v2x & 1, b2bit = v2y & 1;

        for (int s1 = 0; s1 < 2; ++s1)
          for (int s2 = 0; s2 < 2; ++s2) {
            // s = 0 means the coefficient is positive
            bk.nondeg[h] += mult;
            if (s1 == 0 && s2 == 0) {
              bk.fail_real[h] += mult;  // all three positive: empty over R
              continue;
            }
            // 2-adic bit: x = -a0*(±a1) has unit -(odd parts) when +
            int ux8 = s1 == 0 ? (8 - ux8a) & 7 : ux8a;
            int uy8 = s2 == 0 ? (8 - uy8a) & 7 : uy8a;
            uint8_t bit2 = static_cast<uint8_t>((kEps[ux8] & kEps[uy8]) ^
                                                (a2bit & kOm[uy8]) ^ (b2bit & kOm[ux8]));
            if (bit2) {
              bk.fail_two[h] += mult;
              continue;
            }
            int failed_pi = -1;
            for (int i = 0; i + 1 < nm; ++i) {  // last entry = skipped largest
              const OddPrimeData& D = merged[i];
              if (!D.active) continue;
              uint8_t lx = s1 == 0 ? D.lax ^ D.p3 : D.lax;
              uint8_t ly = s2 == 0 ? D.lay ^ D.p3 : D.lay;
              uint8_t bit = static_cast<uint8_t>((D.alpha & D.beta & D.p3) ^ (D.beta & lx) ^
                                                 (D.alpha & ly));
              if (bit) {
                failed_pi = D.pi;
                break;
              }
            }
            if (failed_pi >= 0)
              bk.fail_odd[failed_pi][h] += mult;
            else
              bk.soluble[h] += mult;
          }
      }
    }
  }
}

// --- generic diagonal path ----------------------------------------------------
// For odd d the fibre is invariant under coefficient sign flips (absorb into
// x_i -> -x_i) and permutations, so enumeration runs over multisets of
// absolute values; each class is decided once per prime through a
// (valuation mod d, unit d-th power class) key.

struct PrimeClassCtx {
  long p;
  long g;       // gcd(d, p-1) for tame p
  long e;       // (p-1)/g
  bool wild;    // p | d
  long wildmod; // p^{2 v_p(d) + 1}
  std::unordered_map<long, int> class_idx;
  std::unordered_map<uint64_t, bool> verdicts;
};

class GenericDecider {
 public:
  GenericDecider(const Family& fam, const SieveTables& T) : fam_(fam), T_(T) {}

  // soluble over Q_p? coefficients are the positive multiset values
  bool soluble_at(const std::vector<long>& vals, long p) {
    PrimeClassCtx& C = ctx(p);
    uint64_t key = 0;
    std::vector<uint8_t> parts;
    parts.reserve(vals.size());
    for (long n : vals) {
      ValAt va = p == 2 ? ValAt{T_.v2[n], T_.odd8[n]} : val_at(T_, n, p);
      int cls;
      if (C.wild) {
        long u = (n / ipow(p, va.v)) % C.wildmod;
        cls = idx_of(C, u);
      } else {
        long u = va.cof % p;
        long img = powmod_u64(static_cast<unsigned long>(u), static_cast<unsigned long>(C.e),
                              static_cast<unsigned long>(p));
        cls = idx_of(C, static_cast<long>(img));
      }
      parts.push_back(static_cast<uint8_t>(((va.v % fam_.d) << 5) | cls));
    }
    std::sort(parts.begin(), parts.end());
    for (uint8_t b : parts) key = (key << 8) | b;
    auto it = C.verdicts.find(key);
    if (it != C.verdicts.end()) return it->second;
    std::vector<Int> coeffs(vals.begin(), vals.end());
    DiagonalForm f = DiagonalForm::make(fam_.d, coeffs);
    SolubilityResult r = solve_padic(f, p, default_level(f, Int(p)));
    if (r.verdict == Verdict::Undecided)
      throw std::runtime_error("census: undecided fibre at p=" + std::to_string(p) + " for " +
                               f.str());
    bool ok = r.verdict == Verdict::Soluble;
    C.verdicts.emplace(key, ok);
    return ok;
  }

 private:
  static long ipow(long b, int e) {
    long r = 1;
    while (e--) r *= b;
    return r;
  }
  static int idx_of(PrimeClassCtx& C, long v) {
    auto it = C.class_idx.find(v);
    if (it != C.class_idx.end()) return it->second;
    int i = static_cast<int>(C.class_idx.size());
    if (i > 30) throw std::logic_error("census: class index overflow");
    C.class_idx.emplace(v, i);
    return i;
  }
  PrimeClassCtx& ctx(long p) {
    auto it = ctxs_.find(p);
    if (it != ctxs_.end()) return it->second;
    PrimeClassCtx C;
    C.p = p;
    C.wild = fam_.d % p == 0;
    if (C.wild) {
      int vp = 0;
      long dd = fam_.d;
      while (dd % p == 0) {
        dd /= p;
        ++vp;
      }
      C.wildmod = ipow(p, 2 * vp + 1);
      C.g = C.e = 0;
    } else {
      C.g = std::gcd(static_cast<long>(fam_.d), p - 1);
      C.e = (p - 1) / C.g;
      C.wildmod = 0;
    }
    return ctxs_.emplace(p, std::move(C)).first->second;
  }
  const Family& fam_;
  const SieveTables& T_;
  std::map<long, PrimeClassCtx> ctxs_;
};

void generic_odd_pass(const Family& fam, const SieveTables& T, long Bmax, int nparts, int part,
                      Buckets& bk, GenericDecider& dec) {
  const int m = fam.m;
  std::vector<long> vals(m);
  std::vector<long> dprimes = [&] {
    std::vector<long> ps;
    long dd = fam.d;
    for (long p = 2; p * p <= dd; ++p)
      while (dd % p == 0) {
        if (ps.empty() || ps.back() != p) ps.push_back(p);
        dd /= p;
      }
    if (dd > 1) ps.push_back(dd);
    return ps;
  }();

  // recursive nondecreasing multiset walk
  std::function<void(int, long)> walk = [&](int i, long lo) {
    if (i == m) {
      long g = vals[0];
      for (int j = 1; j < m && g != 1; ++j) g = std::gcd(g, vals[j]);
      if (g != 1) return;
      long h = vals[m - 1];
      // orbit size: permutations of the multiset, times sign choices with the
      // leading coordinate positive
      int64_t perms = 1;
      for (int j = 2; j <= m; ++j) perms *= j;
      {
        int j = 0;
        while (j < m) {
          int k = j;
          while (k < m && vals[k] == vals[j]) ++k;
          int64_t mf = 1;
          for (int t = 2; t <= k - j; ++t) mf *= t;
          perms /= mf;
          j = k;
        }
      }
      int64_t orbit = perms << (m - 1);
      // partition weight: members whose first coordinate is ≡ part (mod nparts)
      int64_t mult;
      if (nparts == 1) {
        mult = orbit;
      } else {
        int64_t hits = 0;
        int j = 0;
        while (j < m) {
          int k = j;
          while (k < m && vals[k] == vals[j]) ++k;
          if (vals[j] % nparts == part) hits += k - j;
          j = k;
        }
        mult = (perms * hits / m) << (m - 1);
      }
      if (mult == 0) return;
      bk.nondeg[h] += mult;
      // bad places: 2 and odd p dividing d * prod(vals); real is soluble (d odd)
      std::vector<long> bad = dprimes;
      for (int j = 0; j < m; ++j) {
        const SmallFactors& L = T.fac[vals[j]];
        if (T.v2[vals[j]] > 0) bad.push_back(2);
        for (int t = 0; t < L.k; ++t) bad.push_back(L.f[t].p);
      }
      std::sort(bad.begin(), bad.end());
      bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
      long failed = 0;
      for (long p : bad)
        if (!dec.soluble_at(vals, p)) {
          failed = p;
          break;
        }
      if (failed == 0) {
        bk.soluble[h] += mult;
      } else if (failed == 2) {
        bk.fail_two[h] += mult;
      } else {
        bk.fail_odd[T.pidx[failed]][h] += mult;
      }
      return;
    }
    for (long v = lo; v <= Bmax; ++v) {
      vals[i] = v;
      walk(i + 1, v);
    }
  };
  walk(0, 1);
}

// slow but fully general: signed odometer with per-fibre decisions (small B)
void generic_even_pass(const Family& fam, const SieveTables& T, long Bmax, int nparts, int part,
                       Buckets& bk) {
  const int m = fam.m;
  std::map<std::vector<long>, std::pair<bool, long>> memo;  // sorted key -> (soluble, fail place)
  std::vector<long> a(m);
  std::function<void(int)> walk = [&](int i) {
    if (i == m) {
      long g = 0;
      for (long c : a) g = std::gcd(g, c < 0 ? -c : c);
      if (g != 1) return;
      long h = 0;
      for (long c : a) h = std::max(h, c < 0 ? -c : c);
      bk.nondeg[h] += 1;
      std::vector<long> key(a);
      std::sort(key.begin(), key.end());
      auto it = memo.find(key);
      std::pair<bool, long> dec;
      if (it != memo.end()) {
        dec = it->second;
      } else {
        std::vector<Int> coeffs(a.begin(), a.end());
        DiagonalForm f = DiagonalForm::make(fam.d, coeffs);
        EverywhereReport rep = everywhere_locally_soluble(f);
        if (rep.verdict == Verdict::Undecided)
          throw std::runtime_error("census: undecided fibre " + f.str());
        dec = {rep.verdict == Verdict::Soluble, 0};
        if (!dec.first)
          for (const PlaceVerdict& pv : rep.places) {
            if (pv.r.verdict == Verdict::Undecided)
              throw std::runtime_error("census: undecided fibre " + f.str() + " at " +
                                       pv.v.str());
            if (pv.r.verdict == Verdict::Insoluble) {
              dec.second = pv.v.is_real() ? -1 : pv.v.prime().get_si();
              break;
            }
          }
        memo.emplace(std::move(key), dec);
      }
      if (dec.first)
        bk.soluble[h] += 1;
      else if (dec.second == -1)
        bk.fail_real[h] += 1;
      else if (dec.second == 2)
        bk.fail_two[h] += 1;
      else
        bk.fail_odd[T.pidx[dec.second]][h] += 1;
      return;
    }
    long lo = i == 0 ? 1 : -Bmax;
    for (long v = lo; v <= Bmax; ++v) {
      if (v == 0) continue;
      if (i == 0 && v % nparts != part) continue;
      a[i] = v;
      walk(i + 1);
    }
  };
  walk(0);
}

long long degenerate_count(int m, long B) {
  // inclusion-exclusion over coordinate hyperplanes: points of P^{n-j}
  long long total = 0;
  long long binom = 1;
  for (int j = 1; j <= m - 1; ++j) {
    binom = binom * (m - j + 1) / j;
    long long nj = (m - 1 - j) >= 1 ? count_points(m - 1 - j, B) : 1;
    total += (j % 2 == 1 ? 1 : -1) * binom * nj;
  }
  return total;
}

}  // namespace

std::vector<CensusReport> census_ladder(const Family& fam, std::vector<long> Bs, int nparts) {
  if (Bs.empty()) throw std::invalid_argument("census: no B values");
  if (nparts < 1) throw std::invalid_argument("census: nparts < 1");
  std::sort(Bs.begin(), Bs.end());
  long Bmax = Bs.back();
  if (Bs.front() < 1) throw std::invalid_argument("census: B < 1");

  SieveTables T(Bmax);
  Buckets bk(Bmax, T.primes.size());
  if (fam.d == 2 && fam.m == 3) {
    for (int part = 0; part < nparts; ++part) conic_pass(T, Bmax, nparts, part, bk);
  } else if (fam.d % 2 == 1) {
    GenericDecider dec(fam, T);
    for (int part = 0; part < nparts; ++part)
      generic_odd_pass(fam, T, Bmax, nparts, part, bk, dec);
  } else {
    if (Bmax > 40) throw std::invalid_argument("census: even-degree generic path needs B <= 40");
    for (int part = 0; part < nparts; ++part) generic_even_pass(fam, T, Bmax, nparts, part, bk);
  }

  std::vector<CensusReport> out;
  for (long B : Bs) {
    CensusReport rep;
    rep.family = fam.descriptor();
    rep.B = B;
    rep.N_tot = count_points(fam.m - 1, B);
    rep.degenerate = degenerate_count(fam.m, B);
    int64_t loc = 0, nondeg = 0, freal = 0, f2 = 0;
    for (long h = 1; h <= B; ++h) {
      loc += bk.soluble[h];
      nondeg += bk.nondeg[h];
      freal += bk.fail_real[h];
      f2 += bk.fail_two[h];
    }
    rep.N_loc = loc;
    rep.work_units = nondeg;
    if (nondeg + rep.degenerate != rep.N_tot)
      throw std::logic_error("census: enumeration does not match the point count");
    if (freal) rep.per_place_failures["real"] = freal;
    if (f2) rep.per_place_failures["2"] = f2;
    for (size_t i = 0; i < T.primes.size(); ++i) {
      int64_t c = 0;
      for (long h = 1; h <= B; ++h) c += bk.fail_odd[i][h];
      if (c) rep.per_place_failures[std::to_string(T.primes[i])] = c;
    }
    out.push_back(std::move(rep));
  }
  return out;
}

CensusReport census(const Family& fam, long B, int nparts) {
  return census_ladder(fam, {B}, nparts).front();
}

}  // namespace hasse
