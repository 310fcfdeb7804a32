#include "hasse/families.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace hasse {

Family Family::diagonal(int d, int m) {
  if (d < 2 || m < 2) throw std::invalid_argument("Family: need d >= 2, m >= 2");
  Family f;
  f.d = d;
  f.m = m;
  return f;
}

std::vector<FiberDescriptor> Family::divisor_fibres() const {
  return std::vector<FiberDescriptor>(static_cast<size_t>(m), FiberDescriptor{m - 1, d});
}

DiagonalForm Family::fibre(const std::vector<long>& a) const {
  if (static_cast<int>(a.size()) != m)
    throw std::invalid_argument("Family::fibre: wrong coefficient count");
  std::vector<Int> c;
  c.reserve(a.size());
  for (long v : a) c.emplace_back(v);
  return DiagonalForm::make(d, c);
}

std::string Family::descriptor() const {
  std::ostringstream os;
  if (d == 2 && m == 3)
    os << "conics: ";
  else if (d == 3 && m == 4)
    os << "cubic surfaces: ";
  os << "diagonal d=" << d << " in " << m << " variables";
  return os.str();
}

Rat affine_fixed_fraction(int d) {
  if (d < 2) throw std::invalid_argument("affine_fixed_fraction: d < 2");
  long total = 0, with_fixed = 0;
  for (int s = 1; s < d; ++s) {
    if (std::gcd(s, d) != 1) continue;
    for (int t = 0; t < d; ++t) {
      ++total;
      for (int j = 0; j < d; ++j)
        if ((s * j + t) % d == j) {
          ++with_fixed;
          break;
        }
    }
  }
  Rat r(with_fixed, total);
  r.canonicalize();
  return r;
}

DeltaReport delta_invariant(const Family& fam) {
  DeltaReport rep;
  rep.total = 0;
  std::vector<FiberDescriptor> fibres = fam.divisor_fibres();
  for (int i = 0; i < fam.m; ++i) {
    if (fibres[i].variables < 2)
      throw std::invalid_argument("delta_invariant: divisor fibre has < 2 variables");
    // >= 3 variables: irreducible cone, split, delta = 1; exactly 2: d lines
    // permuted by the affine Kummer-cyclotomic action
    Rat delta = fibres[i].variables >= 3 ? Rat(1) : affine_fixed_fraction(fam.d);
    rep.per_divisor.push_back({i, delta});
    rep.total += Rat(1) - delta;
  }
  return rep;
}

namespace {

// Borwein's alternating-series acceleration for eta(s), s >= 2;
// zeta = eta / (1 - 2^{1-s}); error ~ (3+sqrt(8))^{-N}
double zeta_int(int s) {
  const int N = 40;
  std::vector<double> dk(N + 1);
  double acc = 1.0, term = 1.0;
  dk[0] = 1.0;
  for (int i = 1; i <= N; ++i) {
    term *= 2.0 * (N + i - 1) * (N - i + 1) / ((2.0 * i - 1) * i);
    acc += term;
    dk[i] = acc;
  }
  double dn = dk[N], eta = 0.0;
  for (int k = 0; k < N; ++k) {
    double t = (dn - dk[k]) / std::pow(static_cast<double>(k + 1), s);
    eta += (k % 2 == 0) ? t : -t;
  }
  eta /= dn;
  return eta / (1.0 - std::pow(2.0, 1 - s));
}

}  // namespace

SchanuelConstantsQ schanuel_prediction(int n) {
  if (n < 1) throw std::invalid_argument("schanuel_prediction: n < 1");
  double z = zeta_int(n + 1);
  return {n, z, std::pow(2.0, n + 1) / (2.0 * z)};
}

Rat CensusReport::ratio() const {
  if (N_tot == 0) return Rat(0);
  Rat r(Int(static_cast<long>(N_loc)), Int(static_cast<long>(N_tot)));
  r.canonicalize();
  return r;
}

DecayFit decay_exponent_fit(const std::vector<CensusReport>& reports, int n) {
  if (reports.size() < 4)
    throw std::invalid_argument("decay_exponent_fit: need at least 4 reports");
  for (size_t i = 1; i < reports.size(); ++i)
    if (reports[i].B <= reports[i - 1].B)
      throw std::invalid_argument("decay_exponent_fit: B values must increase");
  double su = 0, sy = 0, suu = 0, suy = 0;
  const int N = static_cast<int>(reports.size());
  std::vector<double> us(N), ys(N);
  for (int i = 0; i < N; ++i) {
    const CensusReport& r = reports[i];
    if (r.B < 3 || r.N_loc <= 0)
      throw std::invalid_argument("decay_exponent_fit: need B >= 3 and N_loc > 0");
    us[i] = std::log(std::log(static_cast<double>(r.B)));
    ys[i] = std::log(static_cast<double>(r.N_loc)) -
            (n + 1) * std::log(static_cast<double>(r.B));
    su += us[i];
    sy += ys[i];
    suu += us[i] * us[i];
    suy += us[i] * ys[i];
  }
  double det = N * suu - su * su;
  if (std::abs(det) < 1e-12)
    throw std::invalid_argument("decay_exponent_fit: degenerate abscissae");
  double slope = (N * suy - su * sy) / det;
  double c0 = (sy - slope * su) / N;
  double rss = 0;
  for (int i = 0; i < N; ++i) {
    double e = ys[i] - (c0 + slope * us[i]);
    rss += e * e;
  }
  return {-slope, std::sqrt(rss / N), N};
}

}  // namespace hasse
