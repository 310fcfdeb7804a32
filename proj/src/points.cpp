#include "hasse/points.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hasse {

long ProjPointQ::height() const {
  long h = 0;
  for (long c : x) h = std::max(h, c < 0 ? -c : c);
  return h;
}

std::string ProjPointQ::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < x.size(); ++i) os << (i ? ":" : "") << x[i];
  os << ")";
  return os.str();
}

namespace {

void visit_impl(int n, long B, int nparts, int part,
                const std::function<void(const std::vector<long>&)>& fn) {
  if (n < 1 || B < 1) throw std::invalid_argument("visit_points: need n >= 1, B >= 1");
  if (nparts < 1 || part < 0 || part >= nparts)
    throw std::invalid_argument("visit_points: bad partition");
  std::vector<long> x(n + 1);
  // lead = index of the first nonzero coordinate, most zeros first
  for (int lead = n; lead >= 0; --lead) {
    for (int i = 0; i < lead; ++i) x[i] = 0;
    if (lead > 0 && part != 0) continue;  // first coordinate is 0 on this stratum
    for (long v = 1; v <= B; ++v) {
      if (lead == 0 && v % nparts != part) continue;
      x[lead] = v;
      // odometer over x[lead+1..n] in [-B,B], keep gcd-1 tuples
      for (int i = lead + 1; i <= n; ++i) x[i] = -B;
      while (true) {
        long g = v;
        for (int i = lead + 1; i <= n && g != 1; ++i) g = std::gcd(g, x[i]);
        if (g == 1) fn(x);
        int i = n;
        while (i > lead && x[i] == B) {
          x[i] = -B;
          --i;
        }
        if (i == lead) break;
        ++x[i];
      }
    }
  }
}

}  // namespace

void visit_points(int n, long B, const std::function<void(const std::vector<long>&)>& fn) {
  visit_impl(n, B, 1, 0, fn);
}

void visit_points_partition(int n, long B, int nparts, int part,
                            const std::function<void(const std::vector<long>&)>& fn) {
  visit_impl(n, B, nparts, part, fn);
}

std::vector<ProjPointQ> enumerate_points(int n, long B) {
  std::vector<ProjPointQ> out;
  visit_points(n, B, [&](const std::vector<long>& x) { out.push_back({x}); });
  return out;
}

long long count_points(int n, long B) {
  if (n < 1 || B < 1) throw std::invalid_argument("count_points: need n >= 1, B >= 1");
  // mu via smallest-prime-factor sieve
  std::vector<long> spf(B + 1, 0);
  std::vector<int> mu(B + 1, 0);
  mu[1] = 1;
  for (long i = 2; i <= B; ++i) {
    if (spf[i] == 0)
      for (long j = i; j <= B; j += i)
        if (spf[j] == 0) spf[j] = i;
    long p = spf[i], q = i / p;
    mu[i] = (q % p == 0) ? 0 : -mu[q];
  }
  __int128 total = 0;
  for (long k = 1; k <= B; ++k) {
    if (mu[k] == 0) continue;
    long long side = 2 * (B / k) + 1;
    __int128 pw = 1;
    for (int i = 0; i <= n; ++i) {
      pw *= side;
      if (pw > (__int128)4 * 1000000000000000000LL)
        throw std::overflow_error("count_points: count exceeds 64 bits");
    }
    total += mu[k] * (pw - 1);
  }
  return static_cast<long long>(total / 2);
}

}  // namespace hasse
