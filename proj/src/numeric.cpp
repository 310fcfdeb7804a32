#include "hasse/numeric.hpp"

#include <algorithm>
#include <cctype>

namespace hasse {

Rat parse_rational(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  auto ok_int = [](const std::string& u) {
    if (u.empty()) return false;
    std::size_t i = (u[0] == '+' || u[0] == '-') ? 1 : 0;
    if (i == u.size()) return false;
    for (; i < u.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
    return true;
  };
  auto slash = t.find('/');
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!ok_int(num) || !ok_int(den))
    throw std::invalid_argument("bad rational literal: " + s);
  Int n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Rat q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Int& z) { return z.get_str(); }
std::string to_string(const Rat& q) { return q.get_str(); }

namespace {

bool mr_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int r) {
  a %= n;
  if (a == 0) return false;
  std::uint64_t x = powmod_u64(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < r; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return false;
  }
  return true;  // composite witness
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) d >>= 1, ++r;
  // deterministic for all n < 3.3e24, in particular all 64-bit n
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull})
    if (mr_witness(n, a, d, r)) return false;
  return true;
}

}  // namespace

bool is_prime(const Int& n) {
  if (n <= 1) return false;
  if (!n.fits_ulong_p()) throw std::invalid_argument("primality input out of scope");
  return is_prime_u64(n.get_ui());
}

Rat sqrt_rational(const Rat& x) {
  if (!is_rational_square(x)) throw std::invalid_argument("sqrt_rational: not a square");
  Int n, d;
  mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
  return Rat(n, d);
}

bool is_rational_square(const Rat& x) {
  if (sgn(x) < 0) return false;
  if (sgn(x) == 0) return true;
  return mpz_perfect_square_p(x.get_num_mpz_t()) &&
         mpz_perfect_square_p(x.get_den_mpz_t());
}

int jacobi_i64(std::int64_t a, std::uint64_t n) {
  // n odd, > 0; the symbol depends only on a mod n
  std::int64_t r = a % static_cast<std::int64_t>(n);
  if (r < 0) r += static_cast<std::int64_t>(n);
  std::uint64_t u = static_cast<std::uint64_t>(r);
  int s = 1;
  std::uint64_t m = n;
  while (u != 0) {
    while ((u & 1) == 0) {
      u >>= 1;
      if (m % 8 == 3 || m % 8 == 5) s = -s;
    }
    std::swap(u, m);
    if (u % 4 == 3 && m % 4 == 3) s = -s;
    u %= m;
  }
  return m == 1 ? s : 0;
}

std::optional<std::uint64_t> sqrt_mod_prime(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (powmod_u64(a, (p - 1) / 2, p) != 1) return std::nullopt;
  if (p % 4 == 3) return powmod_u64(a, (p + 1) / 4, p);
  // Tonelli-Shanks
  std::uint64_t q = p - 1;
  int s = 0;
  while ((q & 1) == 0) q >>= 1, ++s;
  std::uint64_t z = 2;
  while (powmod_u64(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s, c = powmod_u64(z, q, p), t = powmod_u64(a, q, p),
                r = powmod_u64(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t t2 = t;
    std::uint64_t i = 0;
    while (t2 != 1) {
      t2 = mulmod_u64(t2, t2, p);
      ++i;
      if (i == m) return std::nullopt;  // unreachable for residues
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod_u64(b, b, p);
    m = i;
    c = mulmod_u64(b, b, p);
    t = mulmod_u64(t, c, p);
    r = mulmod_u64(r, b, p);
  }
  return r;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
  while (nr != 0) {
    std::int64_t qd = r / nr;
    std::int64_t tmp = t - qd * nt;
    t = nt, nt = tmp;
    tmp = r - qd * nr;
    r = nr, nr = tmp;
  }
  if (r != 1) throw std::invalid_argument("invmod: not invertible");
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(m) : t);
}

std::vector<PrimePower> factor(const Int& n) {
  if (n == 0) throw std::invalid_argument("factor(0)");
  Int m = abs(n);
  std::vector<PrimePower> out;
  auto strip = [&](const Int& p) {
    unsigned e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      ++e;
    }
    if (e) out.push_back({p, e});
  };
  strip(2);
  strip(3);
  Int p = 5;
  // 6k+-1 wheel; in-scope inputs are products of small coefficients
  const Int budget = Int(1) << 26;
  while (p * p <= m) {
    if (p > budget) throw std::invalid_argument("factor: input beyond trial-division budget");
    strip(p);
    strip(p + 2);
    p += 6;
  }
  if (m > 1) out.push_back({m, 1});
  return out;
}

std::vector<Int> prime_divisors(const Int& n) {
  std::vector<Int> out;
  for (auto& pp : factor(n)) out.push_back(pp.p);
  return out;
}

std::vector<Int> prime_support(const Rat& q) {
  if (sgn(q) == 0) throw std::invalid_argument("prime_support(0)");
  std::vector<Int> a = prime_divisors(Int(q.get_num()));
  std::vector<Int> b = prime_divisors(Int(q.get_den()));
  std::vector<Int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace hasse
