#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hasse {

using Int = mpz_class;
using Rat = mpq_class;  // canonical: gcd(num,den)=1, den>0 (maintained by GMP)

// "17/4", "-3", "+0" -> rational. Throws std::invalid_argument on junk or
// zero denominator.
Rat parse_rational(const std::string& s);

std::string to_string(const Int& z);
std::string to_string(const Rat& q);

// Deterministic primality (trial division for small n, fixed-base
// Miller-Rabin certificate set covering all 64-bit inputs; larger inputs
// are rejected as out of scope rather than answered probabilistically).
bool is_prime(const Int& n);

// x == y^2 for some rational y (sign and exact integer sqrt of num/den).
bool is_rational_square(const Rat& x);
Rat sqrt_rational(const Rat& x);  // exact; throws if x is not a square

// ---- fixed-width helpers (census/bfs hot paths) ---------------------------

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = m > 1 ? 1 % m : 0;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, b, m);
    b = mulmod_u64(b, b, m);
    e >>= 1;
  }
  return r;
}

// Jacobi symbol (a|n) for odd n>0; binary algorithm, no factoring.
int jacobi_i64(std::int64_t a, std::uint64_t n);

// sqrt of a mod odd prime p when it exists (Tonelli-Shanks); nullopt if a is
// a non-residue. a reduced mod p; p must be an odd prime < 2^62.
std::optional<std::uint64_t> sqrt_mod_prime(std::uint64_t a, std::uint64_t p);

// Extended gcd based inverse; m > 1, gcd(a, m) = 1 required.
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m);

// ---- small factoring (coefficients, heights) -------------------------------

struct PrimePower {
  Int p;
  unsigned e;
};

// Full factorization by trial division (inputs in scope are small); throws
// if |n| exceeds the trial-division budget. n != 0.
std::vector<PrimePower> factor(const Int& n);

// Distinct primes dividing n (n != 0), ascending.
std::vector<Int> prime_divisors(const Int& n);

// Primes dividing numerator or denominator, ascending.
std::vector<Int> prime_support(const Rat& q);

}  // namespace hasse
