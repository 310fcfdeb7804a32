#pragma once

#include "hasse/families.hpp"

namespace hasse {

// proportion of fibres of the family soluble over Q_v
struct LocalDensity {
  Place v = Place::real();
  bool exact = true;
  Rat value;          // exact methods
  double estimate = 0.0;  // sampling method (with a 95% binomial interval)
  double half_width = 0.0;
  long samples = 0;
  std::string method;
  int level = 0;

  double as_double() const { return exact ? value.get_d() : estimate; }
};

// real place: sign-pattern measure (1 - 2^{1-m} for even d, 1 for odd d)
LocalDensity real_density(const Family& fam);

// Exact Haar proportion at p. Solubility of a diagonal fibre only depends on
// each coefficient's valuation mod d and its unit class (d-th powers; mod p
// tamely, mod p^level wildly), so the measure is a finite sum of geometric
// valuation weights times uniform unit-class weights, each class decided by
// solve_padic on a representative. `level` is the unit depth (p^level); it
// must cover the wild cases (level >= 3 at p = 2, level >= 2 at p = d).
LocalDensity local_density_exhaustive(const Family& fam, const Int& p, int level);

// Monte Carlo over Haar-random coefficients: geometric valuations, uniform
// units mod p^level; binomial 95% interval
LocalDensity local_density_sample(const Family& fam, const Int& p, long count, int level,
                                  unsigned long seed);

struct DensityProduct {
  double value = 0.0;     // c_infty * prod_{p <= bound} c_p
  double tail_lower = 1.0;  // prod_{p > bound} (1 - m/p^2) envelope
  Int prime_bound;
  std::vector<LocalDensity> factors;
  std::string tail_note;
};

// rejects families with Delta(pi) != 0 (the product degenerates to 0)
DensityProduct density_product(const Family& fam, const Int& prime_bound, int level = 3);

}  // namespace hasse
