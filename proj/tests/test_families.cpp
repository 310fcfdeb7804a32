#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include "hasse/density.hpp"
#include "hasse/families.hpp"
#include "hasse/points.hpp"
#include "oracles.hpp"

using namespace hasse;

TEST_CASE("projective point counting") {
  CHECK(count_points(1, 1) == 4);   // (1:0),(0:1),(1:1),(1:-1)
  CHECK(count_points(2, 1) == 13);
  for (int n = 1; n <= 2; ++n)
    for (long B : {1L, 2L, 3L, 5L, 10L, 25L, 50L})
      CHECK(count_points(n, B) == oracle::count_points_brute(n, B));
}

TEST_CASE("enumeration is canonical and complete") {
  auto pts = enumerate_points(1, 2);
  CHECK(pts.size() == 8);
  CHECK(static_cast<long long>(pts.size()) == count_points(1, 2));
  std::set<std::vector<long>> seen;
  for (const auto& pt : pts) {
    long g = 0;
    long first = 0;
    for (long c : pt.x) {
      g = std::__gcd(std::labs(c), g);
      if (first == 0) first = c;
    }
    CHECK(g == 1);
    CHECK(first > 0);
    CHECK(pt.height() <= 2);
    CHECK(seen.insert(pt.x).second);  // no duplicates
  }

  auto pts2 = enumerate_points(2, 7);
  CHECK(static_cast<long long>(pts2.size()) == count_points(2, 7));
}

TEST_CASE("partitions are a disjoint cover") {
  for (int nparts : {2, 3}) {
    std::set<std::vector<long>> all, parts;
    visit_points(2, 6, [&](const std::vector<long>& x) { all.insert(x); });
    size_t total = 0;
    for (int part = 0; part < nparts; ++part)
      visit_points_partition(2, 6, nparts, part, [&](const std::vector<long>& x) {
        CHECK(parts.insert(x).second);  // disjoint
        ++total;
      });
    CHECK(parts == all);
    CHECK(total == all.size());
  }
}

TEST_CASE("family plumbing") {
  Family c = Family::conics();
  CHECK(c.d == 2);
  CHECK(c.m == 3);
  CHECK(c.n() == 2);
  CHECK(c.descriptor().find("conic") != std::string::npos);
  DiagonalForm f = c.fibre({2, -3, 5});
  CHECK(f.d == 2);
  CHECK(f.a == std::vector<Int>{2, -3, 5});
  CHECK_THROWS_AS(c.fibre({2, 0, 5}), std::invalid_argument);
  REQUIRE(c.divisor_fibres().size() == 3);
  CHECK(c.divisor_fibres()[0].variables == 2);
  CHECK(c.divisor_fibres()[0].degree == 2);
}

TEST_CASE("affine fixed-point fractions") {
  for (int d = 2; d <= 8; ++d) {
    Rat got = affine_fixed_fraction(d);
    CHECK(got == oracle::affine_delta_brute(d));
  }
  CHECK(affine_fixed_fraction(2) == Rat(1, 2));
  CHECK(affine_fixed_fraction(3) == Rat(2, 3));
}

TEST_CASE("delta invariants") {
  DeltaReport r = delta_invariant(Family::conics());
  REQUIRE(r.per_divisor.size() == 3);
  for (const auto& dd : r.per_divisor) CHECK(dd.delta == Rat(1, 2));
  CHECK(r.total == Rat(3, 2));

  r = delta_invariant(Family::cubic_surfaces());
  REQUIRE(r.per_divisor.size() == 4);
  for (const auto& dd : r.per_divisor) CHECK(dd.delta == 1);
  CHECK(r.total == 0);

  r = delta_invariant(Family::diagonal(3, 3));
  REQUIRE(r.per_divisor.size() == 3);
  for (const auto& dd : r.per_divisor) CHECK(dd.delta == Rat(2, 3));
  CHECK(r.total == 1);
}

TEST_CASE("schanuel constants") {
  SchanuelConstantsQ s1 = schanuel_prediction(1);
  // 2^2 / (2 zeta(2)) = 12 / pi^2
  CHECK(std::abs(s1.coefficient - 12.0 / (M_PI * M_PI)) < 1e-12);
  CHECK(std::abs(s1.zeta - M_PI * M_PI / 6.0) < 1e-12);
  SchanuelConstantsQ s2 = schanuel_prediction(2);
  CHECK(std::abs(s2.zeta - 1.2020569031595943) < 1e-9);
  CHECK(std::abs(s2.coefficient - 8.0 / (2.0 * s2.zeta)) < 1e-12);
}

TEST_CASE("census bookkeeping at small height") {
  Family c = Family::conics();
  CensusReport r = census(c, 10);
  CHECK(r.B == 10);
  CHECK(r.N_tot == count_points(2, 10));
  CHECK(r.N_loc > 0);
  CHECK(r.N_loc < r.N_tot);
  CHECK(r.N_tot == r.degenerate + [&] {
    long long nondeg = 0;
    visit_points(2, 10, [&](const std::vector<long>& x) {
      if (x[0] != 0 && x[1] != 0 && x[2] != 0) ++nondeg;
    });
    return nondeg;
  }());
  long long fails = 0;
  for (const auto& kv : r.per_place_failures) fails += kv.second;
  // every insoluble fibre is attributed to exactly one first failing place
  long long nondeg = r.N_tot - r.degenerate;
  CHECK(nondeg - r.N_loc == fails);

  // the decided verdicts match fibre-by-fibre recomputation
  long long soluble = 0;
  visit_points(2, 10, [&](const std::vector<long>& x) {
    if (x[0] == 0 || x[1] == 0 || x[2] == 0) return;
    if (everywhere_locally_soluble(c.fibre(x)).verdict == Verdict::Soluble) ++soluble;
  });
  CHECK(soluble == r.N_loc);
}

TEST_CASE("census partitions merge to the same report") {
  Family c = Family::conics();
  auto one = census_ladder(c, {8, 12});
  auto three = census_ladder(c, {8, 12}, 3);
  REQUIRE(one.size() == 2);
  REQUIRE(three.size() == 2);
  for (size_t i = 0; i < 2; ++i) {
    CHECK(one[i].N_tot == three[i].N_tot);
    CHECK(one[i].N_loc == three[i].N_loc);
    CHECK(one[i].degenerate == three[i].degenerate);
    CHECK(one[i].per_place_failures == three[i].per_place_failures);
  }
}

TEST_CASE("cubic surface census is nearly everywhere soluble") {
  CensusReport r = census(Family::cubic_surfaces(), 6);
  CHECK(r.N_tot == count_points(3, 6));
  double ratio = r.ratio().get_d();
  CHECK(ratio > 0.7);
  CHECK(ratio <= 1.0);
  // cross-check against direct recomputation
  Family f = Family::cubic_surfaces();
  long long soluble = 0, nondeg = 0;
  visit_points(3, 6, [&](const std::vector<long>& x) {
    for (long c : x)
      if (c == 0) return;
    ++nondeg;
    if (everywhere_locally_soluble(f.fibre(x)).verdict == Verdict::Soluble) ++soluble;
  });
  CHECK(r.N_loc == soluble);
  CHECK(r.N_tot - r.degenerate == nondeg);
}

TEST_CASE("decay fit recovers a planted exponent") {
  std::vector<CensusReport> reports;
  for (long B : {100L, 200L, 400L, 800L, 1600L, 3200L}) {
    CensusReport r;
    r.B = B;
    double nloc = 0.31 * std::pow(double(B), 3.0) * std::pow(std::log(double(B)), -1.5);
    r.N_loc = static_cast<long long>(nloc);
    reports.push_back(r);
  }
  DecayFit fit = decay_exponent_fit(reports, 2);
  CHECK(fit.points == 6);
  CHECK(std::abs(fit.exponent - 1.5) < 0.02);
  CHECK(fit.residual < 0.01);
  CHECK_THROWS_AS(decay_exponent_fit({}, 2), std::invalid_argument);
}

TEST_CASE("real densities") {
  CHECK(real_density(Family::conics()).value == Rat(3, 4));
  CHECK(real_density(Family::diagonal(2, 4)).value == Rat(7, 8));
  CHECK(real_density(Family::cubic_surfaces()).value == 1);
  CHECK(real_density(Family::diagonal(3, 3)).value == 1);
}

TEST_CASE("exact local densities against the symbol-built oracle") {
  Family c = Family::conics();
  LocalDensity d3 = local_density_exhaustive(c, 3, 1);
  CHECK(d3.exact);
  CHECK(d3.value == Rat(23, 32));
  CHECK(d3.value == oracle::conic_density_brute(3));
  LocalDensity d5 = local_density_exhaustive(c, 5, 1);
  CHECK(d5.value == oracle::conic_density_brute(5));
  LocalDensity d2 = local_density_exhaustive(c, 2, 3);
  CHECK(d2.value == oracle::conic_density_brute(2));
}

TEST_CASE("sampled densities agree with exact ones") {
  Family c = Family::conics();
  LocalDensity ex = local_density_exhaustive(c, 3, 1);
  LocalDensity mc = local_density_sample(c, 3, 4000, 1, 20170417);
  CHECK(!mc.exact);
  CHECK(mc.samples == 4000);
  CHECK(std::abs(mc.estimate - ex.value.get_d()) < 1.5 * mc.half_width + 1e-12);
  // determinism
  LocalDensity mc2 = local_density_sample(c, 3, 4000, 1, 20170417);
  CHECK(mc.estimate == mc2.estimate);
  LocalDensity mc3 = local_density_sample(c, 3, 4000, 1, 99);
  CHECK(mc3.estimate != mc.estimate);  // overwhelmingly likely
}

TEST_CASE("density products") {
  CHECK_THROWS_WITH_AS(density_product(Family::conics(), 20),
                       doctest::Contains("3/2"), std::invalid_argument);
  DensityProduct dp = density_product(Family::cubic_surfaces(), 20);
  CHECK(dp.value > 0.5);
  CHECK(dp.value < 1.0);
  CHECK(dp.tail_lower > 0.9);
  CHECK(dp.tail_lower <= 1.0);
  REQUIRE(!dp.factors.empty());
  CHECK(dp.factors[0].v == Place::real());
  // factors: real + primes 2,3,5,7,11,13,17,19
  CHECK(dp.factors.size() == 9);
  CHECK(!dp.tail_note.empty());
}
