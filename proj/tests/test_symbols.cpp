#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hasse/padic.hpp"
#include "hasse/symbols.hpp"
#include "oracles.hpp"

using namespace hasse;

TEST_CASE("qmodz arithmetic") {
  CHECK(QmodZ::zero() + QmodZ::zero() == QmodZ::zero());
  CHECK(QmodZ::zero() + QmodZ::half() == QmodZ::half());
  CHECK(QmodZ::half() + QmodZ::half() == QmodZ::zero());
  CHECK(QmodZ::half().str() == "1/2");
  CHECK(QmodZ::zero().str() == "0");
}

TEST_CASE("pinned symbol values") {
  Place r = Place::real(), two = Place::finite(2), p17 = Place::finite(17);
  CHECK(hilbert_symbol(-1, -1, r) == QmodZ::half());
  CHECK(hilbert_symbol(-1, 2, r) == QmodZ::zero());
  CHECK(hilbert_symbol(-1, -1, two) == QmodZ::half());
  CHECK(hilbert_symbol(2, 3, two) == QmodZ::half());
  CHECK(hilbert_symbol(-1, -1, Place::finite(3)) == QmodZ::zero());
  // 3 is not a norm from Q_17(sqrt 17): 3 is a non-residue mod 17
  CHECK(hilbert_symbol(17, 3, p17) == QmodZ::half());
  CHECK(hilbert_symbol(17, 13, p17) == QmodZ::zero());  // 13 = 8^2 mod 17
  CHECK(hilbert_symbol(1, 5, Place::finite(5)) == QmodZ::zero());
}

TEST_CASE("agreement with the norm search oracle") {
  std::vector<long> vals = {1, -1, 2, -2, 3, -3, 5, -5};
  std::vector<Place> places = {Place::real(), Place::finite(2), Place::finite(3),
                               Place::finite(5), Place::finite(17)};
  for (long a : vals)
    for (long b : vals)
      for (const Place& v : places) {
        QmodZ inv = hilbert_symbol(a, b, v);
        NormSearchResult ans = norm_oracle(a, b, v, 10);
        REQUIRE(ans.answer != OracleAnswer::Undecided);
        CHECK((inv == QmodZ::zero()) == (ans.answer == OracleAnswer::IsNorm));
      }
}

TEST_CASE("symmetry, square insensitivity, slotwise additivity") {
  std::mt19937_64 rng(421);
  std::vector<Place> places = {Place::real(), Place::finite(2), Place::finite(3),
                               Place::finite(7)};
  for (int i = 0; i < 60; ++i) {
    Rat a = oracle::rand_rational(rng, 60);
    Rat b = oracle::rand_rational(rng, 60);
    Rat b2 = oracle::rand_rational(rng, 60);
    Rat c = oracle::rand_rational(rng, 12);
    for (const Place& v : places) {
      CHECK(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
      CHECK(hilbert_symbol(a, b * c * c, v) == hilbert_symbol(a, b, v));
      CHECK(hilbert_symbol(a, b * b2, v) ==
            hilbert_symbol(a, b, v) + hilbert_symbol(a, b2, v));
    }
  }
}

TEST_CASE("product formula on seeded pairs") {
  std::mt19937_64 rng(1105);
  for (int i = 0; i < 200; ++i) {
    Rat a = oracle::rand_rational(rng, 500);
    Rat b = oracle::rand_rational(rng, 500);
    CHECK(invariant_sum(a, b) == QmodZ::zero());
  }
}

TEST_CASE("support") {
  std::vector<Place> sup = invariant_support(-1, -1);
  REQUIRE(sup.size() == 2);
  CHECK(sup[0] == Place::real());
  CHECK(sup[1] == Place::finite(2));
  CHECK(invariant_support(1, 5).empty());
}

TEST_CASE("reciprocity derived from the product formula") {
  std::vector<long> odd = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (size_t i = 0; i < odd.size(); ++i)
    for (size_t j = i + 1; j < odd.size(); ++j) CHECK(reciprocity_check(odd[i], odd[j]));
}

TEST_CASE("symbols from approximate arguments") {
  Int two(2), p5(5);
  // enough precision: matches the exact symbol
  PadicApprox b5 = PadicApprox::exact(Rat(10), p5, 1);
  auto r = hilbert_symbol_approx(Rat(2), b5);
  REQUIRE(r.has_value());
  CHECK(*r == hilbert_symbol(2, 10, Place::finite(5)));

  PadicApprox b2 = PadicApprox::exact(Rat(3), two, 3);
  r = hilbert_symbol_approx(Rat(2), b2);
  REQUIRE(r.has_value());
  CHECK(*r == hilbert_symbol(2, 3, Place::finite(2)));

  // a unit known only mod 2^2 cannot settle the mod-8 class
  PadicApprox shallow = PadicApprox::exact(Rat(3), two, 2);
  CHECK(!hilbert_symbol_approx(Rat(2), shallow).has_value());
}
