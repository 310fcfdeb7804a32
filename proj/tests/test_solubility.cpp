#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hasse/solubility.hpp"
#include "oracles.hpp"

using namespace hasse;

static Int ipow(Int b, int e) {
  Int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// f(witness) must vanish mod p^witness_level and the witness must be
// primitive (some coordinate a p-adic unit).
static void check_witness(const DiagonalForm& f, const SolubilityResult& r, const Int& p) {
  REQUIRE(r.verdict == Verdict::Soluble);
  REQUIRE(static_cast<int>(r.witness.size()) == f.m());
  REQUIRE(r.witness_level >= 1);
  Int mod = ipow(p, r.witness_level);
  CHECK(f.equation().eval_mod(r.witness, mod) == 0);
  bool unit = false;
  for (const Int& w : r.witness)
    if (w % p != 0) unit = true;
  CHECK(unit);
}

TEST_CASE("construction") {
  DiagonalForm f = DiagonalForm::make(2, {Int(2), Int(4), Int(6)});
  CHECK(f.a == std::vector<Int>{1, 2, 3});
  CHECK(f.coeff_product() == 6);
  CHECK(f.m() == 3);
  CHECK_THROWS_AS(DiagonalForm::make(2, {Int(1), Int(0)}), std::invalid_argument);
  CHECK_THROWS_AS(DiagonalForm::make(0, {Int(1), Int(1)}), std::invalid_argument);
}

TEST_CASE("real place") {
  auto q = [](std::vector<Int> a) { return DiagonalForm::make(2, std::move(a)); };
  CHECK(solve_real(q({1, 1, 1})).verdict == Verdict::Insoluble);
  CHECK(solve_real(q({-2, -3})).verdict == Verdict::Insoluble);
  DiagonalForm mixed = q({1, -3, 5});
  SolubilityResult r = solve_real(mixed);
  CHECK(r.verdict == Verdict::Soluble);
  REQUIRE(r.sign_pattern.size() == 3);
  // the signed directions really do cancel: some positive and some negative term
  bool pos = false, neg = false;
  for (size_t i = 0; i < 3; ++i) {
    if (r.sign_pattern[i] == 0) continue;
    (mixed.a[i] > 0 ? pos : neg) = true;
  }
  CHECK((pos && neg));
  // odd degree: always soluble
  CHECK(solve_real(DiagonalForm::make(3, {Int(1), Int(7)})).verdict == Verdict::Soluble);
}

TEST_CASE("pinned p-adic decisions") {
  DiagonalForm f = DiagonalForm::make(2, {Int(1), Int(1), Int(1)});
  Int two(2);
  SolubilityResult r = solve_padic(f, two, default_level(f, two));
  CHECK(r.verdict == Verdict::Insoluble);  // (-1,-1)_2 = 1/2

  CHECK(conic_soluble(5, 1, -1, Place::finite(5)));
  // (5,1,1) IS soluble at 5: (sqrt(-1), 2, 1); it fails at real and 2 instead
  CHECK(conic_soluble(5, 1, 1, Place::finite(5)));
  CHECK(!conic_soluble(5, 1, 1, Place::finite(2)));
  CHECK(!conic_soluble(5, 2, 1, Place::finite(5)));  // (-2|5) = -1
  CHECK(conic_soluble(1, 1, -2, Place::finite(2)));

  // x^2 + y^2 = 7 has no 7-adic point on the conic x^2+y^2-7z^2?
  // (-1,7)_7 = legendre(-1,7) = -1 => insoluble
  CHECK(!conic_soluble(1, 1, -7, Place::finite(7)));

  DiagonalForm g = DiagonalForm::make(2, {Int(1), Int(1), Int(-2)});
  r = solve_padic(g, two, default_level(g, two));
  check_witness(g, r, two);
}

TEST_CASE("conic criterion equals the residue search") {
  std::mt19937_64 rng(733);
  std::vector<Place> places = {Place::real(), Place::finite(2), Place::finite(3),
                               Place::finite(5), Place::finite(17)};
  for (int i = 0; i < 100; ++i) {
    Int a0 = oracle::rand_nonzero(rng, 30), a1 = oracle::rand_nonzero(rng, 30),
        a2 = oracle::rand_nonzero(rng, 30);
    DiagonalForm f = DiagonalForm::make(2, {a0, a1, a2});
    for (const Place& v : places) {
      bool sym = conic_soluble(a0, a1, a2, v);
      SolubilityResult r =
          v.is_real() ? solve_real(f)
                      : solve_padic(f, v.prime(), default_level(f, v.prime()));
      REQUIRE(r.verdict != Verdict::Undecided);
      CHECK(sym == (r.verdict == Verdict::Soluble));
      if (!v.is_real() && r.verdict == Verdict::Soluble) check_witness(f, r, v.prime());
    }
  }
}

TEST_CASE("invariance under coordinate scaling") {
  std::mt19937_64 rng(9041);
  std::vector<Int> scales = {1, 2, 3, 5};
  for (int i = 0; i < 30; ++i) {
    long d = (i % 2) ? 2 : 3;
    std::vector<Int> a, b;
    for (int j = 0; j < 3; ++j) {
      Int aj = oracle::rand_nonzero(rng, 20);
      a.push_back(aj);
      b.push_back(aj * ipow(scales[rng() % scales.size()], static_cast<int>(d)));
    }
    DiagonalForm f = DiagonalForm::make(d, a), g = DiagonalForm::make(d, b);
    for (long pl : {2L, 3L, 5L}) {
      Int p(pl);
      int lvl = std::max(default_level(f, p), default_level(g, p));
      CHECK(solve_padic(f, p, lvl).verdict == solve_padic(g, p, lvl).verdict);
    }
  }
}

TEST_CASE("decisions are stable as the level grows") {
  std::mt19937_64 rng(2203);
  for (int i = 0; i < 25; ++i) {
    DiagonalForm f = DiagonalForm::make(
        2, {oracle::rand_nonzero(rng, 15), oracle::rand_nonzero(rng, 15),
            oracle::rand_nonzero(rng, 15)});
    for (long pl : {2L, 5L}) {
      Int p(pl);
      Verdict settled = Verdict::Undecided;
      for (int lvl = 3; lvl <= default_level(f, p) + 2; ++lvl) {
        Verdict v = solve_padic(f, p, lvl).verdict;
        if (settled == Verdict::Undecided) settled = v;
        else if (v != Verdict::Undecided) CHECK(v == settled);
      }
      CHECK(settled != Verdict::Undecided);
    }
  }
}

TEST_CASE("everywhere-local reports") {
  DiagonalForm f = DiagonalForm::make(2, {Int(1), Int(1), Int(1)});
  EverywhereReport rep = everywhere_locally_soluble(f);
  CHECK(rep.verdict == Verdict::Insoluble);
  REQUIRE(rep.places.size() >= 2);
  CHECK(rep.places[0].v == Place::real());
  CHECK(rep.places[0].r.verdict == Verdict::Insoluble);
  CHECK(rep.places[1].v == Place::finite(2));
  CHECK(rep.places[1].r.verdict == Verdict::Insoluble);

  DiagonalForm cubic = DiagonalForm::make(3, {Int(1), Int(1), Int(1), Int(1)});
  CHECK(everywhere_locally_soluble(cubic).verdict == Verdict::Soluble);

  // fails exactly at the real place and 5 (reciprocity pairs the failures)
  DiagonalForm g = DiagonalForm::make(2, {Int(5), Int(2), Int(1)});
  rep = everywhere_locally_soluble(g);
  CHECK(rep.verdict == Verdict::Insoluble);
  for (const PlaceVerdict& pv : rep.places) {
    bool fails = pv.v == Place::real() || pv.v == Place::finite(5);
    CHECK(pv.r.verdict == (fails ? Verdict::Insoluble : Verdict::Soluble));
  }
}

TEST_CASE("lind-reichardt local points") {
  CHECK(lind_reichardt_local(Place::real()).verdict == Verdict::Soluble);
  for (long pl : {2L, 3L, 5L, 7L, 17L}) {
    SolubilityResult r = lind_reichardt_local(Place::finite(pl));
    REQUIRE(r.verdict == Verdict::Soluble);
    Int p(pl), mod = ipow(p, r.witness_level);
    CHECK(lr_equation().eval_mod(r.witness, mod) == 0);
    // weighted primitivity: not (p|x, p^2|y, p|z)
    bool all_deep = r.witness[0] % p == 0 && r.witness[1] % (p * p) == 0 &&
                    r.witness[2] % p == 0;
    CHECK(!all_deep);
  }
}

TEST_CASE("lind-reichardt global descent certificate") {
  LRCertificate c = lind_reichardt_global_insoluble(100);
  CHECK(c.two_square_mod17);
  CHECK(c.minus_one_square_mod17);
  CHECK(c.qr_descent_ok);
  CHECK(c.fourth_powers_mod17 == std::vector<long>{1, 4, 13, 16});
  CHECK(!c.two_is_fourth_power);
  CHECK(c.insoluble);
}
