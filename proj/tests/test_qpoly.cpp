#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "hasse/qpoly.hpp"
#include "hasse/residue.hpp"
#include "hasse/squareclass.hpp"

using namespace hasse;

static QPoly P(const std::string& s) { return QPoly::parse(s); }

TEST_CASE("polynomial parsing and printing") {
  QPoly f = P("t^2 - 17");
  REQUIRE(f.deg() == 2);
  CHECK(f.coeff(0) == -17);
  CHECK(f.coeff(1) == 0);
  CHECK(f.coeff(2) == 1);
  CHECK(P("(t-1)*(t+2)") == P("t^2 + t - 2"));
  CHECK(P("2*(t/2 + 1)") == P("t + 2"));
  CHECK(P("(t^3-1)/(t-1)") == P("t^2+t+1"));  // exact division is fine
  CHECK_THROWS(P("t/(t+1)"));                 // nonpolynomial quotient
  CHECK_THROWS(P("t +"));
  for (const char* s : {"t^4 - 17", "3/2*t^2 - t + 5", "t", "-7"}) {
    QPoly g = P(s);
    CHECK(QPoly::parse(g.str()) == g);
  }
}

TEST_CASE("polynomial arithmetic") {
  QPoly f = P("t^3 - 1"), g = P("t - 1");
  auto [q, r] = f.divmod(g);
  CHECK(q == P("t^2 + t + 1"));
  CHECK(r.is_zero());
  auto [q2, r2] = P("t^2 + 1").divmod(P("t + 2"));
  CHECK(q2 == P("t - 2"));
  CHECK(r2 == P("5"));
  CHECK(gcd(P("t^2 - 1"), P("t^2 - 2*t + 1")) == P("t - 1"));
  CHECK(gcd(P("t^2 + 1"), P("t - 3")) == P("1"));
  CHECK(P("t^3 - 2*t").derivative() == P("3*t^2 - 2"));
  CHECK(P("t^2 - 2").eval(Rat(3)) == 7);
  CHECK(P("3/2*t + 3").primitive_part() == P("t + 2"));
  CHECK(P("-2*t + 4").primitive_part() == P("t - 2"));
}

TEST_CASE("factorization over Q") {
  QPolyFactorization F = factorize(P("t^4 - 1"));
  REQUIRE(F.factors.size() == 3);
  CHECK(F.unit == 1);
  std::vector<std::string> parts;
  for (const auto& fa : F.factors) {
    CHECK(fa.mult == 1);
    parts.push_back(fa.poly.str());
  }
  std::sort(parts.begin(), parts.end());
  // exact strings checked loosely: degrees 1,1,2
  int degsum = 0;
  for (const auto& fa : F.factors) degsum += fa.poly.deg();
  CHECK(degsum == 4);

  F = factorize(P("t^4 - 17"));
  REQUIRE(F.factors.size() == 1);
  CHECK(F.factors[0].poly == P("t^4 - 17"));
  CHECK(F.factors[0].mult == 1);

  F = factorize(P("2*(t-1)^2*(t+2)"));
  CHECK(F.unit == 2);
  REQUIRE(F.factors.size() == 2);
  for (const auto& fa : F.factors)
    CHECK(fa.mult == (fa.poly == P("t - 1") ? 2 : 1));

  CHECK(is_irreducible(P("t^2 + 1")));
  CHECK(is_irreducible(P("t^4 + t + 1")));
  CHECK(!is_irreducible(P("t^2 - 1")));
  CHECK(!is_irreducible(P("t^4 + 4")));  // (t^2-2t+2)(t^2+2t+2)
  CHECK(is_irreducible(P("t - 5")));
}

TEST_CASE("rational functions") {
  QRatFunc f = QRatFunc::parse("(t^2-1)/(t-1)");
  CHECK(f.num() == P("t + 1"));
  CHECK(f.den() == P("1"));
  f = QRatFunc::parse("2*t/4");
  CHECK(f.num() == P("t/2"));  // den kept monic, content in the numerator
  CHECK(f.den() == P("1"));

  QRatFunc g = QRatFunc::parse("t^2/(t-1)");
  CHECK(g.order_at(P("t")) == 2);
  CHECK(g.order_at(P("t - 1")) == -1);
  CHECK(g.order_at(P("t + 1")) == 0);
  CHECK(g.order_at_infinity() == -1);
  CHECK(QRatFunc::parse("(t+1)/(t^3-2)").order_at_infinity() == 2);
}

TEST_CASE("square classes") {
  CHECK(SquareClass::rational(Rat(4)).is_trivial());
  CHECK(SquareClass::rational(Rat(9, 4)).is_trivial());
  CHECK(!SquareClass::rational(Rat(-1)).is_trivial());
  CHECK(!SquareClass::rational(Rat(2)).is_trivial());
  SquareClass m = SquareClass::rational(Rat(-1)) * SquareClass::rational(Rat(-1));
  CHECK(m.is_trivial());
  m = SquareClass::rational(Rat(2)) * SquareClass::rational(Rat(3));
  CHECK(!m.is_trivial());  // 6 is not a square

  CHECK(SquareClass::fp(7, 2).is_trivial());   // 3^2 = 2 mod 7
  CHECK(!SquareClass::fp(7, 3).is_trivial());

  Divisor at_t = Divisor::finite(P("t"));
  CHECK(!is_square_in_residue_field(Rat(17), at_t));
  Divisor quad = Divisor::finite(P("t^2 - 17"));
  CHECK(is_square_in_residue_field(Rat(17), quad));   // 17 = (sqrt 17)^2
  CHECK(!is_square_in_residue_field(Rat(2), quad));
  CHECK(is_square_in_residue_field(Rat(4), Divisor::at_infinity()));
  CHECK(!is_square_in_residue_field(Rat(-1), Divisor::at_infinity()));
  CHECK_THROWS(Divisor::finite(P("t^2 - 1")));  // not irreducible
  CHECK_THROWS(Divisor::finite(P("2*t - 1")));  // not monic

  CHECK(fp_ratfunc_is_square(7, {1, 2, 1}, {1}));      // (t+1)^2
  CHECK(!fp_ratfunc_is_square(7, {3, 6, 3}, {1}));     // 3*(t+1)^2, 3 nonresidue
  CHECK(fp_ratfunc_is_square(7, {2, 4, 2}, {1}));      // 2*(t+1)^2, 2 = 3^2
  CHECK(!fp_ratfunc_is_square(7, {1, 1}, {1}));        // t+1
  CHECK(fp_ratfunc_is_square(5, {1, 2, 1}, {4}));      // (t+1)^2 / 4
}

static std::vector<std::string> locus_strs(const Rat& a, const QRatFunc& f) {
  std::vector<std::string> out;
  for (const Divisor& d : ramification_locus(a, f)) out.push_back(d.str());
  std::sort(out.begin(), out.end());
  return out;
}

TEST_CASE("tame residues") {
  QRatFunc t = QRatFunc::parse("t");
  Divisor at_t = Divisor::finite(P("t"));
  CHECK(!residue_tame(Rat(-1), t, at_t).is_trivial());
  CHECK(!residue_tame(Rat(-1), t, Divisor::at_infinity()).is_trivial());
  CHECK(residue_tame(Rat(-1), t, Divisor::finite(P("t - 1"))).is_trivial());
  CHECK(residue_tame(Rat(4), t, at_t).is_trivial());  // split algebra

  // (-1, t): ramified exactly at t = 0 and infinity
  std::vector<Divisor> L = ramification_locus(Rat(-1), t);
  REQUIRE(L.size() == 2);
  bool has_zero = false, has_inf = false;
  for (const Divisor& d : L) {
    if (d.infinite) has_inf = true;
    if (!d.infinite && d.pi == P("t")) has_zero = true;
  }
  CHECK(has_zero);
  CHECK(has_inf);

  // (2, (t-1)/(t+1)): ramified at the two degree-one divisors, not infinity
  L = ramification_locus(Rat(2), QRatFunc::parse("(t-1)/(t+1)"));
  REQUIRE(L.size() == 2);
  for (const Divisor& d : L) {
    CHECK(!d.infinite);
    CHECK((d.pi == P("t - 1") || d.pi == P("t + 1")));
  }

  // constant classes have empty locus
  CHECK(ramification_locus(Rat(5), QRatFunc::parse("3")).empty());
}

TEST_CASE("residue is additive in the symbol and blind to squares") {
  std::mt19937_64 rng(318);
  std::vector<QPoly> pool = {P("t"), P("t - 1"), P("t + 1"), P("t - 2"),
                             P("t + 3"), P("t^2 + 1"), P("t^2 - 2")};
  std::vector<Rat> consts = {Rat(-1), Rat(2), Rat(3), Rat(-5), Rat(7), Rat(1, 2)};
  auto rand_func = [&](int maxexp) {
    QPoly num = QPoly::constant(consts[rng() % consts.size()]);
    QPoly den = QPoly::constant(1);
    for (const QPoly& pi : pool) {
      int e = static_cast<int>(rng() % (2 * maxexp + 1)) - maxexp;
      for (; e > 0; --e) num = num * pi;
      for (; e < 0; ++e) den = den * pi;
    }
    return QRatFunc(num, den);
  };

  std::vector<Divisor> sample_divs = {Divisor::finite(P("t")), Divisor::finite(P("t - 1")),
                                      Divisor::at_infinity()};
  for (int i = 0; i < 25; ++i) {
    Rat a = consts[rng() % consts.size()];
    QRatFunc f1 = rand_func(2), f2 = rand_func(2);
    for (const Divisor& D : sample_divs) {
      SquareClass lhs = residue_tame(a, f1 * f2, D);
      SquareClass rhs = residue_tame(a, f1, D) * residue_tame(a, f2, D);
      CHECK(lhs.is_trivial() == rhs.is_trivial());
    }
    // locus invariance under multiplication by a square
    QRatFunc g = rand_func(1);
    if (!g.is_zero()) {
      QRatFunc fg2 = f1 * g * g;
      CHECK(locus_strs(a, f1) == locus_strs(a, fg2));
    }
  }
}

TEST_CASE("reduction residues mod p") {
  CHECK(!reduction_residue(7, QRatFunc::parse("t")).is_trivial());
  CHECK(reduction_residue(7, QRatFunc::parse("t^2")).is_trivial());
  CHECK(reduction_residue(7, QRatFunc::parse("2*t^2")).is_trivial());   // 2 = 3^2 mod 7
  CHECK(!reduction_residue(5, QRatFunc::parse("2*t^2")).is_trivial());  // 2 nonresidue mod 5
  CHECK(reduction_residue(7, QRatFunc::parse("7*t^2")).is_trivial());   // content stripped
  CHECK_THROWS_AS(reduction_residue(2, QRatFunc::parse("t")), std::invalid_argument);
}
