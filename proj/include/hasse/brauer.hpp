#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hasse/qpoly.hpp"
#include "hasse/solubility.hpp"
#include "hasse/symbols.hpp"

namespace hasse {

// a monomial x^ex y^ey z^ez (times a constant) on the weighted curve; weights
// (1,2,1), so a genuine function has ex + 2*ey + ez = 0
struct CurvePresentation {
  Rat c;
  int ex, ey, ez;
  std::string str() const;
};

// quaternion class (a, f) where f is given by one or more presentations that
// agree as functions on the base variety
class QuaternionSymbolClass {
 public:
  enum class Base { LindReichardtCurve, ProjectiveLineQt };

  static QuaternionSymbolClass on_curve(const Rat& a, std::vector<CurvePresentation> ps);
  static QuaternionSymbolClass on_line(const Rat& a, std::vector<QRatFunc> ps);
  // the paper's class A = (17, Y/X^2) ~ (17, Y/Z^2)
  static QuaternionSymbolClass lind_reichardt();

  Base base() const { return base_; }
  const Rat& a() const { return a_; }
  const std::vector<CurvePresentation>& curve_presentations() const { return curve_ps_; }
  const std::vector<QRatFunc>& line_presentations() const { return line_ps_; }

 private:
  QuaternionSymbolClass() = default;
  Base base_ = Base::LindReichardtCurve;
  Rat a_ = 1;
  std::vector<CurvePresentation> curve_ps_;
  std::vector<QRatFunc> line_ps_;
};

// a local point of the curve: exact rational coordinates, or coordinate
// residues mod p^level
struct LocalPoint {
  Place v = Place::real();
  bool exact = true;
  std::vector<Rat> coords;    // exact case
  std::vector<Int> residues;  // residue case
  int level = 0;

  static LocalPoint exact_point(const Place& v, std::vector<Rat> coords);
  static LocalPoint residue_point(const Int& p, std::vector<Int> residues, int level);
};

struct NoEvaluablePresentation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// invariant of the class at the point: 0 immediately when a is a square in
// Q_v (the algebra is split however f is presented); otherwise the first
// presentation with decidable value decides via the Hilbert symbol
QmodZ evaluate_at(const QuaternionSymbolClass& cls, const LocalPoint& pt, const Place& v);

struct InvariantProfile {
  Place v = Place::real();
  int level = 0;
  std::vector<QmodZ> attained;  // sorted, deduplicated; subset of {0, 1/2}
  long sample_count = 0;
  bool undecided = false;
};

// residue-level points of the Lind-Reichardt curve mod p^level: weighted-
// primitive, satisfy the equation mod p^level, and certified to contain a
// Q_p point
std::vector<std::vector<Int>> lr_local_points(const Int& p, int level);

InvariantProfile invariant_profile(const QuaternionSymbolClass& cls, const Place& v, int level);

struct PlaceReport {
  Place v = Place::real();
  Verdict local_solubility = Verdict::Undecided;
  InvariantProfile profile;
  std::string method;  // "square shortcut" | "enumeration"
};

struct ObstructionReport {
  std::vector<PlaceReport> places;
  std::vector<QmodZ> sum_set;  // attainable values of the adelic invariant sum
  bool obstructed = false;
  bool undecided = false;
  std::string verdict;
  std::string tail_note;  // what covers primes beyond the bound
};

ObstructionReport adelic_obstruction_test(const QuaternionSymbolClass& cls, const Int& prime_bound,
                                          int level);

// surjectivity of the shifted evaluation map at v (profile attains both
// invariant values)
bool is_prolific(const QuaternionSymbolClass& cls, const Place& v, int level);

}  // namespace hasse
