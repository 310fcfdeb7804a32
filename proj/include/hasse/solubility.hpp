#pragma once

#include <string>
#include <vector>

#include "hasse/hensel.hpp"
#include "hasse/place.hpp"

namespace hasse {

// Diagonal form a_0 x_0^d + ... + a_{m-1} x_{m-1}^d. Coefficients nonzero,
// content-reduced on construction.
struct DiagonalForm {
  long d = 2;
  std::vector<Int> a;

  static DiagonalForm make(long degree, std::vector<Int> coeffs);
  int m() const { return static_cast<int>(a.size()); }
  Int coeff_product() const;
  DiagonalEquation equation() const;
  std::string str() const;
};

enum class Verdict { Soluble, Insoluble, Undecided };

std::string verdict_str(Verdict v);

struct SolubilityResult {
  Verdict verdict = Verdict::Undecided;
  // finite places: witness residues mod p^witness_level, Hensel-certified
  std::vector<Int> witness;
  int witness_level = 0;
  // real place: sign pattern of a witness direction
  std::vector<int> sign_pattern;
  // bookkeeping: level reached / exhausted, certificate notes
  int level_reached = 0;
  std::string note;
};

// Level sufficient for every in-scope decision: 2*v_p(d^2 * prod a_i) + 3.
int default_level(const DiagonalForm& f, const Int& p);

// Real solubility: odd degree always; even degree iff signs are mixed.
SolubilityResult solve_real(const DiagonalForm& f);

// Q_p solubility by residue search: tame primes (p not dividing d) run a
// valuation-descent with exact mod-p root finding (cycle => insoluble);
// wild primes decide exactly through the diagonal sumset mod p^K at the
// one-coordinate Hensel level K = 2 v_p(d) + 2 max v_p(a_i) + 1, falling
// back to a breadth-first lift tree with per-node Hensel certificates when
// p^K is out of budget. Soluble witnesses are certified; insolubility means
// the search space below max_level is exhausted; otherwise Undecided.
SolubilityResult solve_padic(const DiagonalForm& f, const Int& p, int max_level);

// Hilbert-symbol criterion for a_0 x^2 + a_1 y^2 + a_2 z^2 = 0 over Q_v.
bool conic_soluble(const Int& a0, const Int& a1, const Int& a2, const Place& v);

struct PlaceVerdict {
  Place v;
  SolubilityResult r;
};

struct EverywhereReport {
  Verdict verdict = Verdict::Undecided;
  std::vector<PlaceVerdict> places;  // real, 2, then odd bad primes ascending
};

// Everywhere-local solubility for d < m (Chevalley-Warning covers good
// primes); bad places are the real place, 2, and p | d * prod(a_i).
EverywhereReport everywhere_locally_soluble(const DiagonalForm& f);

// ---- the Lind-Reichardt quartic 2y^2 = x^4 - 17 z^4 ------------------------
// Weighted projective coordinates (x : y : z), weights (1, 2, 1);
// a residue vector is primitive unless p|x, p^2|y and p|z all hold.

DiagonalEquation lr_equation();  // 2y^2 - x^4 + 17z^4 in vars (x, y, z)

// Local solubility at any place (max_level 0 = choose automatically).
SolubilityResult lind_reichardt_local(const Place& v, int max_level = 0);

struct LRCertificate {
  bool two_square_mod17 = false;        // legendre(2,17) = +1
  bool minus_one_square_mod17 = false;  // legendre(-1,17) = +1
  long q_check = 0;
  bool qr_descent_ok = false;  // q <= q_check, (17|q)=1 => (q|17)=1
  std::vector<long> fourth_powers_mod17;
  bool two_is_fourth_power = false;
  bool insoluble = false;  // the descent contradiction holds
};

// Certificate that C(Q) is empty: any rational point would force 2 to be a
// fourth power mod 17; the fourth powers are {1,4,13,16}.
LRCertificate lind_reichardt_global_insoluble(long q_check = 100);

}  // namespace hasse
