#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hasse/brauer.hpp"
#include "hasse/density.hpp"
#include "hasse/families.hpp"
#include "hasse/points.hpp"
#include "hasse/residue.hpp"
#include "hasse/solubility.hpp"
#include "hasse/symbols.hpp"

namespace py = pybind11;
using namespace hasse;

namespace {

// rationals cross the boundary as strings/ints -> Fraction
Rat to_rat(const py::object& o) { return parse_rational(py::str(o).cast<std::string>()); }

Int to_int(const py::object& o) {
  try {
    return Int(py::str(o).cast<std::string>());
  } catch (const std::exception&) {
    throw py::value_error("not an integer: " + py::str(o).cast<std::string>());
  }
}

py::object fraction(const Rat& q) {
  static py::object F = py::module_::import("fractions").attr("Fraction");
  return F(q.get_str());
}

py::object fraction(const QmodZ& q) {
  static py::object F = py::module_::import("fractions").attr("Fraction");
  return F(q.normalized().str());
}

py::int_ big(const Int& n) {
  static py::object toint = py::module_::import("builtins").attr("int");
  return toint(n.get_str());
}

std::vector<Int> int_list(const py::sequence& seq) {
  std::vector<Int> out;
  for (py::handle h : seq) out.push_back(to_int(py::reinterpret_borrow<py::object>(h)));
  return out;
}

py::dict result_dict(const SolubilityResult& r) {
  py::dict d;
  d["verdict"] = verdict_str(r.verdict);
  if (!r.witness.empty()) {
    py::list w;
    for (const Int& x : r.witness) w.append(big(x));
    d["witness"] = w;
    d["witness_level"] = r.witness_level;
  }
  if (!r.sign_pattern.empty()) d["sign_pattern"] = r.sign_pattern;
  d["level_reached"] = r.level_reached;
  if (!r.note.empty()) d["note"] = r.note;
  return d;
}

py::dict census_dict(const CensusReport& r) {
  py::dict d;
  d["family"] = r.family;
  d["B"] = r.B;
  d["N_tot"] = r.N_tot;
  d["N_loc"] = r.N_loc;
  d["degenerate_count"] = r.degenerate;
  py::dict fails;
  for (const auto& [place, n] : r.per_place_failures) fails[place.c_str()] = n;
  d["per_place_failures"] = fails;
  d["ratio"] = fraction(r.ratio());
  return d;
}

py::dict density_dict(const LocalDensity& d) {
  py::dict out;
  out["place"] = d.v.str();
  out["exact"] = d.exact;
  out["method"] = d.method;
  if (d.exact) {
    out["value"] = fraction(d.value);
  } else {
    out["estimate"] = d.estimate;
    out["half_width"] = d.half_width;
    out["samples"] = d.samples;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_hasse, m) {
  m.doc() = "local-global arithmetic of diagonal forms and quaternion Brauer classes";

  m.def(
      "hilbert",
      [](const py::object& a, const py::object& b, const std::string& place) {
        return fraction(hilbert_symbol(to_rat(a), to_rat(b), Place::parse(place)));
      },
      py::arg("a"), py::arg("b"), py::arg("place"),
      "Hilbert symbol invariant inv_v(a, b) in Q/Z (0 or 1/2)");

  m.def(
      "hilbert_table",
      [](const py::object& a, const py::object& b) {
        py::list rows;
        for (const LocalInvariant& li : local_invariants(to_rat(a), to_rat(b)))
          rows.append(py::make_tuple(li.v.str(), fraction(li.inv)));
        return rows;
      },
      py::arg("a"), py::arg("b"), "all candidate places with their invariants");

  m.def(
      "invariant_sum",
      [](const py::object& a, const py::object& b) {
        return fraction(invariant_sum(to_rat(a), to_rat(b)));
      },
      py::arg("a"), py::arg("b"), "reciprocity total (always 0)");

  m.def(
      "solve",
      [](long degree, const py::sequence& coeffs, const std::string& place, int level) {
        DiagonalForm f = DiagonalForm::make(degree, int_list(coeffs));
        Place v = Place::parse(place);
        SolubilityResult r =
            v.is_real() ? solve_real(f)
                        : solve_padic(f, v.prime(),
                                      level > 0 ? level : default_level(f, v.prime()));
        return result_dict(r);
      },
      py::arg("degree"), py::arg("coeffs"), py::arg("place"), py::arg("level") = 0,
      "solubility of sum a_i x_i^degree = 0 over Q_v");

  m.def(
      "everywhere_soluble",
      [](long degree, const py::sequence& coeffs) {
        DiagonalForm f = DiagonalForm::make(degree, int_list(coeffs));
        EverywhereReport rep = everywhere_locally_soluble(f);
        py::dict d;
        d["verdict"] = verdict_str(rep.verdict);
        py::list places;
        for (const PlaceVerdict& pv : rep.places) {
          py::dict row = result_dict(pv.r);
          row["place"] = pv.v.str();
          places.append(row);
        }
        d["places"] = places;
        return d;
      },
      py::arg("degree"), py::arg("coeffs"), "verdicts at the real place and all bad primes");

  m.def(
      "conic_soluble",
      [](const py::object& a0, const py::object& a1, const py::object& a2,
         const std::string& place) {
        return conic_soluble(to_int(a0), to_int(a1), to_int(a2), Place::parse(place));
      },
      py::arg("a0"), py::arg("a1"), py::arg("a2"), py::arg("place"),
      "a0 x^2 + a1 y^2 + a2 z^2 = 0 over Q_v, by Hilbert symbol");

  m.def(
      "lr_local",
      [](const std::string& place, int max_level) {
        return verdict_str(lind_reichardt_local(Place::parse(place), max_level).verdict);
      },
      py::arg("place"), py::arg("max_level") = 0,
      "local solubility of 2y^2 = x^4 - 17z^4 at one place");

  m.def(
      "lr_verify",
      [](long prime_bound, int level) {
        ObstructionReport rep =
            adelic_obstruction_test(QuaternionSymbolClass::lind_reichardt(), Int(prime_bound),
                                    level);
        py::dict d;
        py::list places;
        for (const PlaceReport& pr : rep.places) {
          py::dict row;
          row["place"] = pr.v.str();
          row["soluble"] = verdict_str(pr.local_solubility);
          py::list att;
          for (const QmodZ& q : pr.profile.attained) att.append(fraction(q));
          row["attained"] = att;
          row["level"] = pr.profile.level;
          row["points"] = pr.profile.sample_count;
          row["method"] = pr.method;
          places.append(row);
        }
        d["places"] = places;
        py::list sum;
        for (const QmodZ& q : rep.sum_set) sum.append(fraction(q));
        d["sum_set"] = sum;
        d["obstructed"] = rep.obstructed;
        d["undecided"] = rep.undecided;
        d["verdict"] = rep.verdict;
        d["tail"] = rep.tail_note;
        return d;
      },
      py::arg("prime_bound") = 100, py::arg("level") = 2,
      "adelic invariant profiles and the Brauer-Manin verdict for the curve");

  m.def(
      "delta",
      [](int d, int mm) {
        DeltaReport rep = delta_invariant(Family::diagonal(d, mm));
        py::dict out;
        py::list rows;
        for (const DivisorDelta& dd : rep.per_divisor)
          rows.append(py::make_tuple(dd.divisor, fraction(dd.delta)));
        out["per_divisor"] = rows;
        out["total"] = fraction(rep.total);
        return out;
      },
      py::arg("d"), py::arg("m"), "split-fibre invariants delta_D and Delta(pi)");

  m.def(
      "schanuel",
      [](int n) {
        SchanuelConstantsQ sc = schanuel_prediction(n);
        py::dict d;
        d["n"] = sc.n;
        d["zeta"] = sc.zeta;
        d["coefficient"] = sc.coefficient;
        return d;
      },
      py::arg("n"), "leading constant of N(B) ~ c B^{n+1} for P^n(Q)");

  m.def(
      "count_points", [](int n, long B) { return count_points(n, B); }, py::arg("n"),
      py::arg("B"), "exact number of points of P^n(Q) of height <= B");

  m.def(
      "census",
      [](int d, int mm, const std::vector<long>& Bs, int partitions) {
        py::list out;
        for (const CensusReport& r : census_ladder(Family::diagonal(d, mm), Bs, partitions))
          out.append(census_dict(r));
        return out;
      },
      py::arg("d"), py::arg("m"), py::arg("Bs"), py::arg("partitions") = 1,
      "everywhere-local solubility counts over a height ladder");

  m.def(
      "real_density", [](int d, int mm) { return density_dict(real_density(Family::diagonal(d, mm))); },
      py::arg("d"), py::arg("m"));

  m.def(
      "local_density",
      [](int d, int mm, const py::object& p, int level) {
        return density_dict(local_density_exhaustive(Family::diagonal(d, mm), to_int(p), level));
      },
      py::arg("d"), py::arg("m"), py::arg("p"), py::arg("level") = 3,
      "exact Haar proportion of soluble fibres over Q_p");

  m.def(
      "local_density_sample",
      [](int d, int mm, const py::object& p, long count, int level, unsigned long seed) {
        return density_dict(
            local_density_sample(Family::diagonal(d, mm), to_int(p), count, level, seed));
      },
      py::arg("d"), py::arg("m"), py::arg("p"), py::arg("count"), py::arg("level") = 3,
      py::arg("seed") = 20170417);

  m.def(
      "density_product",
      [](int d, int mm, const py::object& prime_bound, int level) {
        DensityProduct dp = density_product(Family::diagonal(d, mm), to_int(prime_bound), level);
        py::dict out;
        out["value"] = dp.value;
        out["tail_lower"] = dp.tail_lower;
        out["tail"] = dp.tail_note;
        py::list factors;
        for (const LocalDensity& f : dp.factors) factors.append(density_dict(f));
        out["factors"] = factors;
        return out;
      },
      py::arg("d"), py::arg("m"), py::arg("prime_bound") = 100, py::arg("level") = 3,
      "c_infty times prod c_p with a tail envelope (requires Delta(pi) = 0)");

  m.def(
      "ramification_locus",
      [](const py::object& a, const std::string& f) {
        py::list out;
        for (const Divisor& D : ramification_locus(to_rat(a), QRatFunc::parse(f)))
          out.append(D.str());
        return out;
      },
      py::arg("a"), py::arg("f"), "divisors of P^1 where the symbol (a, f) ramifies");

  m.def(
      "residue_tame",
      [](const py::object& a, const std::string& f, const std::string& divisor) {
        Divisor D = (divisor == "inf" || divisor == "oo" || divisor == "infinity")
                        ? Divisor::at_infinity()
                        : Divisor::finite(QPoly::parse(divisor));
        SquareClass c = residue_tame(to_rat(a), QRatFunc::parse(f), D);
        py::dict out;
        out["class"] = c.str();
        out["trivial"] = c.is_trivial();
        return out;
      },
      py::arg("a"), py::arg("f"), py::arg("divisor"),
      "square class of the tame residue at a divisor");

  m.def(
      "reduction_residue",
      [](const py::object& p, const std::string& f) {
        SquareClass c = reduction_residue(to_int(p), QRatFunc::parse(f));
        py::dict out;
        out["class"] = c.str();
        out["trivial"] = c.is_trivial();
        return out;
      },
      py::arg("p"), py::arg("f"), "square class of f reduced mod an odd prime");
}
