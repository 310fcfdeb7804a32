#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hasse/brauer.hpp"
#include "hasse/density.hpp"
#include "hasse/families.hpp"
#include "hasse/points.hpp"
#include "hasse/residue.hpp"
#include "hasse/solubility.hpp"
#include "hasse/symbols.hpp"

using nlohmann::json;
using namespace hasse;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUndecided = 3;

// ---- config file: `key = value` lines, # comments ---------------------------

std::map<std::string, std::string> load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      size_t b = s.find_first_not_of(" \t\r");
      size_t e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string k = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
    if (!k.empty() && !v.empty()) kv[k] = v;
  }
  return kv;
}

// flag > config > built-in default
template <typename T>
void config_fill(const CLI::Option* opt, const std::map<std::string, std::string>& cfg,
                 const std::string& key, T& var) {
  if (opt && opt->count() > 0) return;
  auto it = cfg.find(key);
  if (it == cfg.end()) return;
  std::istringstream is(it->second);
  T v;
  if (!(is >> v)) throw std::invalid_argument("config: bad value for " + key);
  var = v;
}

long long work_budget(const std::map<std::string, std::string>& cfg) {
  long long budget = 4000000000LL;
  auto it = cfg.find("work_budget");
  if (it != cfg.end()) budget = std::stoll(it->second);
  if (const char* env = std::getenv("HASSE_WORK_BUDGET")) budget = std::stoll(env);
  return budget;
}

Int parse_integer(const std::string& s) {
  std::string t = s;
  if (!t.empty() && t[0] == '+') t = t.substr(1);
  try {
    return Int(t);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: " + s);
  }
}

Family parse_family(const std::string& s) {
  if (s == "conic" || s == "conics") return Family::conics();
  if (s == "cubic4" || s == "cubic_surfaces") return Family::cubic_surfaces();
  if (s == "cubic3") return Family::diagonal(3, 3);
  auto comma = s.find(',');
  if (comma != std::string::npos) {
    int d = std::stoi(s.substr(0, comma));
    int m = std::stoi(s.substr(comma + 1));
    return Family::diagonal(d, m);
  }
  throw std::invalid_argument("unknown family '" + s + "' (use conic, cubic3, cubic4, or d,m)");
}

std::string qmodz_set(const std::vector<QmodZ>& xs) {
  std::string out = "{";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i].str();
  }
  return out + "}";
}

json place_json(const Place& v) { return v.str(); }

// ---- hilbert -----------------------------------------------------------------

int run_hilbert(const std::vector<std::string>& rem, const std::string& place_s, bool as_json) {
  if (rem.size() != 2) {
    std::cerr << "usage: hasse hilbert <a> <b> [--place v]" << std::endl;
    return kExitUsage;
  }
  Rat a = parse_rational(rem[0]), b = parse_rational(rem[1]);
  if (a == 0 || b == 0) throw std::invalid_argument("hilbert symbol needs nonzero arguments");
  if (!place_s.empty()) {
    Place v = Place::parse(place_s);
    QmodZ inv = hilbert_symbol(a, b, v);
    if (as_json) {
      json j{{"a", a.get_str()}, {"b", b.get_str()}, {"place", v.str()},
             {"invariant", inv.str()}};
      std::cout << j.dump(2) << std::endl;
    } else {
      std::cout << "inv_" << v.str() << "(" << a.get_str() << ", " << b.get_str()
                << ") = " << inv.str() << std::endl;
    }
    return kExitOk;
  }
  std::vector<LocalInvariant> table = local_invariants(a, b);
  QmodZ sum = invariant_sum(a, b);
  if (as_json) {
    json rows = json::array();
    for (const auto& li : table)
      rows.push_back({{"place", li.v.str()}, {"invariant", li.inv.str()}});
    json j{{"a", a.get_str()}, {"b", b.get_str()}, {"invariants", rows}, {"sum", sum.str()}};
    std::cout << j.dump(2) << std::endl;
  } else {
    std::cout << "(" << a.get_str() << ", " << b.get_str() << ")" << std::endl;
    for (const auto& li : table)
      std::cout << "  " << li.v.str() << ": " << li.inv.str() << std::endl;
    std::cout << "  sum: " << sum.str() << std::endl;
  }
  return sum.is_zero() ? kExitOk : kExitNegative;
}

// ---- solve -------------------------------------------------------------------

json witness_json(const SolubilityResult& r, const Place& v) {
  json j{{"verdict", verdict_str(r.verdict)}};
  if (r.verdict == Verdict::Soluble) {
    if (v.is_real()) {
      j["sign_pattern"] = r.sign_pattern;
    } else if (!r.witness.empty()) {
      json w = json::array();
      for (const Int& x : r.witness) w.push_back(x.get_str());
      j["witness"] = w;
      j["witness_level"] = r.witness_level;
    }
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

void print_result(const Place& v, const SolubilityResult& r) {
  std::cout << "  " << v.str() << ": " << verdict_str(r.verdict);
  if (r.verdict == Verdict::Soluble && !v.is_real() && !r.witness.empty()) {
    std::cout << "  witness (";
    for (size_t i = 0; i < r.witness.size(); ++i)
      std::cout << (i ? ", " : "") << r.witness[i].get_str();
    std::cout << ") mod " << v.prime().get_str() << "^" << r.witness_level;
  }
  if (r.verdict == Verdict::Soluble && v.is_real() && !r.sign_pattern.empty()) {
    std::cout << "  signs (";
    for (size_t i = 0; i < r.sign_pattern.size(); ++i)
      std::cout << (i ? ", " : "") << r.sign_pattern[i];
    std::cout << ")";
  }
  std::cout << std::endl;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Soluble: return kExitOk;
    case Verdict::Insoluble: return kExitNegative;
    default: return kExitUndecided;
  }
}

int run_solve(const std::vector<std::string>& rem, const std::string& place_s, bool everywhere,
              int level, bool as_json) {
  if (rem.size() < 3) {
    std::cerr << "usage: hasse solve <degree> <a_0> ... <a_{m-1}> [--place v | --everywhere]"
              << std::endl;
    return kExitUsage;
  }
  long d = std::stol(rem[0]);
  std::vector<Int> coeffs;
  for (size_t i = 1; i < rem.size(); ++i) coeffs.push_back(parse_integer(rem[i]));
  DiagonalForm f = DiagonalForm::make(d, coeffs);

  if (!place_s.empty() && everywhere)
    throw std::invalid_argument("--place and --everywhere are exclusive");
  if (!place_s.empty()) {
    Place v = Place::parse(place_s);
    SolubilityResult r = v.is_real()
                             ? solve_real(f)
                             : solve_padic(f, v.prime(),
                                           level > 0 ? level : default_level(f, v.prime()));
    if (as_json) {
      json j{{"form", f.str()}, {"place", v.str()}};
      j.update(witness_json(r, v));
      std::cout << j.dump(2) << std::endl;
    } else {
      std::cout << "form: " << f.str() << std::endl;
      print_result(v, r);
    }
    return verdict_exit(r.verdict);
  }
  EverywhereReport rep = everywhere_locally_soluble(f);
  if (as_json) {
    json places = json::array();
    for (const auto& pv : rep.places) {
      json j{{"place", pv.v.str()}};
      j.update(witness_json(pv.r, pv.v));
      places.push_back(j);
    }
    json j{{"form", f.str()},
           {"verdict", verdict_str(rep.verdict)},
           {"places", places}};
    std::cout << j.dump(2) << std::endl;
  } else {
    std::cout << "form: " << f.str() << std::endl;
    std::cout << "bad places:" << std::endl;
    for (const auto& pv : rep.places) print_result(pv.v, pv.r);
    std::cout << "verdict: " << verdict_str(rep.verdict);
    if (rep.verdict == Verdict::Insoluble) {
      std::cout << "  (fails at";
      for (const auto& pv : rep.places)
        if (pv.r.verdict == Verdict::Insoluble) std::cout << " " << pv.v.str();
      std::cout << ")";
    }
    std::cout << std::endl;
  }
  return verdict_exit(rep.verdict);
}

// ---- lr-verify ---------------------------------------------------------------

int run_lr_verify(long prime_bound, int level, bool as_json) {
  if (prime_bound < 17)
    throw std::invalid_argument("prime bound must include 17 (the bad prime of the curve)");
  QuaternionSymbolClass cls = QuaternionSymbolClass::lind_reichardt();
  ObstructionReport rep = adelic_obstruction_test(cls, Int(prime_bound), level);

  std::string verdict = rep.obstructed
                            ? "obstructed (certified p ≤ " + std::to_string(prime_bound) + ")"
                            : rep.verdict;
  if (as_json) {
    json places = json::array();
    for (const PlaceReport& pr : rep.places) {
      json attained = json::array();
      for (const QmodZ& q : pr.profile.attained) attained.push_back(q.str());
      places.push_back({{"place", pr.v.str()},
                        {"soluble", verdict_str(pr.local_solubility)},
                        {"level", pr.profile.level},
                        {"attained", attained},
                        {"points", pr.profile.sample_count},
                        {"method", pr.method}});
    }
    json sum = json::array();
    for (const QmodZ& q : rep.sum_set) sum.push_back(q.str());
    json j{{"curve", "2y^2 = x^4 - 17z^4"},
           {"class_a", cls.a().get_str()},
           {"prime_bound", prime_bound},
           {"places", places},
           {"sum_set", sum},
           {"obstructed", rep.obstructed},
           {"undecided", rep.undecided},
           {"verdict", verdict},
           {"tail", rep.tail_note}};
    std::cout << j.dump(2) << std::endl;
  } else {
    std::cout << "curve: 2y^2 = x^4 - 17z^4   class: (17, f), f in {";
    const auto& ps = cls.curve_presentations();
    for (size_t i = 0; i < ps.size(); ++i) std::cout << (i ? ", " : "") << ps[i].str();
    std::cout << "}" << std::endl;
    for (const PlaceReport& pr : rep.places) {
      std::ostringstream os;
      os << pr.v.str();
      std::cout << "  " << std::left << std::setw(6) << os.str() << std::setw(11)
                << verdict_str(pr.local_solubility) << std::setw(10)
                << qmodz_set(pr.profile.attained) << pr.method << std::endl;
    }
    std::cout << "sum set: " << qmodz_set(rep.sum_set) << std::endl;
    std::cout << "tail: " << rep.tail_note << std::endl;
    std::cout << "verdict: " << verdict << std::endl;
  }
  if (rep.undecided) return kExitUndecided;
  return rep.obstructed ? kExitOk : kExitNegative;
}

// ---- census ------------------------------------------------------------------

std::vector<long> parse_ladder(const std::string& s) {
  std::vector<long> Bs;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    Bs.push_back(std::stol(tok));
  }
  if (Bs.empty()) throw std::invalid_argument("census: empty B ladder");
  return Bs;
}

double census_work_estimate(const Family& fam, long Bmax) {
  double B = static_cast<double>(Bmax);
  if (fam.d == 2 && fam.m == 3) return B * B * B / 2.0;
  if (fam.d % 2 == 1) {
    double t = 1.0;
    for (int i = 0; i < fam.m; ++i) t = t * (B + i) / (i + 1);
    return t;  // multisets
  }
  return std::pow(2.0 * B, fam.m);
}

json census_record(const CensusReport& r) {
  json fails = json::object();
  for (const auto& [place, n] : r.per_place_failures) fails[place] = n;
  return json{{"family", r.family},        {"B", r.B},
              {"N_tot", r.N_tot},          {"N_loc", r.N_loc},
              {"degenerate_count", r.degenerate}, {"per_place_failures", fails}};
}

int run_census(const std::string& family_s, const std::string& ladder_s, int partitions,
               const std::string& csv_path, bool as_json, long long budget) {
  Family fam = parse_family(family_s);
  if (!(fam.d < fam.m))
    throw std::invalid_argument("census requires d < m (good primes need the small-degree"
                                " shortcut)");
  std::vector<long> Bs = parse_ladder(ladder_s);
  long Bmax = *std::max_element(Bs.begin(), Bs.end());
  double est = census_work_estimate(fam, Bmax);
  if (est > static_cast<double>(budget)) {
    std::ostringstream os;
    os << "census work estimate " << std::scientific << std::setprecision(2) << est
       << " exceeds the budget " << static_cast<double>(budget)
       << " (raise with HASSE_WORK_BUDGET or config work_budget)";
    throw std::invalid_argument(os.str());
  }

  std::vector<CensusReport> reports = census_ladder(fam, Bs, partitions);

  DeltaReport delta = delta_invariant(fam);
  bool have_fit = false;
  DecayFit fit{};
  try {
    fit = decay_exponent_fit(reports, fam.n());
    have_fit = true;
  } catch (const std::exception&) {
    // fewer than four rungs (or a degenerate ladder): report counts only
  }

  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) throw std::invalid_argument("cannot write csv: " + csv_path);
    csv << "B,ratio\n";
    for (const CensusReport& r : reports)
      csv << r.B << "," << std::setprecision(12) << r.ratio().get_d() << "\n";
  }

  if (as_json) {
    json recs = json::array();
    for (const CensusReport& r : reports) recs.push_back(census_record(r));
    json j{{"family", reports.front().family},
           {"partitions", partitions},
           {"records", recs},
           {"delta", delta.total.get_str()}};
    if (have_fit)
      j["fit"] = {{"exponent", fit.exponent}, {"rms", fit.residual}, {"points", fit.points}};
    std::cout << j.dump(2) << std::endl;
  } else {
    for (const CensusReport& r : reports) std::cout << census_record(r).dump() << std::endl;
    if (have_fit)
      std::cout << "fitted exponent x = " << std::setprecision(4) << fit.exponent << " (rms "
                << std::setprecision(3) << fit.residual << ", " << fit.points
                << " points)   Δ(π) = " << delta.total.get_str() << std::endl;
  }
  return kExitOk;
}

// ---- delta / density / schanuel ----------------------------------------------

int run_delta(const std::string& family_s, bool as_json) {
  Family fam = parse_family(family_s);
  DeltaReport rep = delta_invariant(fam);
  std::vector<FiberDescriptor> fibres = fam.divisor_fibres();
  if (as_json) {
    json rows = json::array();
    for (size_t i = 0; i < rep.per_divisor.size(); ++i)
      rows.push_back({{"divisor", rep.per_divisor[i].divisor},
                      {"residual_variables", fibres[i].variables},
                      {"delta", rep.per_divisor[i].delta.get_str()}});
    json j{{"family", fam.descriptor()}, {"per_divisor", rows},
           {"delta_total", rep.total.get_str()}};
    std::cout << j.dump(2) << std::endl;
  } else {
    std::cout << "family " << fam.descriptor() << std::endl;
    for (size_t i = 0; i < rep.per_divisor.size(); ++i)
      std::cout << "  divisor a_" << rep.per_divisor[i].divisor << " = 0: degree " << fam.d
                << " in " << fibres[i].variables
                << " variables, delta_D = " << rep.per_divisor[i].delta.get_str() << std::endl;
    std::cout << "Δ(π) = " << rep.total.get_str() << std::endl;
  }
  return kExitOk;
}

json density_json(const LocalDensity& d) {
  json j{{"place", d.v.str()}, {"exact", d.exact}, {"method", d.method}};
  if (d.exact) {
    j["value"] = d.value.get_str();
    j["value_double"] = d.value.get_d();
  } else {
    j["estimate"] = d.estimate;
    j["half_width"] = d.half_width;
    j["samples"] = d.samples;
  }
  return j;
}

void print_density(const LocalDensity& d) {
  std::cout << "c_" << d.v.str() << " = ";
  if (d.exact)
    std::cout << d.value.get_str() << " (= " << std::setprecision(8) << d.value.get_d() << ")";
  else
    std::cout << std::setprecision(8) << d.estimate << " ± " << std::setprecision(3)
              << d.half_width << " (" << d.samples << " samples)";
  std::cout << "   [" << d.method << "]" << std::endl;
}

int run_density(const std::string& family_s, const std::string& place_s, bool product,
                long prime_bound, int level, long samples, unsigned long seed, bool as_json) {
  Family fam = parse_family(family_s);
  if (product != place_s.empty())
    throw std::invalid_argument("density: give exactly one of --place or --product");
  if (product) {
    DensityProduct dp = density_product(fam, Int(prime_bound), level);
    if (as_json) {
      json factors = json::array();
      for (const LocalDensity& d : dp.factors) factors.push_back(density_json(d));
      json j{{"family", fam.descriptor()},
             {"prime_bound", prime_bound},
             {"factors", factors},
             {"product", dp.value},
             {"tail_lower", dp.tail_lower},
             {"tail", dp.tail_note}};
      std::cout << j.dump(2) << std::endl;
    } else {
      std::cout << "family " << fam.descriptor() << std::endl;
      for (const LocalDensity& d : dp.factors) print_density(d);
      std::cout << "product over real and p ≤ " << prime_bound << ": "
                << std::setprecision(8) << dp.value << std::endl;
      std::cout << "tail: " << dp.tail_note << std::endl;
    }
    return kExitOk;
  }
  Place v = Place::parse(place_s);
  LocalDensity d;
  if (v.is_real())
    d = real_density(fam);
  else if (samples > 0)
    d = local_density_sample(fam, v.prime(), samples, level, seed);
  else
    d = local_density_exhaustive(fam, v.prime(), level);
  if (as_json) {
    json j = density_json(d);
    j["family"] = fam.descriptor();
    std::cout << j.dump(2) << std::endl;
  } else {
    std::cout << "family " << fam.descriptor() << std::endl;
    print_density(d);
  }
  return kExitOk;
}

int run_schanuel(int n, long B, bool as_json) {
  if (n < 1) throw std::invalid_argument("schanuel: n >= 1 required");
  SchanuelConstantsQ sc = schanuel_prediction(n);
  long long n_tot = 0;
  double empirical = 0, rel_err = 0;
  if (B > 0) {
    n_tot = count_points(n, B);
    empirical = static_cast<double>(n_tot) / std::pow(static_cast<double>(B), n + 1);
    rel_err = std::abs(empirical - sc.coefficient) / sc.coefficient;
  }
  if (as_json) {
    json j{{"n", n},
           {"zeta", sc.zeta},
           {"coefficient", sc.coefficient}};
    if (B > 0) {
      j["B"] = B;
      j["N_tot"] = n_tot;
      j["empirical"] = empirical;
      j["relative_error"] = rel_err;
    }
    std::cout << j.dump(2) << std::endl;
  } else {
    std::cout << "P^" << n << "(Q): N(B) ~ 2^" << n + 1 << "/(2 zeta(" << n + 1
              << ")) B^" << n + 1 << std::setprecision(10) << ", zeta(" << n + 1
              << ") = " << sc.zeta << ", coefficient = " << sc.coefficient << std::endl;
    if (B > 0)
      std::cout << "B = " << B << ": N_tot = " << n_tot << ", N_tot/B^" << n + 1 << " = "
                << std::setprecision(10) << empirical << " (relative error "
                << std::setprecision(3) << rel_err * 100 << "%)" << std::endl;
  }
  return kExitOk;
}

// ---- residue -----------------------------------------------------------------

Divisor parse_divisor(const std::string& s) {
  if (s == "inf" || s == "oo" || s == "infinity") return Divisor::at_infinity();
  return Divisor::finite(QPoly::parse(s));
}

int run_residue(const std::vector<std::string>& rem, const std::string& divisor_s,
                const std::string& reduction_s, bool as_json) {
  if (!reduction_s.empty()) {
    if (rem.size() != 1) {
      std::cerr << "usage: hasse residue --reduction <p> <f>" << std::endl;
      return kExitUsage;
    }
    Int p = parse_integer(reduction_s);
    QRatFunc f = QRatFunc::parse(rem[0]);
    SquareClass c = reduction_residue(p, f);
    if (as_json) {
      json j{{"p", p.get_str()},
             {"f", f.str()},
             {"class", c.str()},
             {"trivial", c.is_trivial()}};
      std::cout << j.dump(2) << std::endl;
    } else {
      std::cout << "reduction residue of (" << p.get_str() << ", " << f.str() << "): " << c.str()
                << (c.is_trivial() ? " (trivial)" : " (nontrivial)") << std::endl;
    }
    return kExitOk;
  }
  if (rem.size() != 2) {
    std::cerr << "usage: hasse residue <a> <f> [--divisor pi | --reduction p]" << std::endl;
    return kExitUsage;
  }
  Rat a = parse_rational(rem[0]);
  QRatFunc f = QRatFunc::parse(rem[1]);
  if (!divisor_s.empty()) {
    Divisor D = parse_divisor(divisor_s);
    SquareClass c = residue_tame(a, f, D);
    if (as_json) {
      json j{{"a", a.get_str()},  {"f", f.str()},
             {"divisor", D.str()}, {"class", c.str()},
             {"trivial", c.is_trivial()}};
      std::cout << j.dump(2) << std::endl;
    } else {
      std::cout << "residue of (" << a.get_str() << ", " << f.str() << ") at " << D.str() << ": "
                << c.str() << (c.is_trivial() ? " (trivial)" : " (nontrivial)") << std::endl;
    }
    return kExitOk;
  }
  std::vector<Divisor> locus = ramification_locus(a, f);
  if (as_json) {
    json rows = json::array();
    for (const Divisor& D : locus)
      rows.push_back({{"divisor", D.str()}, {"class", residue_tame(a, f, D).str()}});
    json j{{"a", a.get_str()}, {"f", f.str()}, {"ramification_locus", rows}};
    std::cout << j.dump(2) << std::endl;
  } else {
    std::cout << "symbol (" << a.get_str() << ", " << f.str() << ") over Q(t)" << std::endl;
    if (locus.empty()) {
      std::cout << "unramified everywhere: the class is constant (lies in Br Q)" << std::endl;
    } else {
      std::cout << "ramification locus:" << std::endl;
      for (const Divisor& D : locus)
        std::cout << "  " << D.str() << ": residue " << residue_tame(a, f, D).str() << std::endl;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local-global arithmetic: Hilbert symbols, diagonal-form solubility,\n"
               "Brauer-Manin verification on 2y^2 = x^4 - 17z^4, residues over Q(t),\n"
               "and point-count statistics over Q"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "key=value config file")->expected(1);

  // hilbert
  auto* sc_hilbert = app.add_subcommand("hilbert", "Hilbert symbol invariants of (a, b)");
  sc_hilbert->allow_extras();
  std::string hil_place;
  bool hil_json = false;
  auto* hil_place_opt = sc_hilbert->add_option("--place", hil_place, "real, or a prime");
  sc_hilbert->add_flag("--json", hil_json, "JSON output");

  // solve
  auto* sc_solve = app.add_subcommand("solve", "solubility of a diagonal form over Q_v");
  sc_solve->allow_extras();
  std::string sol_place;
  bool sol_everywhere = false, sol_json = false;
  int sol_level = 0;
  auto* sol_place_opt = sc_solve->add_option("--place", sol_place, "real, or a prime");
  sc_solve->add_flag("--everywhere", sol_everywhere, "test all bad places (default)");
  auto* sol_level_opt = sc_solve->add_option("--level", sol_level, "residue search depth");
  sc_solve->add_flag("--json", sol_json, "JSON output");

  // lr-verify
  auto* sc_lr = app.add_subcommand("lr-verify",
                                   "Brauer-Manin obstruction on 2y^2 = x^4 - 17z^4");
  long lr_bound = 100;
  int lr_level = 2;
  bool lr_json = false;
  auto* lr_bound_opt = sc_lr->add_option("--prime-bound", lr_bound, "verify places p <= bound");
  auto* lr_level_opt = sc_lr->add_option("--level", lr_level, "residue enumeration level");
  sc_lr->add_flag("--json", lr_json, "JSON output");

  // census
  auto* sc_census = app.add_subcommand("census", "everywhere-local solubility counts over a "
                                                 "height ladder");
  std::string cen_family, cen_ladder, cen_csv;
  int cen_parts = 1;
  bool cen_json = false;
  sc_census->add_option("family", cen_family, "conic | cubic4 | d,m")->required();
  auto* cen_B_opt = sc_census->add_option("--B", cen_ladder, "comma-separated height ladder");
  auto* cen_parts_opt =
      sc_census->add_option("--partitions", cen_parts, "first-coordinate residue partitions");
  sc_census->add_option("--csv", cen_csv, "write B,ratio summary to this path");
  sc_census->add_flag("--json", cen_json, "single JSON document instead of JSON lines");

  // delta
  auto* sc_delta = app.add_subcommand("delta", "split-fibre invariants delta_D and Delta(pi)");
  std::string del_family;
  bool del_json = false;
  sc_delta->add_option("family", del_family, "conic | cubic3 | cubic4 | d,m")->required();
  sc_delta->add_flag("--json", del_json, "JSON output");

  // density
  auto* sc_density = app.add_subcommand("density", "local solubility densities c_v");
  std::string den_family, den_place;
  bool den_product = false, den_json = false;
  long den_bound = 100, den_samples = 0;
  int den_level = 3;
  unsigned long den_seed = 20170417;
  sc_density->add_option("family", den_family, "conic | cubic4 | d,m")->required();
  auto* den_place_opt = sc_density->add_option("--place", den_place, "real, or a prime");
  sc_density->add_flag("--product", den_product, "product of c_v over real and p <= bound");
  auto* den_bound_opt = sc_density->add_option("--prime-bound", den_bound, "product cutoff");
  auto* den_level_opt = sc_density->add_option("--level", den_level, "unit class depth");
  auto* den_samples_opt =
      sc_density->add_option("--samples", den_samples, "Monte Carlo instead of exhaustive");
  auto* den_seed_opt = sc_density->add_option("--seed", den_seed, "sampling seed");
  sc_density->add_flag("--json", den_json, "JSON output");

  // schanuel
  auto* sc_schanuel = app.add_subcommand("schanuel", "Schanuel leading constant for P^n(Q)");
  int sch_n = 1;
  long sch_B = 0;
  bool sch_json = false;
  sc_schanuel->add_option("n", sch_n, "projective dimension")->required();
  sc_schanuel->add_option("--B", sch_B, "compare against the exact count N(B)");
  sc_schanuel->add_flag("--json", sch_json, "JSON output");

  // residue
  auto* sc_residue = app.add_subcommand("residue", "tame residues of (a, f) over Q(t)");
  sc_residue->allow_extras();
  std::string res_divisor, res_reduction;
  bool res_json = false;
  sc_residue->add_option("--divisor", res_divisor, "monic irreducible in t, or 'inf'");
  sc_residue->add_option("--reduction", res_reduction, "reduce f mod an odd prime");
  sc_residue->add_flag("--json", res_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    std::map<std::string, std::string> cfg;
    if (!config_path.empty()) cfg = load_config(config_path);
    config_fill(lr_bound_opt, cfg, "prime_bound", lr_bound);
    config_fill(den_bound_opt, cfg, "prime_bound", den_bound);
    config_fill(lr_level_opt, cfg, "level", lr_level);
    config_fill(sol_level_opt, cfg, "level", sol_level);
    config_fill(den_level_opt, cfg, "level", den_level);
    config_fill(den_samples_opt, cfg, "samples", den_samples);
    config_fill(den_seed_opt, cfg, "seed", den_seed);
    config_fill(cen_parts_opt, cfg, "partitions", cen_parts);
    config_fill(cen_B_opt, cfg, "B", cen_ladder);

    if (sc_hilbert->parsed())
      return run_hilbert(sc_hilbert->remaining(), hil_place_opt->count() ? hil_place : "",
                         hil_json);
    if (sc_solve->parsed())
      return run_solve(sc_solve->remaining(), sol_place_opt->count() ? sol_place : "",
                       sol_everywhere, sol_level, sol_json);
    if (sc_lr->parsed()) return run_lr_verify(lr_bound, lr_level, lr_json);
    if (sc_census->parsed()) {
      if (cen_ladder.empty()) throw std::invalid_argument("census: --B ladder required");
      return run_census(cen_family, cen_ladder, cen_parts, cen_csv, cen_json,
                        work_budget(cfg));
    }
    if (sc_delta->parsed()) return run_delta(del_family, del_json);
    if (sc_density->parsed())
      return run_density(den_family, den_place, den_product, den_bound, den_level, den_samples,
                         den_seed, den_json);
    if (sc_schanuel->parsed()) return run_schanuel(sch_n, sch_B, sch_json);
    if (sc_residue->parsed())
      return run_residue(sc_residue->remaining(), res_divisor, res_reduction, res_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitUsage;
  } catch (const std::exception& e) {
    std::string what = e.what();
    std::cerr << "error: " << what << std::endl;
    return what.find("ndecided") != std::string::npos ? kExitUndecided : kExitUsage;
  }
  return kExitUsage;
}
