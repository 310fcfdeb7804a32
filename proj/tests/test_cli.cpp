#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "json.hpp"
#include "hasse/points.hpp"
#include "util.hpp"

using nlohmann::json;

static std::string cli() { return std::string(HASSE_CLI_PATH); }

TEST_CASE("hilbert") {
  CliResult r = run_cmd(cli() + " hilbert -1 -1");
  CHECK(r.code == 0);
  CHECK(r.out.find("real: 1/2") != std::string::npos);
  CHECK(r.out.find("2: 1/2") != std::string::npos);
  CHECK(r.out.find("sum: 0") != std::string::npos);

  r = run_cmd(cli() + " hilbert 17 3 --place 17");
  CHECK(r.code == 0);
  CHECK(r.out.find("= 1/2") != std::string::npos);

  r = run_cmd(cli() + " hilbert 1 5");
  CHECK(r.code == 0);
  CHECK(r.out.find("1/2") == std::string::npos);

  r = run_cmd(cli() + " hilbert -1 -1 --json");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["sum"] == "0");
  CHECK(j["invariants"].size() >= 2);

  CHECK(run_cmd(cli() + " hilbert -1").code == 2);
  CHECK(run_cmd(cli() + " hilbert x y").code == 2);
  CHECK(run_cmd(cli() + " hilbert 0 3").code == 2);
  CHECK(run_cmd(cli() + " hilbert 3 5 --place 6").code == 2);
}

TEST_CASE("solve") {
  CliResult r = run_cmd(cli() + " solve 2 1 1 1 --everywhere");
  CHECK(r.code == 1);
  CHECK(r.out.find("verdict: insoluble") != std::string::npos);
  CHECK(r.out.find("real") != std::string::npos);

  CHECK(run_cmd(cli() + " solve 3 1 1 1 1").code == 0);
  CHECK(run_cmd(cli() + " solve 2 5 2 1 --place 5").code == 1);
  CHECK(run_cmd(cli() + " solve 2 5 1 1 --place 5").code == 0);

  r = run_cmd(cli() + " solve 2 1 1 -2 --place 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("witness") != std::string::npos);

  r = run_cmd(cli() + " solve 2 1 -3 5 --place real --json");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["verdict"] == "soluble");
  CHECK(j["sign_pattern"].size() == 3);

  CHECK(run_cmd(cli() + " solve 2 1").code == 2);
  CHECK(run_cmd(cli() + " solve 2 1 0 1").code == 2);
}

TEST_CASE("lr-verify") {
  CHECK(run_cmd(cli() + " lr-verify --prime-bound 16").code == 2);

  CliResult r = run_cmd(cli() + " lr-verify --prime-bound 30");
  CHECK(r.code == 0);
  CHECK(r.out.find("obstructed (certified p ≤ 30)") != std::string::npos);
  CHECK(r.out.find("sum set: {1/2}") != std::string::npos);

  r = run_cmd(cli() + " lr-verify --prime-bound 30 --json");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["obstructed"] == true);
  CHECK(j["undecided"] == false);
  CHECK(j["sum_set"] == json::array({"1/2"}));
  bool saw17 = false;
  for (const auto& pl : j["places"]) {
    CHECK(pl["soluble"] == "soluble");
    if (pl["place"] == "17") {
      saw17 = true;
      CHECK(pl["attained"] == json::array({"1/2"}));
    } else {
      CHECK(pl["attained"] == json::array({"0"}));
    }
  }
  CHECK(saw17);
}

TEST_CASE("census") {
  CliResult r = run_cmd(cli() + " census conic --B 10,20");
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] != '{') continue;
    json j = json::parse(line);
    ++rows;
    long B = j["B"].get<long>();
    CHECK((B == 10 || B == 20));
    CHECK(j["N_tot"].get<long long>() == hasse::count_points(2, B));
    CHECK(j["N_loc"].get<long long>() > 0);
    CHECK(j.contains("degenerate_count"));
    CHECK(j.contains("per_place_failures"));
  }
  CHECK(rows == 2);

  // partitions must not change a single byte
  CliResult one = run_cmd(cli() + " census conic --B 15 --partitions 1");
  CliResult eight = run_cmd(cli() + " census conic --B 15 --partitions 8");
  CHECK(one.code == 0);
  CHECK(one.out == eight.out);

  // csv summary
  std::string csv_path = "/tmp/hasse_test_census.csv";
  std::remove(csv_path.c_str());
  r = run_cmd(cli() + " census conic --B 10,20 --csv " + csv_path);
  CHECK(r.code == 0);
  std::ifstream csv(csv_path);
  REQUIRE(csv.good());
  std::string header;
  std::getline(csv, header);
  CHECK(header == "B,ratio");
  int csv_rows = 0;
  while (std::getline(csv, line))
    if (!line.empty()) ++csv_rows;
  CHECK(csv_rows == 2);
  std::remove(csv_path.c_str());

  CHECK(run_cmd(cli() + " census conic").code == 2);           // no ladder
  CHECK(run_cmd(cli() + " census cubic3 --B 10").code == 2);   // d = m
  CliResult blocked = run_cmd("HASSE_WORK_BUDGET=100 " + cli() + " census conic --B 100");
  CHECK(blocked.code == 2);
  CHECK(blocked.out.find("HASSE_WORK_BUDGET") != std::string::npos);
}

TEST_CASE("delta and density") {
  CliResult r = run_cmd(cli() + " delta conic");
  CHECK(r.code == 0);
  CHECK(r.out.find("= 3/2") != std::string::npos);
  CHECK(run_cmd(cli() + " delta cubic4").out.find("= 0") != std::string::npos);

  r = run_cmd(cli() + " density conic --place real");
  CHECK(r.code == 0);
  CHECK(r.out.find("3/4") != std::string::npos);

  r = run_cmd(cli() + " density conic --place 3 --level 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("23/32") != std::string::npos);

  r = run_cmd(cli() + " density conic --product");
  CHECK(r.code == 2);
  CHECK(r.out.find("3/2") != std::string::npos);

  r = run_cmd(cli() + " density cubic4 --product --prime-bound 20");
  CHECK(r.code == 0);
  CHECK(r.out.find("product over real and p ≤ 20") != std::string::npos);
  CHECK(r.out.find("tail") != std::string::npos);

  // sampling runs are reproducible byte for byte
  std::string cmd = cli() + " density conic --place 3 --samples 2000 --seed 7 --level 1";
  CHECK(run_cmd(cmd).out == run_cmd(cmd).out);

  CHECK(run_cmd(cli() + " density conic").code == 2);
  CHECK(run_cmd(cli() + " density conic --place 3 --product").code == 2);
}

TEST_CASE("schanuel") {
  CliResult r = run_cmd(cli() + " schanuel 1 --B 1000");
  CHECK(r.code == 0);
  CHECK(r.out.find("coefficient") != std::string::npos);
  CHECK(r.out.find("relative error") != std::string::npos);
  CHECK(run_cmd(cli() + " schanuel 0").code == 2);
}

TEST_CASE("residue") {
  CliResult r = run_cmd(cli() + " residue -1 t");
  CHECK(r.code == 0);
  CHECK(r.out.find("ramification locus:") != std::string::npos);
  CHECK(r.out.find("(t)") != std::string::npos);
  CHECK(r.out.find("infinity") != std::string::npos);

  r = run_cmd(cli() + " residue -1 t --divisor t");
  CHECK(r.code == 0);
  CHECK(r.out.find("(nontrivial)") != std::string::npos);
  r = run_cmd(cli() + " residue -1 t --divisor t-1");
  CHECK(r.code == 0);
  CHECK(r.out.find("(trivial)") != std::string::npos);

  r = run_cmd(cli() + " residue 5 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("unramified everywhere") != std::string::npos);

  CHECK(run_cmd(cli() + " residue --reduction 7 t").out.find("(nontrivial)") !=
        std::string::npos);
  CHECK(run_cmd(cli() + " residue --reduction 7 t^2").out.find("(trivial)") !=
        std::string::npos);
  CHECK(run_cmd(cli() + " residue --reduction 2 t").code == 2);
  CHECK(run_cmd(cli() + " residue -1").code == 2);
}

TEST_CASE("config file and precedence") {
  std::string cfg_path = "/tmp/hasse_test_config.cfg";
  {
    std::ofstream cfg(cfg_path);
    cfg << "# comment\n";
    cfg << "prime_bound = 20\n";
    cfg << "work_budget = 100\n";
  }
  CliResult r = run_cmd(cli() + " --config " + cfg_path + " lr-verify");
  CHECK(r.code == 0);
  CHECK(r.out.find("p ≤ 20") != std::string::npos);

  // a command-line flag beats the config value
  r = run_cmd(cli() + " --config " + cfg_path + " lr-verify --prime-bound 30");
  CHECK(r.code == 0);
  CHECK(r.out.find("p ≤ 30") != std::string::npos);

  // the config work budget blocks a large census
  r = run_cmd(cli() + " --config " + cfg_path + " census conic --B 100");
  CHECK(r.code == 2);
  CHECK(r.out.find("work_budget") != std::string::npos);

  CHECK(run_cmd(cli() + " --config /nonexistent.cfg delta conic").code == 2);
  std::remove(cfg_path.c_str());
}

TEST_CASE("usage errors") {
  CHECK(run_cmd(cli()).code == 2);
  CHECK(run_cmd(cli() + " frobnicate").code == 2);
  CliResult help = run_cmd(cli() + " --help");
  CHECK(help.code == 0);
  CHECK(help.out.find("hilbert") != std::string::npos);
}
