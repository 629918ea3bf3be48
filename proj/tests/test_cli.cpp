#include <stdexcept>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "circlesort/cli.hpp"
#include "circlesort/number_theory.hpp"

using nlohmann::json;
namespace cli = circlesort::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("sort") {
  const Outcome o = invoke({"sort", "--perm", "5 4 3 2 1"});
  REQUIRE(o.code == cli::kOk);
  const json r = o.report();
  CHECK(r["tool"] == "circlesort");
  CHECK(r["version"] == cli::kVersion);
  CHECK(r["command"] == "sort");
  CHECK(r["input"]["argv"][2] == "5 4 3 2 1");
  CHECK(r["result"]["length"] == 4);
  CHECK(r["result"]["bound"] == 4);
  CHECK(r["result"]["moves"].size() == 4);
  CHECK(r["result"]["final_is_trivial_class"] == true);
}

TEST_CASE("dist") {
  const json adj = invoke({"dist", "--perm", "7 6 5 4 3 2 1"}).report();
  CHECK(adj["result"]["distance"] == 9);
  const json all = invoke({"dist", "--perm", "1,4,7,3,6,2,5", "--mode", "allswap", "--bfs"}).report();
  CHECK(all["result"]["distance"] == 5);
  CHECK(all["result"]["bfs_distance"] == 5);
  CHECK(all["result"]["agree"] == true);
}

TEST_CASE("diam") {
  const json r = invoke({"diam", "--n", "8", "--mode", "adjacent"}).report();
  CHECK(r["result"]["diameter"] == 12);
  CHECK(r["result"]["formula"] == 12);
  CHECK(r["result"]["matches"] == true);
  const json a = invoke({"diam", "--n", "7", "--mode", "allswap"}).report();
  CHECK(a["result"]["diameter"] == 5);
}

TEST_CASE("table as JSON and CSV") {
  const json r = invoke({"table", "--max-n", "5"}).report();
  REQUIRE(r["result"]["rows"].size() == 5);
  CHECK(r["result"]["rows"][4]["diameter"] == 4);
  CHECK(r["result"]["rows"][4]["histogram"] == json::array({1, 5, 10, 7, 1}));

  const Outcome csv = invoke({"--csv", "table", "--max-n", "4"});
  CHECK(csv.code == cli::kOk);
  CHECK(csv.out ==
        "n,mode,states,diameter,formula,histogram\n"
        "1,adjacent,1,0,0,1\n"
        "2,adjacent,1,0,0,1\n"
        "3,adjacent,2,1,1,1;1\n"
        "4,adjacent,6,2,2,1;4;1\n");
}

TEST_CASE("tvalues: n - 2 attained exactly at primes") {
  const json r = invoke({"tvalues", "--max-n", "11"}).report();
  for (const json& row : r["result"]["rows"]) {
    const std::size_t n = row["n"];
    CHECK(row["attains_n_minus_2"] == circlesort::is_prime(n));
    for (const json& lb : row["lower_bounds"]) CHECK(lb["value"].get<std::int64_t>() <= row["t"].get<std::int64_t>());
  }
  CHECK(r["result"]["rows"][9]["t"] == 9);
}

TEST_CASE("bounds") {
  const json r = invoke({"bounds", "--n", "100"}).report();
  CHECK(r["result"]["f_formula"] == 2450);
  CHECK(r["result"]["general_lower_bound"] == 84);
  const json o = invoke({"bounds", "--n", "7", "--oracle"}).report();
  CHECK(o["result"]["oracle"]["adjacent_diameter"] == 9);
  CHECK(o["result"]["oracle"]["t_n"] == 5);
}

TEST_CASE("verify") {
  const Outcome o = invoke({"verify", "--suite", "p31", "--max-n", "12"});
  CHECK(o.code == cli::kOk);
  CHECK(o.report()["result"]["passed"] == true);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"sort", "--perm", "1 1 2"}).code == cli::kInvalidInput);
  CHECK(invoke({"sort", "--perm", "1 1 2"}).report().contains("error"));
  CHECK(invoke({"frobnicate"}).code == cli::kInvalidInput);
  CHECK(invoke({"diam", "--n", "5", "--mode", "sideways"}).code == cli::kInvalidInput);
  CHECK(invoke({"verify", "--suite", "everything"}).code == cli::kInvalidInput);
  const Outcome budget = invoke({"--max-states", "100", "diam", "--n", "9"});
  CHECK(budget.code == cli::kBudgetRefused);
  CHECK(budget.report()["required_states"] == 40320);
  CHECK(invoke({"--help"}).code == cli::kOk);
}
