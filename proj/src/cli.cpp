#include "circlesort/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "circlesort/adjsort.hpp"
#include "circlesort/allswaps.hpp"
#include "circlesort/number_theory.hpp"
#include "circlesort/oracle.hpp"
#include "circlesort/probbound.hpp"
#include "circlesort/verify.hpp"

namespace circlesort::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string cache_dir;
  std::uint64_t max_states = SearchConfig{}.max_states;
  bool csv = false;

  std::string perm;
  std::string mode = "adjacent";
  bool bfs = false;
  std::size_t n = 0;
  std::size_t max_n = 0;
  bool oracle = false;
  std::string suite;
  std::size_t samples = 10000;
};

class VerificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SearchConfig search_config(const Options& o) {
  SearchConfig cfg;
  cfg.max_states = o.max_states;
  if (!o.cache_dir.empty()) {
    cfg.cache_dir = o.cache_dir;
  } else if (const char* env = std::getenv("CIRCLESORT_CACHE"); env && *env) {
    cfg.cache_dir = env;
  }
  return cfg;
}

json lower_bounds_json(const std::vector<LowerBound>& bounds) {
  json out = json::array();
  for (const auto& lb : bounds) out.push_back({{"source", lb.source}, {"value", lb.value}});
  return out;
}

std::string csv_histogram(const std::vector<std::uint64_t>& h) {
  std::ostringstream os;
  for (std::size_t d = 0; d < h.size(); ++d) os << (d ? ";" : "") << h[d];
  return os.str();
}

json cmd_sort(const Options& o) {
  const Arrangement a = Arrangement::parse(o.perm);
  const SwapSequence seq = sort_cyclic(a);
  json moves = json::array();
  for (const AdjSwap& s : std::get<std::vector<AdjSwap>>(seq.moves)) moves.push_back(s.pos);
  const Arrangement end = replay(a, seq);
  return {{"n", a.size()},
          {"moves", moves},
          {"length", seq.size()},
          {"bound", f_formula(a.size())},
          {"final", end.to_string()},
          {"final_is_trivial_class", canonicalize(end).is_trivial()}};
}

json cmd_dist(const Options& o) {
  const Arrangement a = Arrangement::parse(o.perm);
  const Mode mode = parse_mode(o.mode);
  const SearchConfig cfg = search_config(o);
  json result = {{"n", a.size()}, {"mode", to_string(mode)}};
  if (mode == Mode::AllSwap) {
    const CosetReport rep = t_class(Perm::from_arrangement(a));
    result["distance"] = rep.t_value;
    result["method"] = "coset";
    result["shift_cycle_counts"] = rep.shift_cycle_counts;
    if (o.bfs) {
      const unsigned bfs = distance(a, mode, cfg);
      result["bfs_distance"] = bfs;
      result["agree"] = bfs == rep.t_value;
    }
  } else {
    result["distance"] = distance(a, mode, cfg);
    result["method"] = "bfs";
  }
  return result;
}

json diameter_row(std::size_t n, Mode mode, const SearchConfig& cfg, const DistanceTable& table) {
  json row = {{"n", n},
              {"mode", to_string(mode)},
              {"states", table.size()},
              {"diameter", table.diameter()},
              {"histogram", table.histogram()}};
  if (mode == Mode::Adjacent) {
    row["formula"] = f_formula(n);
    row["matches"] = table.diameter() == f_formula(n);
  } else if (mode == Mode::AllSwap) {
    const std::size_t t = t_exhaustive(n, cfg.max_states).t_n;
    row["formula"] = t;
    row["upper_bound"] = n >= 2 ? n - 2 : 0;
    row["matches"] = table.diameter() == t;
  } else {
    row["formula"] = nullptr;
  }
  return row;
}

json cmd_diam(const Options& o) {
  const Mode mode = parse_mode(o.mode);
  const SearchConfig cfg = search_config(o);
  return diameter_row(o.n, mode, cfg, distance_table(o.n, mode, cfg));
}

json cmd_table(const Options& o, std::ostream& out) {
  const Mode mode = parse_mode(o.mode);
  const SearchConfig cfg = search_config(o);
  json rows = json::array();
  for (std::size_t n = 1; n <= o.max_n; ++n) rows.push_back(diameter_row(n, mode, cfg, distance_table(n, mode, cfg)));
  if (o.csv) {
    out << "n,mode,states,diameter,formula,histogram\n";
    for (const auto& r : rows) {
      out << r["n"].get<std::size_t>() << ',' << r["mode"].get<std::string>() << ','
          << r["states"].get<std::uint64_t>() << ',' << r["diameter"].get<unsigned>() << ','
          << (r["formula"].is_null() ? std::string() : r["formula"].dump()) << ','
          << csv_histogram(r["histogram"].get<std::vector<std::uint64_t>>()) << '\n';
    }
    return nullptr;
  }
  return {{"rows", rows}};
}

json cmd_tvalues(const Options& o, std::ostream& out) {
  const SearchConfig cfg = search_config(o);
  json rows = json::array();
  for (std::size_t n = 2; n <= o.max_n; ++n) {
    const TnRecord rec = t_exhaustive(n, cfg.max_states);
    rows.push_back({{"n", n},
                    {"t", rec.t_n},
                    {"n_minus_2", n - 2},
                    {"is_prime", rec.is_prime},
                    {"attains_n_minus_2", rec.t_n == n - 2},
                    {"lower_bounds", lower_bounds_json(rec.lower_bounds)},
                    {"witness", rec.argmax_class.to_arrangement().to_string()}});
  }
  if (o.csv) {
    out << "n,t,n_minus_2,is_prime,attains_n_minus_2,prime_power,two_pk,two_power,general,witness\n";
    for (const auto& r : rows) {
      std::map<std::string, std::string> bounds;
      for (const auto& lb : r["lower_bounds"]) bounds[lb["source"]] = lb["value"].dump();
      out << r["n"].get<std::size_t>() << ',' << r["t"].get<std::size_t>() << ','
          << r["n_minus_2"].get<std::size_t>() << ',' << r["is_prime"].dump() << ','
          << r["attains_n_minus_2"].dump() << ',' << bounds["prime_power"] << ',' << bounds["two_pk"]
          << ',' << bounds["two_power"] << ',' << bounds["general"] << ','
          << r["witness"].get<std::string>() << '\n';
    }
    return nullptr;
  }
  return {{"rows", rows}};
}

json cmd_bounds(const Options& o) {
  const std::size_t n = o.n;
  if (n < 2) throw std::invalid_argument("bounds needs n >= 2");
  json result = {{"n", n},
                 {"is_prime", is_prime(n)},
                 {"f_formula", f_formula(n)},
                 {"t_upper_bound", n - 2},
                 {"t_lower_bounds", lower_bounds_json(lower_bound_t(n))},
                 {"general_lower_bound", general_lower_bound(n)}};
  if (o.oracle) {
    const SearchConfig cfg = search_config(o);
    result["oracle"] = {{"adjacent_diameter", diameter(n, Mode::Adjacent, cfg)},
                        {"t_n", t_exhaustive(n, cfg.max_states).t_n}};
  }
  return result;
}

json cmd_verify(const Options& o) {
  std::optional<std::size_t> max_n;
  if (o.max_n > 0) max_n = o.max_n;
  const verify::SuiteResult suite = verify::run_suite(o.suite, max_n, search_config(o), o.samples);
  json checks = json::array();
  for (const auto& c : suite.checks) {
    checks.push_back({{"criterion", c.criterion},
                      {"name", c.name},
                      {"passed", c.passed},
                      {"seconds", c.seconds},
                      {"details", c.details},
                      {"failures", c.failures}});
  }
  return {{"suite", suite.suite}, {"passed", suite.passed()}, {"checks", checks}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sorting labeled points on a circle by swaps"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--cache-dir", o.cache_dir, "Directory for cached distance tables");
  app.add_option("--max-states", o.max_states, "Refuse searches with more states than this")
      ->check(CLI::PositiveNumber);
  app.add_flag("--csv", o.csv, "CSV instead of JSON for tabular commands");

  auto* sort = app.add_subcommand("sort", "Adjacent-swap sequence to the trivial class");
  sort->add_option("--perm", o.perm, "Labels, vertex 0 first")->required();

  auto* dist = app.add_subcommand("dist", "Exact distance to the trivial class");
  dist->add_option("--perm", o.perm, "Labels, vertex 0 first")->required();
  dist->add_option("--mode", o.mode, "adjacent | allswap")
      ->check(CLI::IsMember({"adjacent", "allswap"}));
  dist->add_flag("--bfs", o.bfs, "Cross-check the coset formula with BFS (allswap)");

  auto* diam = app.add_subcommand("diam", "Diameter of the class graph");
  diam->add_option("--n", o.n, "Circle size")->required()->check(CLI::PositiveNumber);
  diam->add_option("--mode", o.mode, "adjacent | allswap | affine")
      ->check(CLI::IsMember({"adjacent", "allswap", "affine"}));

  auto* table = app.add_subcommand("table", "Diameters and distance histograms for n = 1..max-n");
  table->add_option("--max-n", o.max_n, "Largest n")->required()->check(CLI::PositiveNumber);
  table->add_option("--mode", o.mode, "adjacent | allswap | affine")
      ->check(CLI::IsMember({"adjacent", "allswap", "affine"}));

  auto* tvalues = app.add_subcommand("tvalues", "All-swaps sorting time t(n) for n = 2..max-n");
  tvalues->add_option("--max-n", o.max_n, "Largest n")->required()->check(CLI::Range(2, 20));

  auto* bounds = app.add_subcommand("bounds", "Formula values and bounds for one n");
  bounds->add_option("--n", o.n, "Circle size")->required()->check(CLI::Range(2, 1 << 30));
  bounds->add_flag("--oracle", o.oracle, "Include exhaustive search results");

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", o.suite, "upper | lower | allswap | conjectures | p31")
      ->required()
      ->check(CLI::IsMember({"upper", "lower", "allswap", "conjectures", "p31"}));
  verify_cmd->add_option("--max-n", o.max_n, "Largest n (suite default when omitted)");
  verify_cmd->add_option("--samples", o.samples, "Random arrangements per size (upper suite)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  json report = {{"tool", "circlesort"}, {"version", kVersion}, {"command", command}};
  json input = json::object();
  for (const std::string& a : args) input["argv"].push_back(a);
  report["input"] = input;

  int code = kOk;
  try {
    json result;
    if (command == "sort") result = cmd_sort(o);
    else if (command == "dist") result = cmd_dist(o);
    else if (command == "diam") result = cmd_diam(o);
    else if (command == "table") result = cmd_table(o, out);
    else if (command == "tvalues") result = cmd_tvalues(o, out);
    else if (command == "bounds") result = cmd_bounds(o);
    else result = cmd_verify(o);

    if (result.is_null()) return kOk;  // CSV already written
    report["result"] = result;
    if (command == "verify" && !result["passed"].get<bool>()) code = kVerificationFailed;
  } catch (const BudgetExceeded& e) {
    report["error"] = e.what();
    report["required_states"] = e.required();
    report["max_states"] = e.cap();
    err << "circlesort: " << e.what() << '\n';
    code = kBudgetRefused;
  } catch (const std::invalid_argument& e) {
    report["error"] = e.what();
    err << "circlesort: " << e.what() << '\n';
    code = kInvalidInput;
  } catch (const std::domain_error& e) {
    report["error"] = e.what();
    err << "circlesort: " << e.what() << '\n';
    code = kInvalidInput;
  } catch (const std::out_of_range& e) {
    report["error"] = e.what();
    err << "circlesort: " << e.what() << '\n';
    code = kInvalidInput;
  }
  out << report.dump(2) << '\n';
  return code;
}

}  // namespace circlesort::cli
