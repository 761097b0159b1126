#pragma once

// Command-line front end. Kept as a function over streams so the tests can
// drive it without spawning a process.
//
//   rcc11 tables   [--golden FILE] [--calculus rcc11|rcc7] [--out FILE]
//   rcc11 verify   SUITE [--seed N] [--depth D] [--trials N] [--budget N] [--k K] [--out FILE]
//   rcc11 classify SCENE [--matrices] [--out FILE]
//   rcc11 solve    NETWORK [--scenario] [--out FILE]
//
// Exit codes: 0 ok, 1 verification failure, 2 usage/parse/I-O error,
// 3 inconsistent network.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rcc11/calculus.hpp"
#include "rcc11/comp_table.hpp"
#include "rcc11/derive.hpp"
#include "rcc11/golden_table.hpp"
#include "rcc11/netcsp.hpp"
#include "rcc11/scene.hpp"
#include "rcc11/verify.hpp"

namespace rcc11::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kInconsistent = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to the file when a path is given, otherwise to `out`.
inline void emit(const std::string& path, std::ostream& out, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write '" + path + "'");
  f << text;
  if (!f) throw IoError("write to '" + path + "' failed");
}

inline std::string cell_text(const Cell& c) {
  std::string s;
  for (BaseRel r : c.entries) {
    if (!s.empty()) s += '|';
    s += token(r);
    if (c.marked.contains(r)) s += '*';
  }
  return s.empty() ? "{}" : s;
}

inline int cmd_tables(const std::string& golden_path, const std::string& calc_name, const std::string& out_path,
                      std::ostream& out, std::ostream& err) {
  const auto name = parse_calculus_name(calc_name);
  if (!name) {
    err << "unknown calculus '" << calc_name << "'\n";
    return kUsage;
  }
  CompTable golden;
  try {
    golden = golden_path.empty() ? golden_table() : table_from_string(read_file(golden_path));
  } catch (const TableParseError& e) {
    err << golden_path << ": " << e.what() << '\n';
    return kUsage;
  }
  const CompTable derived = derive_table(standard_generators());
  const ValidationReport v = validate_table(derived);
  const auto diffs = diff_tables(golden, derived);

  nlohmann::json rep;
  rep["generator_count"] = kGeneratorPairs.size();
  rep["identities_checked"] = v.identities_checked;
  rep["violations"] = nlohmann::json::array();
  for (const auto& x : v.violations)
    rep["violations"].push_back({{"law", law_name(x.law)},
                                 {"cell", std::string(token(x.row)) + "," + std::string(token(x.col))},
                                 {"expected", cell_text(x.expected)},
                                 {"actual", cell_text(x.actual)}});
  rep["equals_golden"] = diffs.empty();
  rep["diff"] = nlohmann::json::array();
  for (const auto& d : diffs)
    rep["diff"].push_back({{"cell", std::string(token(d.row)) + "," + std::string(token(d.col))},
                           {"golden", cell_text(d.expected)},
                           {"derived", cell_text(d.actual)}});
  const Calculus& c = calculus(*name);
  try {
    const ReductionStats st = reduction_stats(c);
    rep["reduction"] = {{"calculus", c.display_name()},
                        {"relations", st.r},
                        {"s", st.s},
                        {"m", st.m},
                        {"n", st.n},
                        {"T", st.total},
                        {"ratio", std::to_string(st.ratio_num) + "/" + std::to_string(st.ratio_den)},
                        {"below_one_eighth", st.ratio_num * 8 < st.ratio_den}};
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  if (!out_path.empty()) emit(out_path, out, table_to_string(derived));
  out << rep.dump(2) << '\n';
  return v.valid() && diffs.empty() ? kOk : kFailed;
}

inline int cmd_verify(const std::string& suite, const verify::Options& opts, const std::string& out_path,
                      std::ostream& out, std::ostream& err) {
  std::optional<verify::SuiteReport> rep;
  try {
    rep = verify::run_suite(suite, opts);
  } catch (const std::invalid_argument& e) {
    err << "verify " << suite << ": " << e.what() << '\n';
    return kUsage;
  }
  if (!rep) {
    err << "unknown suite '" << suite << "'; expected one of:";
    for (auto n : verify::kSuiteNames) err << ' ' << n;
    err << '\n';
    return kUsage;
  }
  emit(out_path, out, rep->to_json().dump(2) + "\n");
  return rep->passed() ? kOk : kFailed;
}

inline int cmd_classify(const std::string& path, bool matrices, const std::string& out_path, std::ostream& out,
                        std::ostream& err) {
  scene::Scene sc;
  try {
    sc = scene::parse_scene(read_file(path));
  } catch (const scene::SceneError& e) {
    err << path << ":" << e.line << ":" << e.column << ": " << e.what() << '\n';
    return kUsage;
  }
  // only disks carry 9-intersection data
  const bool with = matrices && sc.model == scene::Model::Disk;
  emit(out_path, out, scene::rows_to_csv(scene::classify_scene(sc, with), with));
  return kOk;
}

inline int cmd_solve(const std::string& path, bool scenario, const std::string& out_path, std::ostream& out,
                     std::ostream& err) {
  netcsp::Network net(0);
  try {
    net = netcsp::parse_network(read_file(path));
  } catch (const netcsp::NetworkParseError& e) {
    err << path << ": " << e.what() << '\n';
    return kUsage;
  }
  const auto result = scenario ? netcsp::scenario_search(net) : netcsp::closure(net);
  if (!result) {
    emit(out_path, out, scenario ? "none\n" : "inconsistent\n");
    return kInconsistent;
  }
  emit(out_path, out, netcsp::to_json(*result).dump(2) + "\n");
  return kOk;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"RCC11 tables, models and constraint networks"};
  app.require_subcommand(1);

  std::string out_path;
  auto* tables = app.add_subcommand("tables", "derive the composition table and check it");
  std::string golden_path, calc_name = "rcc11";
  tables->add_option("--golden", golden_path, "table file to compare against (default: built in)");
  tables->add_option("--calculus", calc_name, "calculus for the reduction statistics (rcc11, rcc7)");
  tables->add_option("--out", out_path, "write the derived table here");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify::Options opts;
  int depth = 0, trials = 0, budget = 0, k = 0;
  ver->add_option("suite", suite, "suite name")->required();
  ver->add_option("--seed", opts.seed, "random seed")->default_val(0);
  auto* o_depth = ver->add_option("--depth", depth, "model depth")->check(CLI::PositiveNumber);
  auto* o_trials = ver->add_option("--trials", trials, "samples or instances")->check(CLI::PositiveNumber);
  auto* o_budget = ver->add_option("--budget", budget, "witness search budget")->check(CLI::PositiveNumber);
  auto* o_k = ver->add_option("--k", k, "longest chain for bw-chains")->check(CLI::PositiveNumber);
  ver->add_option("--out", out_path, "write the report here");

  auto* cls = app.add_subcommand("classify", "classify every ordered pair of a scene");
  std::string scene_path;
  bool matrices = false;
  cls->add_option("scene", scene_path, "scene file")->required();
  cls->add_flag("--matrices", matrices, "append 9-intersection matrices (disk scenes)");
  cls->add_option("--out", out_path, "write the CSV here");

  auto* sol = app.add_subcommand("solve", "algebraic closure of a constraint network");
  std::string net_path;
  bool scenario = false;
  sol->add_option("network", net_path, "network file")->required();
  sol->add_flag("--scenario", scenario, "search for an atomic scenario");
  sol->add_option("--out", out_path, "write the result here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (o_depth->count()) opts.depth = depth;
  if (o_trials->count()) opts.trials = trials;
  if (o_budget->count()) opts.budget = budget;
  if (o_k->count()) opts.k = k;

  try {
    if (*tables) return detail::cmd_tables(golden_path, calc_name, out_path, out, err);
    if (*ver) return detail::cmd_verify(suite, opts, out_path, out, err);
    if (*cls) return detail::cmd_classify(scene_path, matrices, out_path, out, err);
    if (*sol) return detail::cmd_solve(net_path, scenario, out_path, out, err);
  } catch (const IoError& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace rcc11::cli
