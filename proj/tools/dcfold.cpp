#include "dcfold/serialize.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

using namespace dcfold;
namespace fs = std::filesystem;

namespace {

// Exit code contract: 0 all checks pass, 1 a mathematical check failed,
// 2 the invocation did not name a valid case.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CaseArgs {
  std::string type;
  int rank = 0;
  int weight = 0;
  std::string sigma = "swap";
};

LieType parse_type(const std::string& s) {
  static const std::map<std::string, LieType> table = {
      {"A", LieType::A}, {"B", LieType::B}, {"C", LieType::C},
      {"D", LieType::D}, {"E", LieType::E}, {"F", LieType::F},
      {"G", LieType::G}};
  auto it = table.find(s);
  if (it == table.end()) throw UsageError("unknown type letter " + s);
  return it->second;
}

std::vector<int> sigma_of(const RootSystem& rs, const std::string& choice) {
  if (choice == "swap") return diagram_flip(rs);
  if (choice == "triality") return diagram_flip(rs, true);
  throw UsageError("--sigma must be swap or triality");
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  std::cout << "wrote " << path.string() << "\n";
}

int cmd_build(const CaseArgs& args, const std::string& out_dir, bool folded,
              bool sigma_given) {
  if (sigma_given && !folded)
    throw UsageError("--sigma only applies together with --folded");
  RootSystem rs(parse_type(args.type), args.rank);
  MinusculePoset mp = build_minuscule_poset(rs, args.weight);
  fs::path dir(out_dir);
  fs::create_directories(dir);
  std::string base = rs.name() + "_L" + std::to_string(args.weight);

  write_file(dir / (base + ".poset.json"), poset_json(mp.colored.poset()));
  write_file(dir / (base + ".poset.dot"), poset_dot(mp.colored.poset()));
  write_file(dir / (base + ".colored.json"), colored_poset_json(mp.colored));
  write_file(dir / (base + ".orbit.json"), orbit_json(mp.orbit));
  write_file(dir / (base + ".orbit.dot"), orbit_dot(mp.orbit));
  write_file(dir / (base + ".bridge.json"), bridge_json(mp));
  write_file(dir / (base + ".pair.dot"),
             orbit_and_filters_dot(mp.orbit, mp.colored,
                                   order_filters(mp.colored.poset())));

  if (folded) {
    Folding fd = make_folding(rs, sigma_of(rs, args.sigma));
    FoldedOrbit fo = build_folded_orbit(fd, rs.fundamental_weight(args.weight));
    ColoredPoset fcp(mp.colored.poset(), fold_colors(fd, mp.colored));
    std::vector<Mask> closure = toggle_closure(fcp, 0);
    write_file(dir / (base + ".folded.orbit.json"), orbit_json(fo.orbit));
    write_file(dir / (base + ".folded.orbit.dot"), orbit_dot(fo.orbit));
    write_file(dir / (base + ".folded.filters.json"), filters_json(closure));
    write_file(dir / (base + ".folded.pair.dot"),
               orbit_and_filters_dot(fo.orbit, fcp, closure));
  }
  return 0;
}

// The checks run for one named case: the orbit-filter correspondence, the
// toggle algebra, the folded correspondence when the diagram has the
// symmetry, and the rectangle index-set story for type A.
std::vector<CheckReport> case_reports(const CaseArgs& args, bool sigma_given) {
  RootSystem rs(parse_type(args.type), args.rank);
  std::vector<CheckReport> reports;
  reports.push_back(verify_minuscule_correspondence(rs, args.weight));

  bool foldable = true;
  std::vector<int> sigma;
  try {
    sigma = sigma_of(rs, args.sigma);
  } catch (const std::invalid_argument&) {
    if (sigma_given)
      throw UsageError(rs.name() + " has no such diagram symmetry");
    foldable = false;
  }
  if (foldable)
    reports.push_back(verify_folded_isomorphism(rs, args.weight, sigma));

  if (rs.type() == LieType::A && rs.rank() >= 2 &&
      2 * args.weight <= rs.rank() + 1) {
    int cols = rs.rank() + 1 - args.weight;
    reports.push_back(verify_index_step_rules(args.weight, cols));
    reports.push_back(verify_mirror_free_equality(args.weight, cols));
  }
  return reports;
}

void batch_cases(std::vector<CaseArgs>& out, const std::string& type, int rank,
                 std::initializer_list<int> weights,
                 std::initializer_list<const char*> sigmas = {"swap"}) {
  for (const char* s : sigmas)
    for (int w : weights) out.push_back({type, rank, w, s});
}

std::vector<CaseArgs> batch_list(const std::string& level) {
  std::vector<CaseArgs> cases;
  batch_cases(cases, "A", 2, {1, 2});
  batch_cases(cases, "A", 3, {1, 2, 3});
  batch_cases(cases, "A", 4, {1, 2, 3, 4});
  batch_cases(cases, "A", 5, {1, 2, 3, 4, 5});
  batch_cases(cases, "A", 6, {1, 2, 3, 4, 5, 6});
  batch_cases(cases, "D", 4, {1, 3, 4}, {"swap", "triality"});
  batch_cases(cases, "D", 5, {1, 4, 5});
  batch_cases(cases, "E", 6, {1, 5});
  if (level == "slow") {
    batch_cases(cases, "A", 7, {1, 2, 3, 4, 5, 6, 7});
    batch_cases(cases, "A", 8, {1, 2, 3, 4, 5, 6, 7, 8});
    batch_cases(cases, "D", 6, {1, 5, 6});
    batch_cases(cases, "E", 7, {6});
  }
  return cases;
}

int emit_reports(const std::vector<CheckReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  bool pass = true;
  for (const CheckReport& rep : reports) {
    arr.push_back(nlohmann::json::parse(report_json(rep)));
    pass = pass && rep.ok();
  }
  nlohmann::json j;
  j["schema"] = "1";
  j["pass"] = pass;
  j["reports"] = arr;
  std::cout << j.dump(2) << "\n";
  return pass ? 0 : 1;
}

int cmd_verify(const CaseArgs& args, bool all, const std::string& level,
               bool sigma_given) {
  std::vector<CheckReport> reports;
  if (all) {
    for (const CaseArgs& c : batch_list(level)) {
      bool forced = c.sigma == "triality";
      for (CheckReport& rep : case_reports(c, forced))
        reports.push_back(std::move(rep));
    }
  } else {
    reports = case_reports(args, sigma_given);
  }
  return emit_reports(reports);
}

int cmd_table(const std::string& theorem, int max_n, bool as_json) {
  if (theorem != "9.4")
    throw UsageError("the only table is --theorem 9.4");
  std::vector<RectangleRow> rows = rectangle_table(max_n);
  std::cout << (as_json ? rectangle_table_json(rows) : rectangle_csv(rows));
  return 0;
}

int cmd_dump_filters(const CaseArgs& args, bool folded, bool sigma_given) {
  RootSystem rs(parse_type(args.type), args.rank);
  MinusculePoset mp = build_minuscule_poset(rs, args.weight);
  if (!folded) {
    if (sigma_given) throw UsageError("--sigma only applies with --folded");
    std::cout << filters_json(order_filters(mp.colored.poset()));
    return 0;
  }
  Folding fd = make_folding(rs, sigma_of(rs, args.sigma));
  ColoredPoset fcp(mp.colored.poset(), fold_colors(fd, mp.colored));
  std::cout << filters_json(toggle_closure(fcp, 0));
  return 0;
}

void add_case_options(CLI::App* sub, CaseArgs& args, bool required) {
  auto* t = sub->add_option("type", args.type, "Dynkin type letter (A..G)");
  auto* r = sub->add_option("rank", args.rank, "rank of the diagram");
  auto* w = sub->add_option("--weight", args.weight,
                            "fundamental weight index (1-based node)");
  if (required) {
    t->required();
    r->required();
    w->required();
  }
  sub->add_option("--sigma", args.sigma,
                  "diagram symmetry: swap (default) or triality (D_4 only)")
      ->check(CLI::IsMember({"swap", "triality"}));
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"build, verify and export minuscule posets and their foldings"};
  app.require_subcommand(1);

  CaseArgs build_args, verify_args, dump_args;
  std::string out_dir = ".";
  bool build_folded = false;
  bool verify_all = false;
  std::string level = "fast";
  std::string theorem = "9.4";
  int max_n = 8;
  bool table_json = false;
  bool dump_folded = false;

  CLI::App* build = app.add_subcommand("build", "write poset and orbit artifacts");
  add_case_options(build, build_args, true);
  build->add_option("--out", out_dir, "output directory");
  build->add_flag("--folded", build_folded, "also write the folded artifacts");

  CLI::App* verify = app.add_subcommand("verify", "run the assertion suites");
  add_case_options(verify, verify_args, false);
  verify->add_flag("--all", verify_all, "run the whole batch of cases");
  verify->add_option("--level", level, "batch size: fast or slow")
      ->check(CLI::IsMember({"fast", "slow"}));

  CLI::App* table = app.add_subcommand("table", "emit the rectangle count table");
  table->add_option("--theorem", theorem, "which table to emit (only 9.4)");
  table->add_option("--max-n", max_n, "largest path rank to scan")
      ->check(CLI::Range(1, 12));
  table->add_flag("--json", table_json, "emit JSON instead of CSV");

  CLI::App* dump = app.add_subcommand("dump-filters", "list filters as JSON");
  add_case_options(dump, dump_args, true);
  dump->add_flag("--folded", dump_folded,
                 "list the filters reachable by folded toggles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(build))
      return cmd_build(build_args, out_dir, build_folded,
                       build->count("--sigma") > 0);
    if (app.got_subcommand(verify)) {
      if (!verify_all && verify->count("type") == 0)
        throw UsageError("verify needs a case or --all");
      if (verify_all && verify->count("type") > 0)
        throw UsageError("verify takes a case or --all, not both");
      if (!verify_all && verify->count("--weight") == 0)
        throw UsageError("verify needs --weight");
      return cmd_verify(verify_args, verify_all, level,
                        verify->count("--sigma") > 0);
    }
    if (app.got_subcommand(table)) return cmd_table(theorem, max_n, table_json);
    if (app.got_subcommand(dump))
      return cmd_dump_filters(dump_args, dump_folded, dump->count("--sigma") > 0);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
