#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("dcfold_cli_" + std::to_string(getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  fs::path out = scratch_dir() / ("out" + std::to_string(counter));
  fs::path err = scratch_dir() / ("err" + std::to_string(counter));
  ++counter;
  std::string cmd = std::string(DCFOLD_CLI_PATH) + " " + args + " >" +
                    out.string() + " 2>" + err.string();
  int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("table emits the frozen csv") {
  RunResult r = run_cli("table --theorem 9.4 --max-n 3");
  CHECK(r.code == 0);
  CHECK(r.out == "m,n,filters,mirror_free,folded_orbit,status\n"
                 "1,1,2,2,2,equal\n"
                 "1,2,3,2,2,equal\n"
                 "1,3,4,4,4,equal\n"
                 "2,3,6,4,4,equal\n");

  RunResult again = run_cli("table --theorem 9.4 --max-n 3");
  CHECK(again.out == r.out);

  RunResult asjson = run_cli("table --theorem 9.4 --max-n 3 --json");
  CHECK(asjson.code == 0);
  auto j = nlohmann::json::parse(asjson.out);
  CHECK(j["table"].size() == 4);
}

TEST_CASE("table rejects unknown selectors") {
  CHECK(run_cli("table --theorem 9.9").code == 2);
  CHECK(run_cli("table --max-n 40").code == 2);
}

TEST_CASE("dump-filters counts the two families") {
  RunResult plain = run_cli("dump-filters A 5 --weight 2");
  CHECK(plain.code == 0);
  CHECK(nlohmann::json::parse(plain.out)["count"] == 15);

  RunResult folded = run_cli("dump-filters A 5 --weight 2 --folded");
  CHECK(folded.code == 0);
  CHECK(nlohmann::json::parse(folded.out)["count"] == 12);
}

TEST_CASE("verify passes a single case and reports json") {
  RunResult r = run_cli("verify A 5 --weight 2");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["reports"].size() == 4);

  RunResult triality = run_cli("verify D 4 --weight 1 --sigma triality");
  CHECK(triality.code == 0);
  CHECK(nlohmann::json::parse(triality.out)["pass"] == true);
}

TEST_CASE("verify batch passes at the fast level") {
  RunResult r = run_cli("verify --all");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["reports"].size() > 60);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("build A 5").code == 2);              // missing --weight
  CHECK(run_cli("build Z 3 --weight 1").code == 2);   // no such type
  CHECK(run_cli("verify A 5").code == 2);             // missing --weight
  CHECK(run_cli("verify --all A 5 --weight 2").code == 2);
  CHECK(run_cli("verify B 3 --weight 3").code == 2);  // not minuscule
  CHECK(run_cli("verify E 7 --weight 6 --sigma swap").code == 2);
  CHECK(run_cli("dump-filters A 5 --weight 2 --sigma swap").code == 2);
  CHECK(run_cli("build A 2 --weight 1 --sigma triality --folded").code == 2);
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("build --help").code == 0);
}

TEST_CASE("build writes deterministic artifacts") {
  fs::path dir = scratch_dir() / "artifacts";
  RunResult r = run_cli("build A 5 --weight 2 --folded --out " + dir.string());
  CHECK(r.code == 0);

  for (const char* name :
       {"A5_L2.poset.json", "A5_L2.poset.dot", "A5_L2.colored.json",
        "A5_L2.orbit.json", "A5_L2.orbit.dot", "A5_L2.bridge.json",
        "A5_L2.pair.dot", "A5_L2.folded.orbit.json", "A5_L2.folded.orbit.dot",
        "A5_L2.folded.filters.json", "A5_L2.folded.pair.dot"})
    CHECK_MESSAGE(fs::exists(dir / name), name);

  auto bridge = nlohmann::json::parse(slurp(dir / "A5_L2.bridge.json"));
  CHECK(bridge["orbit"]["nodes"].size() == 15);
  CHECK(bridge["f_table"].size() == 15);

  std::string first = slurp(dir / "A5_L2.orbit.json");
  fs::path dir2 = scratch_dir() / "artifacts2";
  RunResult again =
      run_cli("build A 5 --weight 2 --folded --out " + dir2.string());
  CHECK(again.code == 0);
  CHECK(slurp(dir2 / "A5_L2.orbit.json") == first);

  RunResult e6 = run_cli("build E 6 --weight 1 --out " + dir.string());
  CHECK(e6.code == 0);
  auto orbit = nlohmann::json::parse(slurp(dir / "E6_L1.orbit.json"));
  CHECK(orbit["nodes"].size() == 27);

  RunResult tiny = run_cli("build A 1 --weight 1 --out " + dir.string());
  CHECK(tiny.code == 0);
  auto small = nlohmann::json::parse(slurp(dir / "A1_L1.poset.json"));
  CHECK(small["n"] == 1);
}

} // TEST_SUITE
