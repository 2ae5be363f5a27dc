#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "ecd/cli.hpp"
#include "ecd/io.hpp"

using namespace ecd;
namespace fs = std::filesystem;

namespace {

struct Run {
  int rc;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int rc = cli::run(args, out, err);
  return {rc, out.str(), err.str()};
}

std::string scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "ecd_tests";
  fs::create_directories(dir);
  return (dir / name).string();
}

std::string last_line(const std::string& s) {
  std::istringstream is(s);
  std::string line, last;
  while (std::getline(is, line)) last = line;
  return last;
}

}  // namespace

TEST_CASE("family json round trip") {
  for (const auto& fam : {family_G(Composition({2, 1})), family_Gstar(Composition({3, 2})), family_G_cwc(3, 2),
                          family_Hstar(2, 2)}) {
    const auto j = io::family_to_json(fam);
    const auto back = io::family_from_json(io::Json::parse(j.dump()));
    CHECK(io::family_to_json(back) == j);
    CHECK(back.members.size() == fam.members.size());
  }
}

TEST_CASE("decomposition json round trip") {
  SolveOptions so;
  so.superpure = true;
  const auto dec = solve(family_G(Composition({2, 1})), 5, so).solutions.front();
  const auto j = io::decomposition_to_json(dec);
  const auto back = io::decomposition_from_json(io::Json::parse(j.dump()));
  CHECK(back.blocks == dec.blocks);
  CHECK(verify_decomposition(back).valid);
}

TEST_CASE("code file round trip and errors") {
  const Code code(3, 3, {Codeword(3, {1, 2, 0}), Codeword(3, {0, 1, 2})});
  std::ostringstream os;
  io::write_code(os, code);
  std::istringstream is(os.str());
  const auto back = std::get<Code>(io::read_code(is));
  CHECK(back.words() == code.words());

  McwcCode m{2, 2, 1, {McwcWord(1, {{1, 0}, {0, 1}}), McwcWord(1, {{0, 1}, {1, 0}})}};
  std::ostringstream ms;
  io::write_code(ms, m);
  std::istringstream mi(ms.str());
  CHECK(std::get<McwcCode>(io::read_code(mi)).words == m.words);

  std::istringstream bad("q 3 n 3\n1 2 0\n1 2\n");
  try {
    (void)io::read_code(bad);
    FAIL("expected an error");
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("bound subcommand") {
  auto r = run({"bound", "--kind", "mcwc", "--m", "2", "--n", "5", "--w", "1"});
  CHECK(r.rc == cli::kOk);
  CHECK(r.out.rfind("bound=25\n", 0) == 0);
  r = run({"bound", "--kind", "ccc", "--n", "5", "--composition", "2,1"});
  CHECK(r.out.rfind("bound=5\n", 0) == 0);
  r = run({"bound", "--kind", "ccc", "--n", "5"});
  CHECK(r.rc == cli::kUsage);
  CHECK(r.err.find("--composition") != std::string::npos);
  r = run({"bound", "--kind", "xyz", "--n", "5"});
  CHECK(r.rc == cli::kUsage);
  CHECK(run({"frobnicate"}).rc == cli::kUsage);
}

TEST_CASE("file pipeline through the subcommands") {
  const auto fam = scratch("g21.json"), dec = scratch("g21_dec.json"), code = scratch("g21_code.txt");
  CHECK(run({"family", "--kind", "g", "--params", "2,1", "--out", fam}).rc == cli::kOk);

  auto r = run({"invariants", "--family", fam, "--n", "5"});
  CHECK(r.rc == cli::kOk);
  CHECK(r.out.find("alpha=4\n") != std::string::npos);
  CHECK(r.out.find("beta=4\n") != std::string::npos);
  CHECK(r.out.find("admissible=true\n") != std::string::npos);

  r = run({"search", "--family", fam, "--n", "4", "--superpure"});
  CHECK(r.rc == cli::kFailed);
  CHECK(last_line(r.out) == "UNSAT");

  r = run({"search", "--family", fam, "--n", "5", "--superpure", "--out", dec});
  CHECK(r.rc == cli::kOk);
  CHECK(run({"construct", "--decomposition", dec, "--kind", "ccc2w2", "--out", code}).rc == cli::kOk);

  r = run({"verify", "--code", code, "--d", "4", "--composition", "2,1"});
  CHECK(r.rc == cli::kOk);
  CHECK(r.out.find("verdict=OPTIMAL") != std::string::npos);
  CHECK(run({"verify", "--code", code, "--d", "5"}).rc == cli::kFailed);

  // Files written by the CLI load back.
  CHECK_NOTHROW((void)io::load_family(fam));
  CHECK_NOTHROW((void)io::load_decomposition(dec));
  CHECK_NOTHROW((void)io::load_code(code));
}

TEST_CASE("missing files are reported by name") {
  const auto r = run({"invariants", "--family", "/nonexistent/f.json"});
  CHECK(r.rc != cli::kOk);
  CHECK(r.err.find("/nonexistent/f.json") != std::string::npos);
}

TEST_CASE("pipeline summary") {
  auto r = run({"pipeline", "--kind", "ccc2w2", "--q", "3", "--composition", "2,1", "--n", "5"});
  CHECK(r.rc == cli::kOk);
  CHECK(last_line(r.out) == "bound=5 α=4 β=4 admissible SAT code=5 distance=4 OPTIMAL");
  r = run({"pipeline", "--kind", "ccc2w2", "--params", "2,1", "--n", "4"});
  CHECK(r.rc == cli::kFailed);
  CHECK(r.out.find("UNSAT") != std::string::npos);
}

TEST_CASE("seeded runs are byte-identical") {
  const std::vector<std::string> args = {"pipeline", "--kind", "ccc2w2", "--params", "2,1", "--n", "5", "--seed", "7"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("timeouts exit with 3") {
  const auto fam = scratch("gs21.json");
  CHECK(run({"family", "--kind", "gstar", "--params", "2,1", "--out", fam}).rc == cli::kOk);
  const auto r = run({"search", "--family", fam, "--n", "9", "--superpure", "--mode", "count", "--time-limit", "0.001"});
  CHECK(r.rc == cli::kTimeout);
  CHECK(last_line(r.out) == "TIMEOUT");
}
