#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gcfib/cli.hpp"

using namespace gcfib::cli;

namespace {
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& contents)
      : path((std::filesystem::temp_directory_path() / ("gcfib_cli_" + name)).string()) {
    std::ofstream(path) << contents;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(CliConfig c) {
  std::ostringstream out, err;
  const int code = run(c, out, err);
  return {code, out.str(), err.str()};
}

CliConfig with_input(const std::string& sub, const std::string& path) {
  CliConfig c;
  c.subcommand = sub;
  c.input_path = path;
  return c;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }
}  // namespace

TEST_CASE("pfaffian subcommand") {
  TempFile f("pf.txt", "# singular 4x4 skew matrix\n0 1 1 0\n-1 0 0 1\n-1 0 0 1\n0 -1 -1 0\n");
  const Result r = invoke(with_input("pfaffian", f.path));
  CHECK(r.code == kOk);
  CHECK(contains(r.out, "pfaffian_combinatorial: 0\n"));
  CHECK(contains(r.out, "pfaffian_exact: 0\n"));

  TempFile g("pf2.txt", "0 1/2\n-1/2 0\n");
  CHECK(contains(invoke(with_input("pfaffian", g.path)).out, "pfaffian_exact: 1/2\n"));
}

TEST_CASE("pfaffian rejects non-skew and malformed input") {
  TempFile nonskew("ns.txt", "0 1\n2 0\n");
  const Result r = invoke(with_input("pfaffian", nonskew.path));
  CHECK(r.code == kInvalidInput);
  CHECK(contains(r.err, "(1,2)"));
  CHECK(r.out.empty());

  TempFile odd("odd.txt", "0 1 2\n-1 0 3\n-2 -3 0\n");
  CHECK(invoke(with_input("pfaffian", odd.path)).code == kInvalidInput);

  TempFile ragged("rag.txt", "0 1\n-1\n");
  const Result rr = invoke(with_input("pfaffian", ragged.path));
  CHECK(rr.code == kParseError);
  CHECK(contains(rr.err, "line 2"));

  CHECK(invoke(with_input("pfaffian", "/nonexistent/gcfib.txt")).code == kParseError);
  CliConfig none;
  none.subcommand = "pfaffian";
  CHECK(invoke(none).code == kUsage);
}

TEST_CASE("eigs subcommand") {
  TempFile f("eig.txt", "3 -2\n5 1\n");
  const Result r = invoke(with_input("eigs", f.path));
  CHECK(r.code == kOk);
  CHECK(contains(r.out, "has_real_eigenvalue: false\n"));
  CHECK(contains(r.out, "criterion_2x2_no_real_eigenvalues: true\n"));
}

TEST_CASE("counterexample and hopf subcommands") {
  CliConfig c;
  c.subcommand = "counterexample";
  c.n = 2;
  const Result r = invoke(c);
  CHECK(r.code == kOk);
  CHECK(contains(r.out, "is_local_fibration: true\n"));
  CHECK(contains(r.out, "is_contact_at_origin: false\n"));
  CHECK(contains(r.out, "NON-CONTACT FIBRATION"));

  c.n = 1;
  const Result refused = invoke(c);
  CHECK(refused.code == kUnsupported);
  CHECK(contains(refused.err, "refused"));

  CliConfig h;
  h.subcommand = "hopf";
  h.n = 2;
  CHECK(contains(invoke(h).out, "contact_defect: 8\n"));
  h.n = 0;
  CHECK(invoke(h).code == kUsage);
}

TEST_CASE("written germ feeds analyze and validate") {
  const std::string path = (std::filesystem::temp_directory_path() / "gcfib_cli_ce3.germ").string();
  CliConfig c;
  c.subcommand = "counterexample";
  c.n = 3;
  c.out_path = path;
  REQUIRE(invoke(c).code == kOk);

  const Result a = invoke(with_input("analyze", path));
  CHECK(a.code == kOk);
  CHECK(contains(a.out, "pfaffian: 0\n"));
  const Result v = invoke(with_input("validate", path));
  CHECK(v.code == kOk);
  CHECK_FALSE(contains(v.out, "FAIL"));
  std::filesystem::remove(path);
}

TEST_CASE("validate and analyze reject invalid germs") {
  TempFile f("bad.germ", "n 1\nterm 1 20 1 0\n");
  CHECK(invoke(with_input("validate", f.path)).code == kInvalidInput);
  TempFile p("bad2.germ", "n 1\nterm 5 1 1 0\n");
  const Result r = invoke(with_input("analyze", p.path));
  CHECK(r.code == kParseError);
  CHECK(contains(r.err, "line 2"));
}

TEST_CASE("tube-sample is deterministic and checks its radius") {
  TempFile f("hopf.germ", "n 1\nterm 1 -1 0 1\nterm 2 1 1 0\n");
  CliConfig c = with_input("tube-sample", f.path);
  c.samples = 20;
  c.seed = 3;
  const Result a = invoke(c), b = invoke(c);
  CHECK(a.code == kOk);
  CHECK(a.out == b.out);
  c.radius = 0.5;
  CHECK(invoke(c).code == kInvalidInput);
  c.radius = 0.05;
  c.samples = 0;
  CHECK(invoke(c).code == kUsage);
}

TEST_CASE("json output is one parseable object") {
  CliConfig c;
  c.subcommand = "hopf";
  c.n = 1;
  c.format = OutputFormat::kJsonLines;
  const Result r = invoke(c);
  REQUIRE(r.code == kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["report"]["is_contact_at_origin"] == true);
  CHECK(j["report"]["pfaffian"] == 2.0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);
}

TEST_CASE("unknown subcommand") { CHECK(invoke(CliConfig{}).code == kUsage); }
