#include "orecalc/cli.hpp"

#include "support.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace orecalc;
using namespace orecalc::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_command(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir(const char* name) {
  auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("normalize") {
  CHECK(run({"normalize", "-a", "weyl1", "x*t"}).out == "t*x + 1\n");
  CHECK(run({"normalize", "-a", "so13jk", "J2*J1"}).out == "J1*J2 + i*J3\n");
  CHECK(run({"normalize", "-a", "so13", "J2*J1"}).out == "-L13*L23\n");
  Run r = run({"normalize", "-a", "weyl1", "-x*t"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "-t*x - 1\n");
}

TEST_CASE("check exit codes and output") {
  Run ok = run({"check", "-a", "so13", "[L01,L12]", "i*L02"});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out == "PASS [L01,L12] = i*L02\n");
  Run bad = run({"check", "-a", "so13", "[L12,L23]", "-i*L13"});
  CHECK(bad.code == kExitCheckFailed);
  CHECK(bad.out == "FAIL [L12,L23] = -i*L13\n  lhs -> i*L13\n  rhs -> -i*L13\n");
  Run flipped = run({"--signature", "-+++", "check", "-a", "so13", "[L12,L23]", "-i*L13"});
  CHECK(flipped.code == kExitOk);
}

TEST_CASE("usage and input errors exit with 2, engine errors with 3") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"normalize", "-a", "so13"}).code == kExitUsage);
  Run parse = run({"normalize", "-a", "so13", "[L01,L12"});
  CHECK(parse.code == kExitUsage);
  CHECK(parse.err.find("line 1, column 9") != std::string::npos);
  CHECK(run({"normalize", "-a", "so13", "Q7"}).code == kExitUsage);
  CHECK(run({"normalize", "-a", "no_such_algebra", "x"}).code == kExitUsage);
  CHECK(run({"--signature", "++++", "normalize", "-a", "so13", "L01"}).code == kExitUsage);
  CHECK(run({"normalize", "-a", "weyl1", "i*x"}).code == kExitEngine);
  CHECK(run({"check-skew-ccr", "-a", "so13"}).code == kExitUsage);
  CHECK(run({"grade", "-a", "weyl1", "-n", "2"}).code == kExitOk);
}

TEST_CASE("grade") {
  CHECK(run({"grade", "-a", "so13", "-n", "2"}).out == "21\n");
  CHECK(run({"grade", "-a", "so13", "-n", "8"}).out == "1287\n");
  Run basis = run({"grade", "-a", "so13", "-n", "2", "--basis"});
  std::istringstream lines(basis.out);
  std::string first, second;
  std::getline(lines, first);
  std::getline(lines, second);
  CHECK(first == "21");
  CHECK(second == "L01^2");
  CHECK(std::count(basis.out.begin(), basis.out.end(), '\n') == 22);
}

TEST_CASE("tower") {
  Run r = run({"tower", "--height", "2", "--normalize", "x2*t2*x1*t1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("generators: t1 < x1 < t2 < x2") != std::string::npos);
  CHECK(r.out.find("  x1*t1 = t1*x1 + 1\n") != std::string::npos);
  CHECK(r.out.find("overlaps: confluent") != std::string::npos);
  CHECK(r.out.find("normal form: t1*x1*t2*x2 + t2*x2 + t1*x1 + 1") != std::string::npos);

  Run skew = run({"tower", "--height", "2", "--level-spec", "1:alpha(t1)=-t1", "--level-spec",
                  "2:alpha(t2)=-t2", "--normalize", "x1*t1*x2*t2"});
  CHECK(skew.code == kExitOk);
  CHECK(skew.out.find("  x1*t1 = -t1*x1 + 1\n") != std::string::npos);

  CHECK(run({"tower", "--height", "2", "--level-spec", "2:alpha(t1)=-t1"}).code == kExitUsage);
  CHECK(run({"tower", "--height", "2", "--level-spec", "3:alpha(t1)=-t1"}).code == kExitUsage);
  CHECK(run({"tower", "--height", "0"}).code == kExitUsage);
}

TEST_CASE("reports") {
  Run skew = run({"check-skew-ccr", "-a", "skewccr"});
  CHECK(skew.code == kExitOk);
  CHECK(skew.out.rfind("== check-skew-ccr skewccr ==\n", 0) == 0);
  CHECK(skew.out.find("result: PASS") != std::string::npos);
  Run closure = run({"check-skew-ccr", "-a", "skewccr4"});
  CHECK(closure.code == kExitCheckFailed);
  Run plain = run({"check-skew-ccr", "-a", "ccr4"});
  CHECK(plain.code == kExitOk);
  Run oracle = run({"oracle", "-a", "so13"});
  CHECK(oracle.code == kExitOk);
  CHECK(oracle.out.find("result: PASS (39/39)") != std::string::npos);
  CHECK(run({"oracle", "-a", "weyl1"}).code == kExitEngine);
}

TEST_CASE("oracle golden cases") {
  auto dir = scratch_dir("orecalc_cases_test");
  std::ofstream(dir / "cases.tsv") << "# expression\texpected\ttag\n"
                                   << "J2*J1\t-L13*L23\thand\n"
                                   << "[L01,L12]\ti*L02\thand\n";
  Run good = run({"oracle", "-a", "so13", "--cases", (dir / "cases.tsv").string()});
  CHECK(good.code == kExitOk);
  CHECK(good.out.find("PASS golden cases: line 2 [hand] J2*J1: -L13*L23") != std::string::npos);
  std::ofstream(dir / "bad.tsv") << "[L01,L12]\t-i*L02\thand\n";
  Run bad = run({"oracle", "-a", "so13", "--cases", (dir / "bad.tsv").string()});
  CHECK(bad.code == kExitCheckFailed);
  std::ofstream(dir / "malformed.tsv") << "only one field\n";
  CHECK(run({"oracle", "-a", "so13", "--cases", (dir / "malformed.tsv").string()}).code == kExitUsage);
  std::filesystem::remove_all(dir);
}

TEST_CASE("REPL and batch checks print identical bytes") {
  const std::vector<std::pair<std::string, std::string>> checks{
      {"[L01,L12]", "i*L02"}, {"[L12,L23]", "-i*L13"}, {"J2*J1", "-L13*L23"}};
  std::string script = ":algebra so13\n";
  std::string batch;
  for (const auto& [l, r] : checks) {
    script += ":check " + l + " = " + r + "\n";
    batch += run({"check", "-a", "so13", l, r}).out;
  }
  Run repl = run({"repl"}, script + ":quit\n");
  CHECK(repl.code == kExitOk);
  CHECK(repl.out == "algebra so13\n" + batch);
}

TEST_CASE("REPL keeps going after errors") {
  Run r = run({"repl", "-a", "weyl1"}, "x*t\nfoo\n:bogus\nx^2*t^2\n");
  CHECK(r.code == kExitOk);
  CHECK(r.out == "t*x + 1\nt^2*x^2 + 4*t*x + 2\n");
  CHECK(r.err.find("unknown symbol 'foo'") != std::string::npos);
  CHECK(r.err.find("unknown command :bogus") != std::string::npos);
  Run none = run({"repl"}, "x\n");
  CHECK(none.err.find("no active algebra") != std::string::npos);
}

TEST_CASE("define, export and list") {
  auto dir = scratch_dir("orecalc_define_test");
  ::setenv("ORECALC_HOME", (dir / "home").c_str(), 1);
  Run exported = run({"export", "-a", "weyl1"});
  REQUIRE(exported.code == kExitOk);
  std::string text = exported.out;
  text.replace(text.find("\"weyl1\""), 7, "\"myweyl\"");
  std::ofstream(dir / "my.json") << text;
  Run def = run({"define", (dir / "my.json").string()});
  CHECK(def.code == kExitOk);
  CHECK(def.out.rfind("defined myweyl (2 generators)", 0) == 0);
  CHECK(run({"normalize", "-a", "myweyl", "x*t^3"}).out == "t^3*x + 3*t^2\n");
  CHECK(run({"normalize", "-a", (dir / "my.json").string(), "x*t"}).out == "t*x + 1\n");
  Run load = run({"repl"}, ":load " + (dir / "my.json").string() + "\nx*t\n");
  CHECK(load.out == "algebra myweyl\nt*x + 1\n");
  CHECK(run({"export", "-a", "myweyl"}).out == text);

  std::ofstream(dir / "broken.json") << "{\"name\": ";
  CHECK(run({"define", (dir / "broken.json").string()}).code == kExitUsage);
  CHECK(run({"define", (dir / "absent.json").string()}).code == kExitUsage);

  Run list = run({"list"});
  CHECK(list.out.find("so13\n") != std::string::npos);
  CHECK(list.out.find("skewccr4\n") != std::string::npos);
  std::filesystem::remove_all(dir);
}
