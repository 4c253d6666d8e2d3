#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "mltt/driver.hpp"
#include "support.hpp"

namespace mltt {
namespace {

namespace fs = std::filesystem;

std::string tier(const std::string& name) { return testing::corpus_dir() + "/" + name; }

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("mltt-driver-" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  fs::path path_;
};

struct Shell {
  int status;
  std::string output;
};

Shell shell(const std::string& args) {
  std::string cmd = std::string(MLTT_CLI_PATH) + " " + args + " 2>&1";
  Shell s{0, {}};
  FILE* pipe = ::popen(cmd.c_str(), "r");
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) s.output += buf.data();
  int raw = ::pclose(pipe);
  s.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return s;
}

TEST(Run, CheckReportsDeclarationCounts) {
  TempDir dir;
  RunConfig c;
  c.paths = {dir.write("a.mltt", "def a : Nat := 0\ndef b : Nat := a\n")};
  RunResult r = run(c);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "OK 2 declarations in " + c.paths[0] + "\n");
}

TEST(Run, ErrorFormat) {
  TempDir dir;
  RunConfig c;
  c.paths = {dir.write("bad.mltt", "def a : Nat := 0\n\ndef b : Nat :=   star\n")};
  RunResult r = run(c);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.error, ErrorClass::TypeMismatch);
  EXPECT_EQ(r.output.substr(0, r.output.find('\n')), "ERROR TypeMismatch at " + c.paths[0] + ":3:18");
  EXPECT_NE(r.output.find("\n  expected: Nat\n  got:      Unit\n"), std::string::npos) << r.output;
}

TEST(Run, EvalAndTypeOf) {
  TempDir dir;
  RunConfig c;
  c.command = RunConfig::Command::Eval;
  c.paths = {dir.write("a.mltt", "def two : Nat := succ (succ zero)\n")};
  c.term_text = "two";
  EXPECT_EQ(run(c).output, "2\n");
  c.command = RunConfig::Command::TypeOf;
  c.term_text = "(\\x -> x : Nat -> Nat)";
  EXPECT_EQ(run(c).output, "Nat -> Nat\n");
}

TEST(Run, PreludesAndImports) {
  TempDir dir;
  std::string base = dir.write("base.mltt", "def one : Nat := 1\n");
  std::string user = dir.write("user.mltt", "import \"base.mltt\"\ndef two : Nat := succ one\n");
  std::string bare = dir.write("bare.mltt", "def two : Nat := succ one\n");
  RunConfig c;
  c.paths = {user};
  EXPECT_EQ(run(c).exit_code, 0);
  c.paths = {bare};
  EXPECT_EQ(run(c).error, ErrorClass::UnboundName);
  c.preludes = {base};
  EXPECT_EQ(run(c).exit_code, 0);
  // An import already loaded as a prelude is not checked twice.
  c.paths = {user};
  EXPECT_EQ(run(c).exit_code, 0);
}

TEST(Run, ErrorsInImportsNameTheImportedFile) {
  TempDir dir;
  std::string base = dir.write("base.mltt", "assume k : Nat\n");
  std::string user = dir.write("user.mltt", "import \"base.mltt\"\ndef two : Nat := 2\n");
  RunConfig c;
  c.paths = {user};
  c.safe_mode = true;
  RunResult r = run(c);
  EXPECT_EQ(r.error, ErrorClass::UnsafeAssume);
  EXPECT_EQ(r.output.substr(0, r.output.find('\n')), "ERROR UnsafeAssume at " + base + ":1:1");
}

TEST(Run, ImportCycle) {
  TempDir dir;
  dir.write("a.mltt", "import \"b.mltt\"\n");
  std::string b = dir.write("b.mltt", "import \"a.mltt\"\n");
  RunConfig c;
  c.paths = {b};
  EXPECT_EQ(run(c).error, ErrorClass::ParseError);
}

TEST(Run, DepthBudget) {
  TempDir dir;
  RunConfig c;
  c.paths = {dir.write("big.mltt",
                       "def plus : Nat -> Nat -> Nat := \\x y -> natInd {0} (\\_ -> Nat) x (\\_ r -> succ r) y\n"
                       "def t : Id {0} Nat (plus 200 200) 400 := refl {0} Nat 400\n")};
  EXPECT_EQ(run(c).exit_code, 0);
  c.depth_budget = 100;
  EXPECT_EQ(run(c).error, ErrorClass::DepthExceeded);
}

TEST(Run, MissingFileIsAUsageError) {
  RunConfig c;
  c.paths = {"/nonexistent/file.mltt"};
  EXPECT_EQ(run(c).exit_code, 2);
}

TEST(Cli, CheckTierOne) {
  Shell s = shell("check " + tier("tier1/*.mltt"));
  EXPECT_EQ(s.status, 0) << s.output;
  EXPECT_NE(s.output.find("OK 15 declarations in " + tier("tier1/search.mltt")), std::string::npos) << s.output;
}

TEST(Cli, EvalMinimalRoot) {
  Shell s = shell("eval " + tier("tier1/search.mltt") + " minimal-root-of-f");
  EXPECT_EQ(s.status, 0);
  EXPECT_EQ(s.output, "2\n");
}

TEST(Cli, SafeModeRejectsUnivalence) {
  Shell s = shell("check --safe " + tier("tier3/univalence.mltt"));
  EXPECT_EQ(s.status, 1);
  EXPECT_EQ(s.output.rfind("ERROR UnsafeAssume at ", 0), 0u) << s.output;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(shell("").status, 2);
  EXPECT_EQ(shell("check").status, 2);
  EXPECT_EQ(shell("frobnicate x").status, 2);
  EXPECT_EQ(shell("check --max-depth 0 " + tier("tier1/basics.mltt")).status, 2);
  EXPECT_EQ(shell("check /nonexistent.mltt").status, 2);
}

TEST(Cli, MaxDepthAndPreludeFlags) {
  Shell s = shell("eval --max-depth 5 " + tier("tier1/search.mltt") + " minimal-root-of-f");
  EXPECT_EQ(s.status, 1);
  EXPECT_EQ(s.output.rfind("ERROR DepthExceeded at ", 0), 0u) << s.output;
  s = shell("check --prelude " + tier("tier1/basics.mltt") + " --prelude " + tier("tier1/peano.mltt") + " " +
            tier("tier1/arithmetic.mltt"));
  EXPECT_EQ(s.status, 0) << s.output;
}

}  // namespace
}  // namespace mltt
