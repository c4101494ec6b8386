#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace jetvar;

namespace {

const std::string kSource = JETVAR_SOURCE_DIR;
const std::string kBinary = JETVAR_BINARY;

const char* kOscillator = R"(base 1
coords x
field u
order 1
lagrangian (1/2)*u_x^2 - (1/2)*u^2
section u = sin(x)        # optional, for verify
variation u = cos(x)      # optional, for verify
grid 64                   # optional
fd_step 1e-5              # optional
seed 42                   # optional
)";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string problem(const std::string& name) { return kSource + "/problems/" + name + ".jv"; }

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Exit status of the built executable, stdout discarded.
int exit_status(const std::string& args) {
  const int status = std::system((kBinary + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

template <class E>
std::string error_of(const std::string& text) {
  try {
    parse_problem_file(text);
  } catch (const E& e) {
    return e.what();
  }
  return "<no error>";
}

}  // namespace

TEST(ProblemFile, Oscillator) {
  const ProblemFile f = parse_problem_file(kOscillator);
  EXPECT_EQ(f.space->p(), 1u);
  EXPECT_EQ(f.space->coord_names(), std::vector<std::string>{"x"});
  EXPECT_EQ(f.space->field_names(), std::vector<std::string>{"u"});
  EXPECT_EQ(f.order, 1);
  EXPECT_TRUE(equivalent(f.lagrangian_density, parse_expr("(1/2)*u_x^2 - (1/2)*u^2", *f.space)));
  EXPECT_EQ(f.lagrangian().coeff_order(), 1);
  ASSERT_EQ(f.sections.count(0), 1u);
  EXPECT_TRUE(equivalent(f.sections.at(0), parse_expr("sin(x)", *f.space)));
  EXPECT_EQ(f.grid, 64u);
  EXPECT_EQ(f.fd_step, 1e-5);
  EXPECT_EQ(f.seed, 42u);
}

TEST(ProblemFile, OptionalDirectivesAndDefaults) {
  const ProblemFile f = parse_problem_file("base 2\nfield u v\norder 2\nlagrangian u_xy*v\n");
  EXPECT_EQ(f.space->coord_names(), (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(f.space->q(), 2u);
  EXPECT_FALSE(f.grid);
  EXPECT_FALSE(f.seed);
  EXPECT_TRUE(f.sections.empty());
}

TEST(ProblemFile, OrderMismatch) {
  EXPECT_EQ(error_of<OrderMismatch>("base 1\nfield u\norder 1\nlagrangian u_xx*u\n"),
            "line 4: the Lagrangian has order 2 but 'order' declares 1");
}

TEST(ProblemFile, MissingLagrangian) {
  try {
    parse_problem_file("base 1\ncoords x\nfield u\norder 1\n");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_TRUE(e.is_line());
    EXPECT_NE(std::string(e.what()).find("lagrangian"), std::string::npos) << e.what();
  }
}

TEST(ProblemFile, DuplicateNames) {
  EXPECT_NE(error_of<DuplicateName>("base 1\ncoords x\nfield x\norder 1\nlagrangian 1\n"), "<no error>");
  EXPECT_EQ(error_of<DuplicateName>("base 1\ncoords x\nfield u\norder 1\nlagrangian 1\n"), "<no error>");
  EXPECT_NE(error_of<DuplicateName>("base 1\ncoords x\nfield cos\norder 1\nlagrangian 1\n"), "<no error>");
  EXPECT_EQ(error_of<DuplicateName>("base 1\nfield u u\norder 1\nlagrangian 1\n").rfind("line 2:", 0),
            0u);
}

TEST(ProblemFile, SyntaxErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_problem_file(text);
    } catch (const SyntaxError& e) {
      EXPECT_TRUE(e.is_line());
      return e.position();
    }
    return 0;
  };
  EXPECT_EQ(line_of("base 1\nfield u\norder 1\nlagrangian u_x +\n"), 4u);
  EXPECT_EQ(line_of("# comment\nbase 1\nfield u\norder 1\nlagrangian w\n"), 5u);
  EXPECT_EQ(line_of("base 1\nfield u\nfrobnicate 3\norder 1\nlagrangian u\n"), 3u);
  EXPECT_EQ(line_of("base 1\nfield u\norder 1\norder 2\nlagrangian u\n"), 4u);
  EXPECT_EQ(line_of("base 1\ncoords x y\nfield u\norder 1\nlagrangian u\n"), 2u);
  EXPECT_EQ(line_of("base 1\nfield u\norder 1\nlagrangian u\ngrid 3\n"), 5u);
  EXPECT_EQ(line_of("base 1\nfield u\norder 1\nlagrangian u\nsection u = u_x\n"), 5u);
  EXPECT_EQ(line_of("base 1\nfield u\norder 1\nlagrangian u\nfd_step -1\n"), 5u);
}

TEST(Commands, GoldenOutputs) {
  for (const std::string name : {"oscillator", "laplace", "biharmonic"}) {
    for (const std::string command : {"el", "decompose", "verify"}) {
      for (const std::string format : {"text", "latex", "json"}) {
        if (command == "verify" && format == "latex") continue;
        const CliRun r = cli({command, problem(name), "--format", format});
        EXPECT_EQ(r.code, kExitOk) << name << " " << command << " " << format << r.err;
        EXPECT_EQ(r.out, read_file(kSource + "/tests/golden/" + name + "." + command + "." + format))
            << name << " " << command << " " << format;
      }
    }
  }
}

TEST(Commands, WorkedExamples) {
  const ProblemFile f = parse_problem_file(kOscillator);
  EXPECT_EQ(cmd_el(f, {}).output, "epsilon[u] = -(u_xx + u)\n");
  EXPECT_EQ(cmd_decompose(f, {}).output, "epsilon[u] = -(u_xx + u)\nkappa = u_x du ⊗ 1\n");
  const CommandResult v = cmd_verify(f, {});
  EXPECT_EQ(v.exit_code, kExitOk);
  EXPECT_NE(v.output.find("all checks passed"), std::string::npos);
}

TEST(Commands, RepeatedRunsAreByteIdentical) {
  for (const std::string format : {"text", "json"}) {
    const CliRun a = cli({"verify", problem("oscillator"), "--format", format});
    const CliRun b = cli({"verify", problem("oscillator"), "--format", format});
    EXPECT_EQ(a.out, b.out);
  }
  const std::string no_data = "base 1\nfield u\norder 2\nlagrangian (1/2)*u_xx^2 + u*u_x^2\nseed 7\n";
  const ProblemFile f = parse_problem_file(no_data);
  EXPECT_EQ(cmd_verify(f, {}).output, cmd_verify(f, {}).output);
  const auto [u1, y1] = verification_data(f);
  const auto [u2, y2] = verification_data(f);
  EXPECT_EQ(u1.components(), u2.components());
  EXPECT_EQ(y1.components(), y2.components());
  const ProblemFile other = parse_problem_file("base 1\nfield u\norder 2\nlagrangian u_xx^2\nseed 8\n");
  EXPECT_NE(verification_data(other).first.components(), u1.components());
}

TEST(Commands, VerificationDataDrawsMissingEntries) {
  const ProblemFile f = parse_problem_file("base 1\nfield u v\norder 1\nlagrangian u_x*v_x\nsection v = cos(x)\n");
  const auto [u, y] = verification_data(f);
  EXPECT_TRUE(equivalent(u.component(1), parse_expr("cos(x)", *f.space)));
  EXPECT_FALSE(equivalent(u.component(0), u.component(1)));
  EXPECT_EQ(y.components().size(), 2u);
}

TEST(Commands, LiteralIotaIsReportedNotFatal) {
  const ProblemFile f = parse_problem_file("base 1\nfield u\norder 2\nlagrangian (1/2)*u_xx^2\n");
  CommandOptions literal;
  literal.iota = IotaMode::Literal;
  const CommandResult r = cmd_el(f, literal);
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_FALSE(r.notes.empty());
  EXPECT_NE(r.output, cmd_el(f, {}).output);
}

TEST(Commands, TimingAddsRuntimes) {
  const CliRun r = cli({"verify", problem("oscillator"), "--format", "json", "--timing"});
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& report : j["reports"]) EXPECT_TRUE(report["runtime_ms"].is_number());
  const CliRun plain = cli({"verify", problem("oscillator"), "--format", "json"});
  for (const auto& report : nlohmann::json::parse(plain.out)["reports"])
    EXPECT_TRUE(report["runtime_ms"].is_null());
}

TEST(Commands, ExitCodes) {
  EXPECT_EQ(cli({"el", problem("oscillator")}).code, kExitOk);
  EXPECT_EQ(cli({"el", kSource + "/problems/missing.jv"}).code, kExitInputError);
  EXPECT_EQ(cli({"solve", problem("oscillator")}).code, kExitInputError);
  EXPECT_EQ(cli({"el", problem("oscillator"), "--format", "html"}).code, kExitInputError);
  const CliRun latex = cli({"verify", problem("oscillator"), "--format", "latex"});
  EXPECT_EQ(latex.code, kExitInputError);
  EXPECT_TRUE(latex.out.empty());
  EXPECT_FALSE(latex.err.empty());

  // A tolerance-breaking fd_step makes the numeric checks fail.
  const std::string path = ::testing::TempDir() + "jetvar_coarse.jv";
  std::ofstream(path) << "base 1\nfield u\norder 1\nlagrangian (1/4)*u_x^4\n"
                         "section u = sin(x)\nvariation u = sin(x)\nfd_step 0.5\n";
  const CliRun coarse = cli({"verify", path});
  EXPECT_EQ(coarse.code, kExitCheckFailed);
  EXPECT_NE(coarse.out.find("some checks FAILED"), std::string::npos);

  const std::string bad = ::testing::TempDir() + "jetvar_bad.jv";
  std::ofstream(bad) << "base 1\nfield u\norder 1\nlagrangian u_xx\n";
  const CliRun mismatch = cli({"el", bad});
  EXPECT_EQ(mismatch.code, kExitInputError);
  EXPECT_NE(mismatch.err.find("line 4"), std::string::npos) << mismatch.err;
}

TEST(Executable, ExitCodesAndStreams) {
  EXPECT_EQ(exit_status("el " + problem("oscillator")), kExitOk);
  EXPECT_EQ(exit_status("verify " + problem("biharmonic")), kExitOk);
  EXPECT_EQ(exit_status("el /nonexistent.jv"), kExitInputError);
  EXPECT_EQ(exit_status(""), kExitInputError);
  EXPECT_EQ(exit_status("--help"), kExitOk);

  const std::string out = ::testing::TempDir() + "jetvar_el.txt";
  ASSERT_EQ(std::system((kBinary + " el " + problem("laplace") + " --format latex > " + out).c_str()), 0);
  EXPECT_EQ(read_file(out), read_file(kSource + "/tests/golden/laplace.el.latex"));
}
