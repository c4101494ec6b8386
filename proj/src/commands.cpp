#include "jetvar/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "jetvar/error.hpp"

namespace jetvar {

namespace {

using nlohmann::ordered_json;

std::vector<std::size_t> all_axes(std::size_t p) {
  std::vector<std::size_t> axes(p);
  for (std::size_t i = 0; i < p; ++i) axes[i] = i;
  return axes;
}

// epsilon is "field-wise" when every term is E_a dpsi^a (x) vol.
bool is_fieldwise(const VForm& eps) {
  const auto vol = all_axes(eps.space()->p());
  return std::all_of(eps.terms().begin(), eps.terms().end(), [&](const auto& t) {
    return t.first.dx == vol && t.first.dpsi.size() == 1 && t.first.dpsi[0].index.order() == 0;
  });
}

std::string epsilon_text(const VForm& eps) {
  const JetSpace& space = *eps.space();
  if (!is_fieldwise(eps)) return "epsilon = " + render_text(eps) + "\n";
  std::string out;
  const auto vol = all_axes(space.p());
  for (std::size_t a = 0; a < space.q(); ++a) {
    const Expr c = eps.coefficient(FormKey{vol, {Covector{a, MultiIndex(space.p())}}});
    out += "epsilon[" + space.field_name(a) + "] = " + render_text(c, space) + "\n";
  }
  return out;
}

const char* iota_name(IotaMode mode) { return mode == IotaMode::Literal ? "literal" : "weighted"; }

std::string format_report(const CheckReport& r, bool timing) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-18s %s  lhs=% .12e  rhs=% .12e  rel_err=%.3e  tol=%.1e",
                r.name.c_str(), r.pass ? "PASS" : "FAIL", r.lhs, r.rhs, r.rel_err, r.tol);
  std::string s = buf;
  if (timing) {
    std::snprintf(buf, sizeof buf, "  runtime=%.1fms", r.runtime_ms);
    s += buf;
  }
  return s + "\n";
}

// Exact symbolic check of the Green formula with unspecified section and
// variation; reported as a count of surviving terms.
CheckReport symbolic_residual(const ProblemFile& problem, ReductionStrategy strategy) {
  const auto start = std::chrono::steady_clock::now();
  const JetSpace& space = *problem.space;
  std::vector<std::string> u_names;
  std::vector<std::string> y_names;
  for (const auto& f : space.field_names()) {
    u_names.push_back("U_" + f);
    y_names.push_back("Y_" + f);
  }
  const VForm residual = green_identity_residual(
      problem.lagrangian(), SectionSym::opaque(problem.space, u_names),
      VerticalFieldSym::opaque(problem.space, y_names), strategy);
  const double runtime =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  CheckReport r = CheckReport::compare("symbolic_residual", static_cast<double>(residual.terms().size()),
                                       0.0, 0.0, 0.0, runtime);
  return r;
}

}  // namespace

CommandResult cmd_el(const ProblemFile& problem, const CommandOptions& options) {
  CommandResult res;
  const VForm lagrangian = problem.lagrangian();
  const VForm eps = operator_E(lagrangian, options.iota);
  if (!vform_eq(eps, euler_lagrange(lagrangian))) {
    if (options.iota == IotaMode::Weighted) {
      res.exit_code = kExitCheckFailed;
      res.notes += "check failed: operator E disagrees with the Euler-Lagrange formula\n";
    } else {
      res.notes += "note: the literal convention differs from the Euler-Lagrange form here\n";
    }
  }
  switch (options.format) {
    case Format::Text: res.output = epsilon_text(eps); break;
    case Format::Latex: res.output = render_latex(eps) + "\n"; break;
    case Format::Json: {
      ordered_json j;
      j["command"] = "el";
      j["iota"] = iota_name(options.iota);
      j["epsilon"] = to_json(eps);
      res.output = j.dump(2) + "\n";
      break;
    }
  }
  return res;
}

CommandResult cmd_decompose(const ProblemFile& problem, const CommandOptions& options) {
  CommandResult res;
  const DecompResult d = decompose(problem.lagrangian(), options.strategy);
  switch (options.format) {
    case Format::Text:
      res.output = epsilon_text(d.epsilon) + "kappa = " + render_text(d.kappa) + "\n";
      break;
    case Format::Latex:
      res.output = "\\varepsilon = " + render_latex(d.epsilon) + "\n\\kappa = " +
                   render_latex(d.kappa) + "\n";
      break;
    case Format::Json: {
      ordered_json j;
      j["command"] = "decompose";
      j["strategy"] = strategy_name(d.strategy);
      j["epsilon"] = to_json(d.epsilon);
      j["kappa"] = to_json(d.kappa);
      res.output = j.dump(2) + "\n";
      break;
    }
  }
  return res;
}

std::pair<SectionSym, VerticalFieldSym> verification_data(const ProblemFile& problem) {
  const JetSpace& space = *problem.space;
  std::mt19937_64 rng(problem.seed.value_or(kDefaultSeed));
  std::vector<Expr> u;
  std::vector<Expr> y;
  for (std::size_t a = 0; a < space.q(); ++a) u.push_back(random_trig_polynomial(space.p(), rng));
  for (std::size_t a = 0; a < space.q(); ++a) y.push_back(random_trig_polynomial(space.p(), rng));
  for (const auto& [a, e] : problem.sections) u[a] = e;
  for (const auto& [a, e] : problem.variations) y[a] = e;
  return {SectionSym(problem.space, std::move(u)), VerticalFieldSym(problem.space, std::move(y))};
}

CommandResult cmd_verify(const ProblemFile& problem, const CommandOptions& options) {
  if (options.format == Format::Latex)
    throw UnsupportedFormat("verify reports have no LaTeX rendering");
  CommandResult res;
  const VForm lagrangian = problem.lagrangian();
  const auto [section, variation] = verification_data(problem);
  const Grid grid(problem.space->p(), problem.grid.value_or(kDefaultGridPoints));
  const double step = problem.fd_step.value_or(kDefaultFdStep);

  std::vector<CheckReport> reports;
  reports.push_back(verify_first_variation(lagrangian, section, variation, grid, step));
  reports.push_back(verify_green(lagrangian, section, variation, grid, step));
  reports.push_back(symbolic_residual(problem, options.strategy));
  const bool pass =
      std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass; });
  res.exit_code = pass ? kExitOk : kExitCheckFailed;

  if (options.format == Format::Json) {
    ordered_json j;
    j["command"] = "verify";
    auto arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(r.to_json(options.timing));
    j["reports"] = std::move(arr);
    j["pass"] = pass;
    res.output = j.dump(2) + "\n";
  } else {
    for (const auto& r : reports) res.output += format_report(r, options.timing);
    res.output += pass ? "all checks passed\n" : "some checks FAILED\n";
  }
  return res;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler-Lagrange forms, decompositions and Green-formula checks for jet-space Lagrangians",
               "jetvar"};
  std::string command;
  std::string path;
  std::string format = "text";
  std::string iota = "weighted";
  std::string strategy = "min-axis";
  bool timing = false;
  app.add_option("command", command, "el, decompose or verify")
      ->required()
      ->check(CLI::IsMember({"el", "decompose", "verify"}));
  app.add_option("file", path, "problem file")->required();
  app.add_option("--format", format, "text, json or latex");
  app.add_option("--iota", iota, "literal or weighted")
      ->check(CLI::IsMember({"literal", "weighted"}));
  app.add_option("--strategy", strategy, "min-axis or max-axis")
      ->check(CLI::IsMember({"min-axis", "max-axis"}));
  app.add_flag("--timing", timing, "report measured runtimes");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    CommandOptions options;
    options.format = parse_format(format);
    options.iota = iota == "literal" ? IotaMode::Literal : IotaMode::Weighted;
    options.strategy = strategy == "max-axis" ? ReductionStrategy::MaxAxis : ReductionStrategy::MinAxis;
    options.timing = timing;

    std::ifstream in(path);
    if (!in) {
      err << "error: cannot read '" << path << "'\n";
      return kExitInputError;
    }
    std::ostringstream text;
    text << in.rdbuf();
    const ProblemFile problem = parse_problem_file(text.str());

    CommandResult res;
    if (command == "el") res = cmd_el(problem, options);
    else if (command == "decompose") res = cmd_decompose(problem, options);
    else res = cmd_verify(problem, options);
    out << res.output;
    err << res.notes;
    return res.exit_code;
  } catch (const IdentityCheckFailed& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace jetvar
