// Acceptance runner: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "support.hpp"

using namespace jetvar;
using namespace jetvar::testing;

namespace {

const std::string kSource = JETVAR_SOURCE_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Suite {
  std::vector<VForm> lagrangians;
  std::vector<int> orders;
};

// >= 20 polynomial Lagrangians: every (p, r) in {1,2,3}^2, three draws each,
// coefficient degree <= 3.
const Suite& suite() {
  static const Suite s = [] {
    Suite out;
    Rng rng(2024);
    for (std::size_t p = 1; p <= 3; ++p)
      for (int r = 1; r <= 3; ++r)
        for (int k = 0; k < 3; ++k) {
          const auto space = space_for(p, static_cast<std::size_t>(1 + k % 2));
          out.lagrangians.push_back(random_lagrangian(rng, space, r, 3, 3));
          out.orders.push_back(r);
        }
    return out;
  }();
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome decomposition_identity() {
  Outcome o;
  int zero = 0;
  for (const VForm& l : suite().lagrangians) {
    const auto d = decompose(l);
    const VForm rhs = d.epsilon + d_t(d.kappa);
    const VForm lhs = d_pi(l);
    const VForm lifted = order_lift(lhs, std::max(lhs.coeff_order(), rhs.coeff_order()),
                                    std::max(lhs.contact_order(), rhs.contact_order()));
    const VForm residual = lifted - rhs;
    if (vform_eq(residual, VForm(l.space(), residual.horiz_degree(), 1))) ++zero;
  }
  o.pass = zero == static_cast<int>(suite().lagrangians.size()) && zero >= 20;
  o.detail = std::to_string(zero) + "/" + std::to_string(suite().lagrangians.size()) +
             " residuals exactly zero";
  return o;
}

Outcome uniqueness() {
  Outcome o;
  int same_eps = 0;
  int closed = 0;
  for (const VForm& l : suite().lagrangians) {
    const auto a = decompose(l, ReductionStrategy::MinAxis);
    const auto b = decompose(l, ReductionStrategy::MaxAxis);
    same_eps += vform_eq(a.epsilon, b.epsilon);
    closed += d_t(a.kappa - b.kappa).is_zero();
  }
  const int n = static_cast<int>(suite().lagrangians.size());
  o.pass = same_eps == n && closed == n;
  o.detail = "epsilon equal " + std::to_string(same_eps) + "/" + std::to_string(n) +
             ", d_t(kappa1 - kappa2) = 0 " + std::to_string(closed) + "/" + std::to_string(n);
  return o;
}

Outcome triple_agreement() {
  Outcome o;
  int agree = 0;
  int literal_differs = 0;
  const auto& s = suite();
  for (std::size_t k = 0; k < s.lagrangians.size(); ++k) {
    const VForm& l = s.lagrangians[k];
    const VForm eps = decompose(l).epsilon;
    if (vform_eq(euler_lagrange(l), eps) && vform_eq(operator_E(l, IotaMode::Weighted), eps)) ++agree;
    if (s.orders[k] == 2 && !vform_eq(operator_E(l, IotaMode::Literal), eps)) ++literal_differs;
  }
  const auto line = JetSpace::make({"x"}, {"u"}, 8);
  const VForm beam = VForm::lagrangian(line, parse_expr("(1/2)*u_xx^2", *line), 2);
  const bool beam_differs = !vform_eq(operator_E(beam, IotaMode::Literal), euler_lagrange(beam));
  const int n = static_cast<int>(s.lagrangians.size());
  o.pass = agree == n && literal_differs + beam_differs >= 1;
  o.detail = "agree " + std::to_string(agree) + "/" + std::to_string(n) +
             "; literal iota differs on " + std::to_string(literal_differs) +
             " r=2 suite Lagrangians" + (beam_differs ? " and on (1/2)u_xx^2" : "");
  return o;
}

Outcome golden_corpus() {
  Outcome o;
  struct Case {
    const char* file;
    const char* el;
  };
  const Case cases[] = {{"oscillator", "-(u_xx + u)"},
                        {"laplace", "-(u_xx + u_yy)"},
                        {"biharmonic", "u_xxxx"}};
  Rng rng(42);
  double worst = 0.0;
  for (const auto& c : cases) {
    const ProblemFile f = parse_problem_file(read_file(kSource + "/problems/" + c.file + ".jv"));
    const auto& s = f.space;
    const VForm l = f.lagrangian();
    const VForm el = euler_lagrange(l);
    std::vector<std::size_t> axes;
    for (std::size_t i = 0; i < s->p(); ++i) axes.push_back(i);
    VForm expected(s, static_cast<int>(s->p()), 1);
    // The file's space stops at the declared order; the EL expression has order 2r.
    const JetSpace wide(s->coord_names(), s->field_names(), 2 * f.order);
    expected.add_term(axes, {Covector{0, MultiIndex(std::vector<int>(s->p(), 0))}},
                      parse_expr(c.el, wide));
    if (!vform_eq(el, expected)) {
      o.pass = false;
      o.detail += std::string(c.file) + ": got " + render_text(el) + "; ";
    }
    const SectionSym u(s, {random_trig_polynomial(s->p(), rng)});
    const Expr along = pull_back_section(el, u).coefficient(expected.terms().begin()->first);
    const ElOracle oracle(f.lagrangian_density, u, f.order);
    const Grid g(s->p(), 64);
    for (int k = 0; k < 5; ++k) {
      const auto x = g.point(rng() % g.size());
      const auto ref = oracle.at(0, x);
      const double value = eval_numeric(along, NumericPoint(x));
      const double rel = std::abs(ref.value - value) / std::max({std::abs(value), ref.scale, 1e-12});
      worst = std::max(worst, rel);
    }
  }
  o.pass = o.pass && worst <= 1e-6;
  char buf[96];
  std::snprintf(buf, sizeof buf, "3 EL forms exact; FD oracle at 15 points, max rel_err %.2e", worst);
  o.detail += buf;
  return o;
}

Outcome green_residual() {
  Outcome o;
  Rng rng(5);
  int zero = 0;
  int cases = 0;
  for (std::size_t p = 1; p <= 2; ++p)
    for (int r = 1; r <= 2; ++r)
      for (int k = 0; k < 3; ++k) {
        const auto s = space_for(p, static_cast<std::size_t>(1 + k % 2));
        const VForm l = random_lagrangian(rng, s, r);
        ++cases;
        zero += green_identity_residual(l, opaque_section(s), opaque_variation(s)).is_zero();
      }
  o.pass = zero == cases && cases >= 10;
  o.detail = std::to_string(zero) + "/" + std::to_string(cases) + " residuals exactly zero";
  return o;
}

Outcome numeric_green() {
  Outcome o;
  Rng rng(42);
  const char* files[] = {"oscillator", "laplace", "biharmonic"};
  double worst = 0.0;
  std::string orders;
  for (const char* name : files) {
    const ProblemFile f = parse_problem_file(read_file(kSource + "/problems/" + name + ".jv"));
    const auto& s = f.space;
    const SectionSym u(s, {random_trig_polynomial(s->p(), rng)});
    const VerticalFieldSym y(s, {random_trig_polynomial(s->p(), rng)});
    const Grid g(s->p(), 64);
    const CheckReport r = verify_green(f.lagrangian(), u, y, g, 1e-5, 1e-6);
    worst = std::max(worst, r.rel_err);
    o.pass = o.pass && r.pass;
    const ConvergenceReport c = fd_convergence(f.lagrangian(), u, y, g, {1e-3, 1e-4, 1e-5});
    if (!c.pass) {
      o.pass = false;
      o.detail += std::string(name) + " slope check failed; ";
    }
  }
  // Quadratic actions give FD errors at roundoff for every h; a quartic one
  // exposes the h^2 truncation term.
  const auto line = JetSpace::make({"x"}, {"u"}, 4);
  const SectionSym u(line, {parse_expr("sin(x)", *line)});
  const VerticalFieldSym y(line, {parse_expr("sin(x)", *line)});
  const ConvergenceReport quartic =
      fd_convergence(VForm::lagrangian(line, parse_expr("(1/4)*u_x^4", *line), 1), u, y,
                     Grid(1, 64), {1e-3, 1e-4, 1e-5});
  o.pass = o.pass && quartic.pass && quartic.truncation_visible;
  for (double v : quartic.observed_orders) {
    char b[24];
    std::snprintf(b, sizeof b, std::isnan(v) ? " roundoff" : " %.2f", v);
    orders += b;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "verify_green max rel_err %.2e (tol 1e-6); quartic observed orders:%s",
                worst, orders.c_str());
  o.detail += buf;
  return o;
}

Outcome operator_laws() {
  Outcome o;
  Rng rng(7);
  int counts[7] = {};
  const int n = 100;
  for (int k = 0; k < n; ++k) {
    const std::size_t p = static_cast<std::size_t>(uniform_int(rng, 2, 3));
    const auto s = space_for(p, static_cast<std::size_t>(uniform_int(rng, 1, 2)));
    const VForm w = random_vform(rng, s, static_cast<int>(p) - 2, uniform_int(rng, 0, 1), 2);
    counts[0] += d_pi(d_pi(w)).is_zero();
    counts[1] += d_t(d_t(w)).is_zero();
    counts[2] += vform_eq(d_pi(d_t(w)), d_t(d_pi(w)));
  }
  for (int k = 0; k < n; ++k) {
    // (A4) on functions along closed-form sections.
    const std::size_t p = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    const auto s = space_for(p);
    const SectionSym u = random_section(rng, s);
    const VForm f = VForm::function(s, random_polynomial(rng, *s, 2, 3, 3), 2);
    counts[3] += vform_eq(pull_back_section(d_t(f), u), base_exterior_d(pull_back_section(f, u)));
  }
  for (int k = 0; k < n; ++k) {
    // (A5) graded Leibniz with a base-form factor.
    const auto s = space_for(3);
    const int db = uniform_int(rng, 0, 1);
    VForm beta(s, db, 0);
    beta.add_term(random_axes(rng, 3, db), {}, random_base_function(rng, 3));
    const VForm w = random_vform(rng, s, 1, 1, 1);
    const VForm rhs = wedge(d_t(beta), w) + Expr(db % 2 == 0 ? 1 : -1) * wedge(beta, d_t(w));
    counts[4] += vform_eq(d_t(wedge(beta, w)), rhs);
  }
  for (int k = 0; k < n; ++k) {
    // (A6) d_t <J_s v, w> = <J_{s+1} v, d_t w>.
    const std::size_t p = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    const auto s = space_for(p, static_cast<std::size_t>(uniform_int(rng, 1, 2)));
    const auto v = random_vertical_field(rng, s);
    const VForm w = random_vform(rng, s, uniform_int(rng, 0, static_cast<int>(p) - 1), 1, 2);
    const int order = w.contact_order();
    counts[5] += vform_eq(d_t(contract(prolonged_coefficients(v, order), w)),
                          contract(prolonged_coefficients(v, order + 1), d_t(w)));
  }
  const int n2 = 50;
  for (int k = 0; k < n2; ++k) {
    // (A2) prolonged coefficients along closed-form sections.
    const std::size_t p = static_cast<std::size_t>(uniform_int(rng, 1, 2));
    const auto s = space_for(p);
    const auto v = random_vertical_field(rng, s);
    const SectionSym u = random_section(rng, s);
    const Expr composed = subst_jets(v.component(0), u);
    bool ok = true;
    for (const auto& [c, value] : prolonged_coefficients(v, 2)) {
      Expr expected = composed;
      for (std::size_t axis = 0; axis < p; ++axis)
        for (int m = 0; m < c.index[axis]; ++m) expected = partial_base(expected, axis);
      ok = ok && equivalent(subst_jets(value, u), expected);
    }
    counts[6] += ok;
  }
  const char* names[] = {"d_pi^2=0", "d_t^2=0", "d_pi d_t=d_t d_pi", "A4", "A5", "A6", "A2"};
  for (int k = 0; k < 7; ++k) {
    const int total = k == 6 ? n2 : n;
    o.pass = o.pass && counts[k] == total;
    o.detail += std::string(k ? ", " : "") + names[k] + " " + std::to_string(counts[k]) + "/" +
                std::to_string(total);
  }
  return o;
}

Outcome null_lagrangians() {
  Outcome o;
  Rng rng(8);
  int zero = 0;
  const int n = 24;
  for (int k = 0; k < n; ++k) {
    const std::size_t p = static_cast<std::size_t>(1 + k % 3);
    const auto s = space_for(p, static_cast<std::size_t>(uniform_int(rng, 1, 2)));
    VForm mu(s, static_cast<int>(p) - 1, 0);
    for (std::size_t i = 0; i < p; ++i)
      mu.add_term(volume_without(p, i).axes, {}, random_polynomial(rng, *s, uniform_int(rng, 1, 2), 3, 2));
    zero += euler_lagrange(d_t(mu)).is_zero();
  }
  o.pass = zero == n;
  o.detail = std::to_string(zero) + "/" + std::to_string(n) + " Euler-Lagrange forms exactly zero";
  return o;
}

Outcome parser_renderer() {
  Outcome o;
  Rng rng(9);
  const auto s = space_for(2, 2);
  int checked = 0;
  int equal = 0;
  while (checked < 250) {
    Expr c;
    try {
      c = canonicalize(random_expr(rng, *s, 4));
    } catch (const DomainError&) {
      continue;
    }
    ++checked;
    equal += canonicalize(parse_expr(render_text(c, *s), *s)) == c;
  }
  int identical = 0;
  int runs = 0;
  for (const std::string name : {"oscillator", "laplace", "biharmonic"})
    for (const std::string command : {"el", "decompose", "verify"})
      for (const std::string format : {"text", "latex", "json"}) {
        if (command == "verify" && format == "latex") continue;
        const std::vector<std::string> args{command, kSource + "/problems/" + name + ".jv",
                                            "--format", format};
        std::ostringstream first, second, err;
        run_cli(args, first, err);
        run_cli(args, second, err);
        const std::string golden =
            read_file(kSource + "/tests/golden/" + name + "." + command + "." + format);
        ++runs;
        identical += first.str() == second.str() && first.str() == golden;
      }
  o.pass = equal == checked && identical == runs;
  o.detail = "round trip " + std::to_string(equal) + "/" + std::to_string(checked) +
             "; golden CLI outputs identical " + std::to_string(identical) + "/" +
             std::to_string(runs);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"decomposition identity", decomposition_identity},
      {"epsilon uniqueness / kappa ambiguity", uniqueness},
      {"triple agreement", triple_agreement},
      {"golden Euler-Lagrange corpus", golden_corpus},
      {"symbolic Green residual", green_residual},
      {"numeric Green check and FD slope", numeric_green},
      {"operator laws", operator_laws},
      {"null Lagrangians", null_lagrangians},
      {"parser/renderer", parser_renderer},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu: %s  %s: %s (%.1f s)\n", k + 1, o.pass ? "PASS" : "FAIL",
                criteria[k].first, o.detail.c_str(), seconds);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
