#include "jetvar/numcheck.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "jetvar/error.hpp"

namespace jetvar {

Grid::Grid(std::size_t p, std::size_t n) : p_(p), n_(n), size_(1) {
  if (p == 0) throw std::invalid_argument("grid dimension must be positive");
  if (n < 4) throw std::invalid_argument("grid needs at least 4 points per axis");
  for (std::size_t i = 0; i < p; ++i) size_ *= n;
}

double Grid::spacing() const { return 2.0 * std::numbers::pi / static_cast<double>(n_); }

double Grid::cell_volume() const { return std::pow(spacing(), static_cast<double>(p_)); }

std::vector<double> Grid::point(std::size_t flat) const {
  std::vector<double> x(p_);
  for (std::size_t axis = p_; axis-- > 0;) {
    x[axis] = spacing() * static_cast<double>(flat % n_);
    flat /= n_;
  }
  return x;
}

CheckReport CheckReport::compare(std::string name, double lhs, double rhs, double tol,
                                 double scale, double runtime_ms) {
  CheckReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tol = tol;
  r.scale = scale;
  r.abs_err = std::abs(lhs - rhs);
  const double denom = std::max({std::abs(lhs), std::abs(rhs), scale});
  if (denom < 1e-12) {
    r.rel_err = r.abs_err;
    r.pass = r.abs_err <= tol;
  } else {
    r.rel_err = r.abs_err / denom;
    r.pass = r.rel_err <= tol;
  }
  r.runtime_ms = runtime_ms;
  return r;
}

nlohmann::ordered_json CheckReport::to_json(bool include_runtime) const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["scale"] = scale;
  j["abs_err"] = abs_err;
  j["rel_err"] = rel_err;
  j["tol"] = tol;
  j["pass"] = pass;
  j["runtime_ms"] = include_runtime ? nlohmann::ordered_json(runtime_ms) : nullptr;
  return j;
}

namespace {

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void require_closed_form(const std::vector<Expr>& components, const char* what) {
  for (const auto& c : components)
    if (has_opaque_atoms(c))
      throw OpaqueAtomPresent(std::string(what) + " must be closed-form for numerical checks");
}

// Jet values of the section (and optionally a variation) needed by a density,
// evaluated pointwise: psi^a_N = d^N u^a + t d^N y^a.
class JetSampler {
 public:
  JetSampler(const Expr& density, const SectionSym& section, const VerticalFieldSym* variation)
      : vars_(jet_variables(density)) {
    require_closed_form(section.components(), "sections");
    if (variation) {
      require_closed_form(variation->components(), "variations");
      if (!variation->is_along_section())
        throw std::invalid_argument("variation must depend on the base coordinates only");
    }
    for (const auto& [field, index] : vars_) {
      section_derivs_.push_back(section.derivative(field, index));
      if (variation) {
        Expr d = variation->component(field);
        for (std::size_t axis = 0; axis < index.dim(); ++axis)
          for (int k = 0; k < index[axis]; ++k) d = partial_base(d, axis);
        variation_derivs_.push_back(std::move(d));
      }
    }
  }

  NumericPoint at(const std::vector<double>& x, double t = 0.0) const {
    NumericPoint pt(x);
    const NumericPoint base_only(x);
    for (std::size_t k = 0; k < vars_.size(); ++k) {
      double v = eval_numeric(section_derivs_[k], base_only);
      if (t != 0.0) v += t * eval_numeric(variation_derivs_[k], base_only);
      pt.set_jet(vars_[k].first, vars_[k].second, v);
    }
    return pt;
  }

 private:
  std::vector<JetVariable> vars_;
  std::vector<Expr> section_derivs_;
  std::vector<Expr> variation_derivs_;
};

struct ActionSums {
  double value = 0.0;
  double magnitude = 0.0;  // quadrature of |L|
};

ActionSums action_sums(const Expr& density, const JetSampler& sampler, const Grid& grid,
                       double t) {
  ActionSums s;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = eval_numeric(density, sampler.at(grid.point(i), t));
    s.value += v;
    s.magnitude += std::abs(v);
  }
  s.value *= grid.cell_volume();
  s.magnitude *= grid.cell_volume();
  return s;
}

void check_grid(const VForm& form, const Grid& grid) {
  if (grid.p() != form.space()->p())
    throw DimensionMismatch("grid dimension differs from the base dimension");
}

VForm closed_form_first_variation(const VForm& lagrangian, const SectionSym& section,
                                  const VerticalFieldSym& variation) {
  require_closed_form(section.components(), "sections");
  require_closed_form(variation.components(), "variations");
  return first_variation(lagrangian, section, variation);
}

}  // namespace

double action(const VForm& lagrangian, const SectionSym& section, const Grid& grid) {
  check_grid(lagrangian, grid);
  const Expr density = lagrangian_density(lagrangian);
  return action_sums(density, JetSampler(density, section, nullptr), grid, 0.0).value;
}

double fd_action_derivative(const VForm& lagrangian, const SectionSym& section,
                            const VerticalFieldSym& variation, const Grid& grid, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  check_grid(lagrangian, grid);
  const Expr density = lagrangian_density(lagrangian);
  const JetSampler sampler(density, section, &variation);
  const double plus = action_sums(density, sampler, grid, step).value;
  const double minus = action_sums(density, sampler, grid, -step).value;
  return (plus - minus) / (2.0 * step);
}

namespace {

template <typename Fn>
double quadrature(const VForm& form, const Grid& grid, Fn transform) {
  check_grid(form, grid);
  const auto p = static_cast<int>(form.space()->p());
  if (form.horiz_degree() != p || form.contact_degree() != 0)
    throw std::invalid_argument("only top-degree scalar forms can be integrated over the base");
  const Expr density = lagrangian_density(form);
  if (has_jet_variables(density))
    throw JetVariablePresent("pull the form back along a section before integrating");
  double total = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    total += transform(eval_numeric(density, NumericPoint(grid.point(i))));
  return total * grid.cell_volume();
}

}  // namespace

double integrate(const VForm& form, const Grid& grid) {
  return quadrature(form, grid, [](double v) { return v; });
}

double integrate_abs(const VForm& form, const Grid& grid) {
  return quadrature(form, grid, [](double v) { return std::abs(v); });
}

CheckReport verify_first_variation(const VForm& lagrangian, const SectionSym& section,
                                   const VerticalFieldSym& variation, const Grid& grid,
                                   double step, double tol) {
  const Stopwatch clock;
  const double lhs = fd_action_derivative(lagrangian, section, variation, grid, step);
  const VForm integrand = closed_form_first_variation(lagrangian, section, variation);
  return CheckReport::compare("first_variation", lhs, integrate(integrand, grid), tol,
                              integrate_abs(integrand, grid), clock.elapsed_ms());
}

CheckReport verify_green(const VForm& lagrangian, const SectionSym& section,
                         const VerticalFieldSym& variation, const Grid& grid, double step,
                         double tol) {
  const Stopwatch clock;
  const double lhs = fd_action_derivative(lagrangian, section, variation, grid, step);
  const VForm source = contract(prolonged_coefficients(variation, 0),
                                pull_back_section(euler_lagrange(lagrangian), section));
  // Both sides integrate the same quantity up to an exact divergence; the
  // first-variation density sets the scale when the source vanishes.
  const VForm integrand = closed_form_first_variation(lagrangian, section, variation);
  const double scale = std::max(integrate_abs(source, grid), integrate_abs(integrand, grid));
  return CheckReport::compare("green", lhs, integrate(source, grid), tol, scale,
                              clock.elapsed_ms());
}

ConvergenceReport fd_convergence(const VForm& lagrangian, const SectionSym& section,
                                 const VerticalFieldSym& variation, const Grid& grid,
                                 const std::vector<double>& steps) {
  ConvergenceReport r;
  r.steps = steps;
  const double exact =
      integrate(closed_form_first_variation(lagrangian, section, variation), grid);
  const Expr density = lagrangian_density(lagrangian);
  const double magnitude =
      action_sums(density, JetSampler(density, section, nullptr), grid, 0.0).magnitude;
  const double eps = std::numeric_limits<double>::epsilon();
  const double sqrt_points = std::sqrt(static_cast<double>(grid.size()));
  for (double h : steps) {
    r.errors.push_back(std::abs(fd_action_derivative(lagrangian, section, variation, grid, h) - exact));
    r.roundoff_floor.push_back(64.0 * eps * sqrt_points * magnitude / h);
  }
  r.pass = steps.size() >= 2;
  for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
    const bool coarse_above = r.errors[k] > r.roundoff_floor[k];
    const bool fine_above = r.errors[k + 1] > r.roundoff_floor[k + 1];
    if (!fine_above) {
      r.observed_orders.push_back(std::numeric_limits<double>::quiet_NaN());
      continue;
    }
    const double order =
        std::log(r.errors[k] / r.errors[k + 1]) / std::log(steps[k] / steps[k + 1]);
    r.observed_orders.push_back(order);
    r.truncation_visible = r.truncation_visible || coarse_above;
    if (!coarse_above || order < r.min_order) r.pass = false;
  }
  return r;
}

Expr random_trig_polynomial(std::size_t p, std::mt19937_64& rng, int degree) {
  auto coefficient = [&rng] {
    const auto k = static_cast<long>(rng() % 2001) - 1000;
    return Expr(Rational(k, 1000));
  };
  std::vector<Expr> terms{coefficient()};
  // Frequency vectors with |k|_1 <= degree whose first nonzero entry is positive.
  std::vector<int> k(p, -degree);
  while (true) {
    int l1 = 0;
    int first_nonzero = 0;
    for (int c : k) {
      l1 += std::abs(c);
      if (first_nonzero == 0) first_nonzero = c;
    }
    if (l1 > 0 && l1 <= degree && first_nonzero > 0) {
      std::vector<Expr> phase;
      for (std::size_t axis = 0; axis < p; ++axis)
        if (k[axis] != 0) phase.push_back(Expr(k[axis]) * Expr::base(axis));
      const Expr arg = canonicalize(Expr::sum(std::move(phase)));
      terms.push_back(coefficient() * cos(arg));
      terms.push_back(coefficient() * sin(arg));
    }
    std::size_t axis = p;
    while (axis-- > 0) {
      if (k[axis] < degree) {
        ++k[axis];
        break;
      }
      k[axis] = -degree;
    }
    if (axis == static_cast<std::size_t>(-1)) break;
  }
  return canonicalize(Expr::sum(std::move(terms)));
}

}  // namespace jetvar
