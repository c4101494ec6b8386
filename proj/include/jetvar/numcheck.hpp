#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "jetvar/varcalc.hpp"

#include <json.hpp>

namespace jetvar {

/// Uniform periodic lattice on [0, 2pi)^p with n points per axis.
class Grid {
 public:
  /// Throws std::invalid_argument unless p >= 1 and n >= 4.
  Grid(std::size_t p, std::size_t n);

  std::size_t p() const { return p_; }
  std::size_t n() const { return n_; }
  std::size_t size() const { return size_; }
  double spacing() const;
  double cell_volume() const;
  /// Coordinates of the flat point index (axis 0 varies slowest).
  std::vector<double> point(std::size_t flat) const;

 private:
  std::size_t p_;
  std::size_t n_;
  std::size_t size_;
};

/// One numerical comparison. The relative error is taken against
/// max(|lhs|, |rhs|, scale), where scale is the quadrature of the absolute
/// integrand: an integral that cancels to ~0 is still judged against the
/// size of what was summed. When that denominator is below 1e-12 the
/// absolute error is compared instead.
struct CheckReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double scale = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tol = 0.0;
  bool pass = false;
  double runtime_ms = 0.0;

  static CheckReport compare(std::string name, double lhs, double rhs, double tol,
                             double scale = 0.0, double runtime_ms = 0.0);

  /// {"name","lhs","rhs","scale","abs_err","rel_err","tol","pass","runtime_ms"};
  /// with include_runtime false the runtime is written as null so output
  /// stays reproducible.
  nlohmann::ordered_json to_json(bool include_runtime = true) const;
};

inline constexpr double kDefaultFdStep = 1e-5;
inline constexpr double kDefaultTolerance = 1e-6;
inline constexpr std::size_t kDefaultGridPoints = 64;

/// S(u) = sum over the grid of L(j u) times the cell volume. Throws
/// OpaqueAtomPresent for opaque sections.
double action(const VForm& lagrangian, const SectionSym& section, const Grid& grid);

/// (S(u + h y) - S(u - h y)) / (2h).
double fd_action_derivative(const VForm& lagrangian, const SectionSym& section,
                            const VerticalFieldSym& variation, const Grid& grid, double step);

/// Quadrature of a top-degree form on the base (contact degree 0,
/// coefficients free of jet variables).
double integrate(const VForm& form, const Grid& grid);

/// Same quadrature of the absolute value of the density.
double integrate_abs(const VForm& form, const Grid& grid);

/// FD derivative of the action against the quadrature of the symbolic first
/// variation.
CheckReport verify_first_variation(const VForm& lagrangian, const SectionSym& section,
                                   const VerticalFieldSym& variation, const Grid& grid,
                                   double step = kDefaultFdStep,
                                   double tol = kDefaultTolerance);

/// FD derivative of the action against the quadrature of <y, (j u)^* epsilon>;
/// the exact term integrates to zero on the torus.
CheckReport verify_green(const VForm& lagrangian, const SectionSym& section,
                         const VerticalFieldSym& variation, const Grid& grid,
                         double step = kDefaultFdStep, double tol = kDefaultTolerance);

/// Error of the central difference against the symbolic first variation over
/// a ladder of steps. Each refinement must either shrink the error at order
/// >= min_order or sit below the double-precision roundoff floor
/// (64 eps sqrt(n^p) sum|L| dV / h), which is where central differences of actions
/// quadratic in the section land for every step.
struct ConvergenceReport {
  std::vector<double> steps;
  std::vector<double> errors;
  std::vector<double> roundoff_floor;
  std::vector<double> observed_orders;  // between consecutive steps; NaN if roundoff-limited
  double min_order = 1.8;
  bool truncation_visible = false;      // at least one pair measured above the floor
  bool pass = false;
};

ConvergenceReport fd_convergence(const VForm& lagrangian, const SectionSym& section,
                                 const VerticalFieldSym& variation, const Grid& grid,
                                 const std::vector<double>& steps = {1e-3, 1e-4, 1e-5});

/// Trig polynomial a_0 + sum_k (a_k cos(k.x) + b_k sin(k.x)) over integer
/// frequency vectors with |k|_1 <= degree, coefficients multiples of 1/1000
/// drawn from [-1, 1]. Deterministic for a given generator state.
Expr random_trig_polynomial(std::size_t p, std::mt19937_64& rng, int degree = 3);

}  // namespace jetvar
