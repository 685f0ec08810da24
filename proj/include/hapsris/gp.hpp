#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hapsris::gp {

/// c * prod_j x_j^{a_j}, with c > 0. Only non-zero exponents are listed.
struct Monomial {
  double coeff = 1.0;
  std::vector<std::pair<std::size_t, double>> powers;
};

/// Sum of monomials. An empty posynomial is not allowed in a problem.
struct Posynomial {
  std::vector<Monomial> terms;

  double evaluate(const std::vector<double>& x) const;
};

/// Objective factor p(x)^weight. A product of such factors with positive
/// weights is a generalized posynomial and stays convex in log space.
struct ObjectiveFactor {
  Posynomial posynomial;
  double weight = 1.0;
};

struct VariableBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Geometric program in standard form:
///
///   minimize    prod_k f_k(x)^{w_k}
///   subject to  g_i(x) <= 1
///               lower_j <= x_j <= upper_j,   0 < lower_j < upper_j < inf
///
/// Every variable must carry finite positive bounds.
struct GpProblem {
  std::size_t num_variables = 0;
  std::vector<std::string> variable_names;
  std::vector<ObjectiveFactor> objective;
  std::vector<Posynomial> constraints;
  std::vector<VariableBounds> bounds;

  std::size_t num_inequalities() const { return constraints.size() + 2 * bounds.size(); }
};

/// Throws std::invalid_argument on non-positive coefficients, out-of-range
/// variable indices, or missing/degenerate bounds.
void validate(const GpProblem& problem);

struct GpOptions {
  double tol = 1e-6;
  int max_iterations = 500;
};

enum class GpStatus {
  Optimal,
  Infeasible,     // phase I found no strictly feasible point
  MaxIterations,  // best iterate returned together with its residual
};

const char* to_string(GpStatus status);

struct GpSolution {
  GpStatus status = GpStatus::MaxIterations;
  std::vector<double> values;  // x, linear scale
  /// Multipliers for the posynomial constraints, then lower bounds, then
  /// upper bounds, all attached to the log-space form.
  std::vector<double> constraint_multipliers;
  std::vector<double> lower_multipliers;
  std::vector<double> upper_multipliers;
  double log_objective = 0.0;
  double kkt_residual = 0.0;
  /// For Infeasible: optimal value of the phase-I program (> 0 certifies
  /// infeasibility in log space).
  double phase1_margin = 0.0;
  int iterations = 0;
};

/// Solves the program after the substitution y = log x, where every
/// posynomial becomes a convex log-sum-exp function. Uses a primal-dual
/// interior-point method; a phase-I program supplies the strictly feasible
/// start unless `start` is already strictly feasible.
GpSolution solve(const GpProblem& problem, const GpOptions& options = {},
                 const std::optional<std::vector<double>>& start = std::nullopt);

}  // namespace hapsris::gp
