#include "hapsris/gp.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace hapsris::gp {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// log(sum_i exp(a_i^T y + b_i)): the image of a posynomial under y = log x.
class LogSumExp {
 public:
  LogSumExp(MatrixXd a, VectorXd b) : a_(std::move(a)), b_(std::move(b)) {}

  static LogSumExp from_posynomial(const Posynomial& p, std::size_t n) {
    MatrixXd a = MatrixXd::Zero(static_cast<Eigen::Index>(p.terms.size()), static_cast<Eigen::Index>(n));
    VectorXd b(static_cast<Eigen::Index>(p.terms.size()));
    for (std::size_t t = 0; t < p.terms.size(); ++t) {
      const auto row = static_cast<Eigen::Index>(t);
      b(row) = std::log(p.terms[t].coeff);
      for (const auto& [var, exponent] : p.terms[t].powers) {
        a(row, static_cast<Eigen::Index>(var)) += exponent;
      }
    }
    return {std::move(a), std::move(b)};
  }

  // a^T y + c as a single-term log-sum-exp.
  static LogSumExp affine(std::size_t n, std::size_t var, double slope, double offset) {
    MatrixXd a = MatrixXd::Zero(1, static_cast<Eigen::Index>(n));
    a(0, static_cast<Eigen::Index>(var)) = slope;
    VectorXd b(1);
    b(0) = offset;
    return {std::move(a), std::move(b)};
  }

  // Same function over (y, s) with s subtracted.
  LogSumExp minus_slack() const {
    MatrixXd a(a_.rows(), a_.cols() + 1);
    a.leftCols(a_.cols()) = a_;
    a.col(a_.cols()).setConstant(-1.0);
    return {std::move(a), b_};
  }

  double value(const VectorXd& y) const {
    const VectorXd z = a_ * y + b_;
    const double zmax = z.maxCoeff();
    return zmax + std::log((z.array() - zmax).exp().sum());
  }

  // Returns the value; writes the gradient and, if requested, adds
  // weight * Hessian into `hess`.
  double evaluate(const VectorXd& y, VectorXd& grad, MatrixXd* hess, double weight = 1.0) const {
    const VectorXd z = a_ * y + b_;
    const double zmax = z.maxCoeff();
    const double f = zmax + std::log((z.array() - zmax).exp().sum());
    const VectorXd p = (z.array() - f).exp().matrix();
    grad = a_.transpose() * p;
    if (hess != nullptr && a_.rows() > 1) {
      *hess += weight * (a_.transpose() * p.asDiagonal() * a_ - grad * grad.transpose());
    }
    return f;
  }

  Eigen::Index dims() const { return a_.cols(); }

 private:
  MatrixXd a_;
  VectorXd b_;
};

struct LogProgram {
  std::size_t n = 0;
  std::vector<std::pair<double, LogSumExp>> objective;
  std::vector<LogSumExp> constraints;
};

struct IpmState {
  VectorXd y;
  VectorXd lambda;
  double f0 = 0.0;
  double residual = std::numeric_limits<double>::infinity();
  int iterations = 0;
  bool converged = false;
};

double objective_value(const LogProgram& prog, const VectorXd& y, VectorXd* grad, MatrixXd* hess) {
  const auto n = static_cast<Eigen::Index>(prog.n);
  double f = 0.0;
  if (grad != nullptr) {
    grad->setZero(n);
  }
  VectorXd g(n);
  for (const auto& [w, fn] : prog.objective) {
    if (grad == nullptr) {
      f += w * fn.value(y);
      continue;
    }
    f += w * fn.evaluate(y, g, hess, w);
    *grad += w * g;
  }
  return f;
}

VectorXd constraint_values(const LogProgram& prog, const VectorXd& y) {
  VectorXd f(static_cast<Eigen::Index>(prog.constraints.size()));
  for (std::size_t i = 0; i < prog.constraints.size(); ++i) {
    f(static_cast<Eigen::Index>(i)) = prog.constraints[i].value(y);
  }
  return f;
}

// Residual vector norm [r_dual; r_cent] at (y, lambda) for barrier parameter t.
double residual_norm(const LogProgram& prog, const VectorXd& y, const VectorXd& lambda, double t) {
  const auto n = static_cast<Eigen::Index>(prog.n);
  VectorXd r_dual(n);
  objective_value(prog, y, &r_dual, nullptr);
  VectorXd g(n);
  double cent2 = 0.0;
  for (std::size_t i = 0; i < prog.constraints.size(); ++i) {
    const auto idx = static_cast<Eigen::Index>(i);
    const double fi = prog.constraints[i].evaluate(y, g, nullptr);
    r_dual += lambda(idx) * g;
    const double rc = -lambda(idx) * fi - 1.0 / t;
    cent2 += rc * rc;
  }
  return std::sqrt(r_dual.squaredNorm() + cent2);
}

// Primal-dual interior-point method for
//   minimize f0(y)  s.t. f_i(y) <= 0
// started from a strictly feasible y0. `stop_early` is checked once per
// iteration and may end the run with converged = false.
IpmState primal_dual(const LogProgram& prog, VectorXd y0, const GpOptions& opt,
                     const std::function<bool(const VectorXd&)>& stop_early = {}) {
  constexpr double kMu = 10.0;
  constexpr double kAlpha = 0.01;
  constexpr double kBeta = 0.5;
  const auto n = static_cast<Eigen::Index>(prog.n);
  const auto m = static_cast<Eigen::Index>(prog.constraints.size());

  IpmState st;
  st.y = std::move(y0);
  VectorXd fvals = constraint_values(prog, st.y);
  st.lambda = (-fvals.array()).inverse().matrix();

  IpmState best;
  MatrixXd df(m, n);
  VectorXd g(n);
  VectorXd r_dual(n);
  MatrixXd hess(n, n);

  for (int it = 0; it < opt.max_iterations; ++it) {
    st.iterations = it;
    hess.setZero();
    st.f0 = objective_value(prog, st.y, &r_dual, &hess);
    for (Eigen::Index i = 0; i < m; ++i) {
      fvals(i) = prog.constraints[static_cast<std::size_t>(i)].evaluate(st.y, g, &hess, st.lambda(i));
      df.row(i) = g.transpose();
    }
    r_dual += df.transpose() * st.lambda;
    const double eta = -fvals.dot(st.lambda);
    st.residual = std::max(r_dual.lpNorm<Eigen::Infinity>(), eta);
    if (st.residual < best.residual) {
      best = st;
    }
    if (r_dual.lpNorm<Eigen::Infinity>() <= opt.tol && eta <= opt.tol) {
      st.converged = true;
      return st;
    }
    if (stop_early && stop_early(st.y)) {
      return st;
    }

    const double t = kMu * static_cast<double>(m) / eta;
    const VectorXd r_cent = (-st.lambda.array() * fvals.array() - 1.0 / t).matrix();
    const VectorXd weight = (st.lambda.array() / (-fvals.array())).matrix();
    MatrixXd sys = hess + df.transpose() * weight.asDiagonal() * df;
    const VectorXd rhs = -r_dual - df.transpose() * (r_cent.array() / fvals.array()).matrix();

    Eigen::LDLT<MatrixXd> ldlt(sys);
    double reg = 1e-12 * std::max(1.0, sys.diagonal().cwiseAbs().maxCoeff());
    while (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
      sys.diagonal().array() += reg;
      ldlt.compute(sys);
      reg *= 10.0;
    }
    const VectorXd dy = ldlt.solve(rhs);
    const VectorXd dlambda =
        ((r_cent.array() - st.lambda.array() * (df * dy).array()) / fvals.array()).matrix();

    double s = 1.0;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (dlambda(i) < 0.0) {
        s = std::min(s, -st.lambda(i) / dlambda(i));
      }
    }
    s *= 0.99;
    while (s > 1e-16 && constraint_values(prog, st.y + s * dy).maxCoeff() >= 0.0) {
      s *= kBeta;
    }
    const double r0 = std::sqrt(r_dual.squaredNorm() + r_cent.squaredNorm());
    while (s > 1e-16 &&
           residual_norm(prog, st.y + s * dy, st.lambda + s * dlambda, t) > (1.0 - kAlpha * s) * r0) {
      s *= kBeta;
    }
    if (s <= 1e-16) {
      // No progress possible at this precision.
      break;
    }
    st.y += s * dy;
    st.lambda += s * dlambda;
  }
  best.iterations = st.iterations;
  return best;
}

double max_or_neg_inf(const VectorXd& v) {
  return v.size() == 0 ? -std::numeric_limits<double>::infinity() : v.maxCoeff();
}

}  // namespace

double Posynomial::evaluate(const std::vector<double>& x) const {
  double sum = 0.0;
  for (const auto& term : terms) {
    double v = term.coeff;
    for (const auto& [var, exponent] : term.powers) {
      v *= std::pow(x.at(var), exponent);
    }
    sum += v;
  }
  return sum;
}

void validate(const GpProblem& problem) {
  const std::size_t n = problem.num_variables;
  if (n == 0) {
    throw std::invalid_argument("GP has no variables");
  }
  if (problem.bounds.size() != n) {
    throw std::invalid_argument("GP needs bounds for every variable");
  }
  for (const auto& b : problem.bounds) {
    if (!(b.lower > 0.0) || !(b.upper > b.lower) || !std::isfinite(b.upper)) {
      throw std::invalid_argument("GP variable bounds must satisfy 0 < lower < upper < inf");
    }
  }
  auto check = [n](const Posynomial& p) {
    if (p.terms.empty()) {
      throw std::invalid_argument("empty posynomial");
    }
    for (const auto& t : p.terms) {
      if (!(t.coeff > 0.0) || !std::isfinite(t.coeff)) {
        throw std::invalid_argument("posynomial coefficients must be positive and finite");
      }
      for (const auto& [var, exponent] : t.powers) {
        if (var >= n || !std::isfinite(exponent)) {
          throw std::invalid_argument("monomial references an unknown variable");
        }
      }
    }
  };
  if (problem.objective.empty()) {
    throw std::invalid_argument("GP has no objective");
  }
  for (const auto& f : problem.objective) {
    if (!(f.weight > 0.0)) {
      throw std::invalid_argument("objective weights must be positive");
    }
    check(f.posynomial);
  }
  for (const auto& c : problem.constraints) {
    check(c);
  }
}

const char* to_string(GpStatus status) {
  switch (status) {
    case GpStatus::Optimal:
      return "optimal";
    case GpStatus::Infeasible:
      return "infeasible";
    case GpStatus::MaxIterations:
      return "max-iterations";
  }
  return "unknown";
}

GpSolution solve(const GpProblem& problem, const GpOptions& options,
                 const std::optional<std::vector<double>>& start) {
  validate(problem);
  const std::size_t n = problem.num_variables;

  // Constraint order: posynomials, then lower bounds, then upper bounds.
  LogProgram prog;
  prog.n = n;
  for (const auto& f : problem.objective) {
    prog.objective.emplace_back(f.weight, LogSumExp::from_posynomial(f.posynomial, n));
  }
  for (const auto& c : problem.constraints) {
    prog.constraints.push_back(LogSumExp::from_posynomial(c, n));
  }
  for (std::size_t j = 0; j < n; ++j) {
    prog.constraints.push_back(LogSumExp::affine(n, j, -1.0, std::log(problem.bounds[j].lower)));
  }
  for (std::size_t j = 0; j < n; ++j) {
    prog.constraints.push_back(LogSumExp::affine(n, j, 1.0, -std::log(problem.bounds[j].upper)));
  }

  constexpr double kStartMargin = 1e-3;
  GpSolution sol;
  VectorXd y0(static_cast<Eigen::Index>(n));
  bool usable_start = false;
  if (start && start->size() == n &&
      std::all_of(start->begin(), start->end(), [](double v) { return v > 0.0 && std::isfinite(v); })) {
    for (std::size_t j = 0; j < n; ++j) {
      y0(static_cast<Eigen::Index>(j)) = std::log((*start)[j]);
    }
    usable_start = true;
  }
  // Starts within kStartMargin of the boundary go through phase I first.
  const bool have_start = usable_start && constraint_values(prog, y0).maxCoeff() < -kStartMargin;

  if (!have_start) {
    // Phase I: minimize s subject to f_i(y) <= s and s >= -1, from the
    // supplied start or the centre of the log-space box.
    if (!usable_start) {
      for (std::size_t j = 0; j < n; ++j) {
        y0(static_cast<Eigen::Index>(j)) =
            0.5 * (std::log(problem.bounds[j].lower) + std::log(problem.bounds[j].upper));
      }
    }
    LogProgram phase1;
    phase1.n = n + 1;
    phase1.objective.emplace_back(1.0, LogSumExp::affine(n + 1, n, 1.0, 0.0));
    for (const auto& c : prog.constraints) {
      phase1.constraints.push_back(c.minus_slack());
    }
    phase1.constraints.push_back(LogSumExp::affine(n + 1, n, -1.0, -1.0));
    VectorXd z0(static_cast<Eigen::Index>(n + 1));
    z0.head(static_cast<Eigen::Index>(n)) = y0;
    z0(static_cast<Eigen::Index>(n)) =
        std::max(max_or_neg_inf(constraint_values(prog, y0)), -1.0) + 1.0;

    const auto n_idx = static_cast<Eigen::Index>(n);
    auto enough_margin = [n_idx](const VectorXd& z) { return z(n_idx) < -kStartMargin; };
    const IpmState p1 = primal_dual(phase1, z0, options, enough_margin);
    sol.iterations += p1.iterations;
    y0 = p1.y.head(n_idx);
    if (constraint_values(prog, y0).maxCoeff() >= 0.0) {
      sol.status = GpStatus::Infeasible;
      sol.phase1_margin = p1.y(n_idx);
      sol.kkt_residual = p1.residual;
      sol.values.resize(n);
      for (std::size_t j = 0; j < n; ++j) {
        sol.values[j] = std::exp(y0(static_cast<Eigen::Index>(j)));
      }
      return sol;
    }
  }

  const IpmState st = primal_dual(prog, y0, options);
  sol.iterations += st.iterations;
  sol.status = st.converged ? GpStatus::Optimal : GpStatus::MaxIterations;
  sol.kkt_residual = st.residual;
  sol.log_objective = st.f0;
  sol.values.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    sol.values[j] = std::exp(st.y(static_cast<Eigen::Index>(j)));
  }
  const std::size_t nc = problem.constraints.size();
  for (std::size_t i = 0; i < nc; ++i) {
    sol.constraint_multipliers.push_back(st.lambda(static_cast<Eigen::Index>(i)));
  }
  for (std::size_t j = 0; j < n; ++j) {
    sol.lower_multipliers.push_back(st.lambda(static_cast<Eigen::Index>(nc + j)));
    sol.upper_multipliers.push_back(st.lambda(static_cast<Eigen::Index>(nc + n + j)));
  }
  return sol;
}

}  // namespace hapsris::gp
