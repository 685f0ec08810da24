#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hapsris/gp.hpp"

namespace hapsris {

/// SNR coefficients and per-UE boxes for one HAPS-RIS user. With phases
/// aligned, the SNR of UE k holding N elements and P watts is
///
///   gamma = P a beta^2 N^2 / (beta^2 N b + n0)
///
/// where a = |h|^2 |g|^2 and b = |g|^2 sigma_z^2 (zero for a passive surface).
struct UeTerms {
  double signal_gain = 0.0;     // a
  double amp_noise_gain = 0.0;  // b
  double beta = 1.0;
  double n_min = 1.0;
  double n_max = 1.0;
  double p_min_w = 0.0;
  double p_max_w = 0.0;
};

struct ProblemSpec {
  std::vector<UeTerms> ues;
  double noise_w = 0.0;  // n0 = N0 * B_UE
  double bandwidth_hz = 0.0;
  double n_budget = 0.0;    // N_max
  double p_budget_w = 0.0;  // P_max
  double gamma_min = 0.0;   // 0 disables the per-UE rate floor
};

/// Structural checks; throws std::invalid_argument. Box sums that cannot fit
/// the budgets raise "box budgets exceed totals".
void validate(const ProblemSpec& spec);

double ue_snr(const UeTerms& ue, double n_elements, double tx_power_w, double noise_w);

/// SNR needed for a rate of `rate_bps` on a `bandwidth_hz` channel.
double gamma_min_from_rate(double rate_bps, double bandwidth_hz);

/// Variable layout of the GP built from a ProblemSpec: element counts first,
/// then powers.
inline std::size_t n_var(std::size_t k) { return k; }
inline std::size_t p_var(std::size_t k, std::size_t num_ues) { return num_ues + k; }

/// Relaxed sum-rate problem as a GP over (N_k, P_k):
///
///   minimize    prod_k (1/gamma_k)^{w_k}
///   subject to  gamma_min / gamma_k <= 1
///               sum_k N_k / N_max <= 1,   sum_k P_k / P_max <= 1
///               box bounds on N_k and P_k
///
/// with 1/gamma_k = (b/a) N^-1 P^-1 + (n0 / (a beta^2)) N^-2 P^-1. Empty
/// `weights` means all ones, the high-SNR product objective.
gp::GpProblem build_gp(const ProblemSpec& spec, std::span<const double> weights = {});

struct AllocatorOptions {
  gp::GpOptions gp;
  /// After the product-objective GP, re-solve with weights
  /// w_k = gamma_k / (1 + gamma_k), the tangent of log(1 + gamma) in
  /// log(gamma). Each round cannot decrease the exact sum-rate.
  bool refine_true_rate = true;
  int max_refinements = 30;
  double refine_rel_tol = 1e-10;
};

struct RelaxedSolution {
  gp::GpStatus status = gp::GpStatus::MaxIterations;
  std::vector<double> n_elements;
  std::vector<double> tx_power_w;
  std::vector<double> rate_multipliers;
  double n_budget_multiplier = 0.0;
  double p_budget_multiplier = 0.0;
  double kkt_residual = 0.0;
  double phase1_margin = 0.0;
  int iterations = 0;
  int refinements = 0;

  double sum_rate_bps(const ProblemSpec& spec) const;
};

/// Solves the continuous relaxation. Returns status Infeasible when no
/// strictly feasible allocation meets gamma_min under the budgets.
RelaxedSolution solve_relaxed(const ProblemSpec& spec, const AllocatorOptions& options = {});

struct Allocation {
  std::vector<std::int64_t> n_elements;
  std::vector<double> tx_power_w;
  std::vector<double> snr;
  std::vector<double> rate_bps;
  double sum_rate_bps = 0.0;
  bool feasible = false;
  double kkt_residual = 0.0;
  gp::GpStatus status = gp::GpStatus::MaxIterations;

  double min_rate_bps() const;
};

/// Ceil rounding of the relaxed element counts. When the rounded counts
/// overshoot N_max, UEs are decremented one element at a time, largest
/// (N_k - N_k*) first and lowest index on ties, never below N_k,min and
/// never below the rate floor. Reports feasible = false if that is
/// impossible.
Allocation round_and_repair(const RelaxedSolution& relaxed, const ProblemSpec& spec);

/// Full pipeline: relax, solve, round. An infeasible rate floor yields a
/// best-effort allocation solved without it, flagged feasible = false.
Allocation allocate(const ProblemSpec& spec, const AllocatorOptions& options = {});

struct Slack {
  std::string name;
  double value = 0.0;  // >= 0 means satisfied
};

struct CertificationReport {
  std::vector<Slack> slacks;
  std::size_t violations = 0;
  double sum_rate_bps = 0.0;
  double min_rate_bps = 0.0;
  double min_slack = 0.0;

  bool ok() const { return violations == 0; }
};

/// Re-evaluates every constraint of the integer problem from the raw
/// allocation, independently of the solver, and recomputes the sum-rate.
CertificationReport certify(const Allocation& alloc, const ProblemSpec& spec);

}  // namespace hapsris
