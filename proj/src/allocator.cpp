#include "hapsris/allocator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace hapsris {

void validate(const ProblemSpec& spec) {
  if (spec.ues.empty()) {
    throw std::invalid_argument("problem has no UEs");
  }
  if (!(spec.noise_w > 0.0) || !(spec.bandwidth_hz > 0.0)) {
    throw std::invalid_argument("noise power and bandwidth must be positive");
  }
  if (!(spec.n_budget > 0.0) || !(spec.p_budget_w > 0.0)) {
    throw std::invalid_argument("budgets must be positive");
  }
  if (spec.gamma_min < 0.0) {
    throw std::invalid_argument("gamma_min must be >= 0");
  }
  double n_floor = 0.0;
  double p_floor = 0.0;
  for (const auto& ue : spec.ues) {
    if (!(ue.signal_gain > 0.0) || ue.amp_noise_gain < 0.0 || !(ue.beta > 0.0)) {
      throw std::invalid_argument("UE coefficients must be positive");
    }
    if (!(ue.n_min > 0.0) || !(ue.n_max > ue.n_min) || !(ue.p_min_w > 0.0) ||
        !(ue.p_max_w > ue.p_min_w)) {
      throw std::invalid_argument("UE boxes must satisfy 0 < min < max");
    }
    n_floor += ue.n_min;
    p_floor += ue.p_min_w;
  }
  if (n_floor > spec.n_budget || p_floor > spec.p_budget_w) {
    throw std::invalid_argument("box budgets exceed totals");
  }
}

double ue_snr(const UeTerms& ue, double n_elements, double tx_power_w, double noise_w) {
  const double b2 = ue.beta * ue.beta;
  return tx_power_w * ue.signal_gain * b2 * n_elements * n_elements /
         (b2 * n_elements * ue.amp_noise_gain + noise_w);
}

double gamma_min_from_rate(double rate_bps, double bandwidth_hz) {
  if (rate_bps < 0.0) {
    throw std::domain_error("rate threshold must be >= 0");
  }
  if (!(bandwidth_hz > 0.0)) {
    throw std::domain_error("bandwidth must be positive");
  }
  return std::exp2(rate_bps / bandwidth_hz) - 1.0;
}

namespace {

// 1/gamma_k as a posynomial in (N_k, P_k), scaled by `scale`.
gp::Posynomial inverse_snr(const UeTerms& ue, double noise_w, std::size_t k, std::size_t num_ues,
                           double scale) {
  gp::Posynomial p;
  const std::size_t nv = n_var(k);
  const std::size_t pv = p_var(k, num_ues);
  if (ue.amp_noise_gain > 0.0) {
    p.terms.push_back({scale * ue.amp_noise_gain / ue.signal_gain, {{nv, -1.0}, {pv, -1.0}}});
  }
  p.terms.push_back(
      {scale * noise_w / (ue.signal_gain * ue.beta * ue.beta), {{nv, -2.0}, {pv, -1.0}}});
  return p;
}

double sum_rate(const ProblemSpec& spec, std::span<const double> n, std::span<const double> p) {
  double total = 0.0;
  for (std::size_t k = 0; k < spec.ues.size(); ++k) {
    total += spec.bandwidth_hz * std::log2(1.0 + ue_snr(spec.ues[k], n[k], p[k], spec.noise_w));
  }
  return total;
}

RelaxedSolution unpack(const gp::GpSolution& sol, const ProblemSpec& spec) {
  const std::size_t k2 = spec.ues.size();
  RelaxedSolution r;
  r.status = sol.status;
  r.kkt_residual = sol.kkt_residual;
  r.phase1_margin = sol.phase1_margin;
  r.iterations = sol.iterations;
  r.n_elements.assign(sol.values.begin(), sol.values.begin() + static_cast<std::ptrdiff_t>(k2));
  r.tx_power_w.assign(sol.values.begin() + static_cast<std::ptrdiff_t>(k2), sol.values.end());
  if (!sol.constraint_multipliers.empty()) {
    const std::size_t rate_rows = spec.gamma_min > 0.0 ? k2 : 0;
    r.rate_multipliers.assign(sol.constraint_multipliers.begin(),
                              sol.constraint_multipliers.begin() + static_cast<std::ptrdiff_t>(rate_rows));
    r.n_budget_multiplier = sol.constraint_multipliers[rate_rows];
    r.p_budget_multiplier = sol.constraint_multipliers[rate_rows + 1];
  }
  return r;
}

}  // namespace

gp::GpProblem build_gp(const ProblemSpec& spec, std::span<const double> weights) {
  validate(spec);
  const std::size_t k2 = spec.ues.size();
  if (!weights.empty() && weights.size() != k2) {
    throw std::invalid_argument("one objective weight per UE required");
  }

  gp::GpProblem gp;
  gp.num_variables = 2 * k2;
  gp.variable_names.resize(2 * k2);
  gp.bounds.resize(2 * k2);
  for (std::size_t k = 0; k < k2; ++k) {
    const auto& ue = spec.ues[k];
    gp.variable_names[n_var(k)] = "N" + std::to_string(k);
    gp.variable_names[p_var(k, k2)] = "P" + std::to_string(k);
    gp.bounds[n_var(k)] = {ue.n_min, ue.n_max};
    gp.bounds[p_var(k, k2)] = {ue.p_min_w, ue.p_max_w};
    gp.objective.push_back({inverse_snr(ue, spec.noise_w, k, k2, 1.0), weights.empty() ? 1.0 : weights[k]});
  }
  if (spec.gamma_min > 0.0) {
    for (std::size_t k = 0; k < k2; ++k) {
      gp.constraints.push_back(inverse_snr(spec.ues[k], spec.noise_w, k, k2, spec.gamma_min));
    }
  }
  gp::Posynomial n_sum;
  gp::Posynomial p_sum;
  for (std::size_t k = 0; k < k2; ++k) {
    n_sum.terms.push_back({1.0 / spec.n_budget, {{n_var(k), 1.0}}});
    p_sum.terms.push_back({1.0 / spec.p_budget_w, {{p_var(k, k2), 1.0}}});
  }
  gp.constraints.push_back(std::move(n_sum));
  gp.constraints.push_back(std::move(p_sum));
  return gp;
}

double RelaxedSolution::sum_rate_bps(const ProblemSpec& spec) const {
  return sum_rate(spec, n_elements, tx_power_w);
}

RelaxedSolution solve_relaxed(const ProblemSpec& spec, const AllocatorOptions& options) {
  gp::GpSolution sol = gp::solve(build_gp(spec), options.gp);
  if (sol.status == gp::GpStatus::Infeasible || !options.refine_true_rate) {
    return unpack(sol, spec);
  }
  RelaxedSolution best = unpack(sol, spec);
  double best_rate = best.sum_rate_bps(spec);
  const std::size_t k2 = spec.ues.size();
  std::vector<double> weights(k2);
  for (int round = 1; round <= options.max_refinements; ++round) {
    for (std::size_t k = 0; k < k2; ++k) {
      const double g = ue_snr(spec.ues[k], best.n_elements[k], best.tx_power_w[k], spec.noise_w);
      weights[k] = g / (1.0 + g);
    }
    const gp::GpSolution next = gp::solve(build_gp(spec, weights), options.gp, sol.values);
    if (next.status == gp::GpStatus::Infeasible) {
      break;
    }
    RelaxedSolution cand = unpack(next, spec);
    const double rate = cand.sum_rate_bps(spec);
    const bool improved = rate > best_rate * (1.0 + options.refine_rel_tol);
    if (rate >= best_rate) {
      cand.iterations += best.iterations;
      cand.refinements = round;
      best = std::move(cand);
      best_rate = rate;
      sol = next;
    }
    if (!improved) {
      break;
    }
  }
  return best;
}

double Allocation::min_rate_bps() const {
  if (rate_bps.empty()) {
    return 0.0;
  }
  return *std::min_element(rate_bps.begin(), rate_bps.end());
}

Allocation round_and_repair(const RelaxedSolution& relaxed, const ProblemSpec& spec) {
  const std::size_t k2 = spec.ues.size();
  if (relaxed.n_elements.size() != k2 || relaxed.tx_power_w.size() != k2) {
    throw std::invalid_argument("relaxed solution does not match problem size");
  }
  Allocation alloc;
  alloc.status = relaxed.status;
  alloc.kkt_residual = relaxed.kkt_residual;
  alloc.tx_power_w = relaxed.tx_power_w;
  alloc.n_elements.resize(k2);
  for (std::size_t k = 0; k < k2; ++k) {
    const auto& ue = spec.ues[k];
    const double lo = std::ceil(ue.n_min);
    const double hi = std::floor(ue.n_max);
    alloc.n_elements[k] = static_cast<std::int64_t>(std::clamp(std::ceil(relaxed.n_elements[k]), lo, hi));
  }

  auto meets_floor = [&](std::size_t k, std::int64_t n) {
    return spec.gamma_min <= 0.0 ||
           ue_snr(spec.ues[k], static_cast<double>(n), alloc.tx_power_w[k], spec.noise_w) >= spec.gamma_min;
  };

  const auto budget = static_cast<std::int64_t>(std::floor(spec.n_budget));
  std::int64_t excess =
      std::accumulate(alloc.n_elements.begin(), alloc.n_elements.end(), std::int64_t{0}) - budget;
  bool repaired = true;
  while (excess > 0) {
    std::size_t pick = k2;
    double pick_slack = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < k2; ++k) {
      const std::int64_t next = alloc.n_elements[k] - 1;
      if (static_cast<double>(next) < spec.ues[k].n_min || !meets_floor(k, next)) {
        continue;
      }
      const double slack = static_cast<double>(alloc.n_elements[k]) - relaxed.n_elements[k];
      if (slack > pick_slack) {
        pick = k;
        pick_slack = slack;
      }
    }
    if (pick == k2) {
      repaired = false;
      break;
    }
    --alloc.n_elements[pick];
    --excess;
  }

  alloc.snr.resize(k2);
  alloc.rate_bps.resize(k2);
  bool floor_ok = true;
  for (std::size_t k = 0; k < k2; ++k) {
    alloc.snr[k] = ue_snr(spec.ues[k], static_cast<double>(alloc.n_elements[k]), alloc.tx_power_w[k],
                          spec.noise_w);
    alloc.rate_bps[k] = spec.bandwidth_hz * std::log2(1.0 + alloc.snr[k]);
    alloc.sum_rate_bps += alloc.rate_bps[k];
    floor_ok = floor_ok && alloc.snr[k] >= spec.gamma_min;
  }
  const bool solved = relaxed.status == gp::GpStatus::Optimal;
  alloc.feasible = solved && repaired && floor_ok;
  return alloc;
}

Allocation allocate(const ProblemSpec& spec, const AllocatorOptions& options) {
  const RelaxedSolution relaxed = solve_relaxed(spec, options);
  if (relaxed.status != gp::GpStatus::Infeasible) {
    return round_and_repair(relaxed, spec);
  }
  ProblemSpec relaxed_spec = spec;
  relaxed_spec.gamma_min = 0.0;
  Allocation best_effort = round_and_repair(solve_relaxed(relaxed_spec, options), relaxed_spec);
  best_effort.feasible = false;
  best_effort.status = gp::GpStatus::Infeasible;
  return best_effort;
}

CertificationReport certify(const Allocation& alloc, const ProblemSpec& spec) {
  const std::size_t k2 = spec.ues.size();
  CertificationReport rep;
  if (alloc.n_elements.size() != k2 || alloc.tx_power_w.size() != k2) {
    rep.slacks.push_back({"shape", -1.0});
    rep.violations = 1;
    rep.min_slack = -1.0;
    return rep;
  }

  const double ln2 = std::log(2.0);
  const double rate_floor = spec.bandwidth_hz * std::log1p(spec.gamma_min) / ln2;
  double n_total = 0.0;
  double p_total = 0.0;
  rep.min_rate_bps = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < k2; ++k) {
    const UeTerms& ue = spec.ues[k];
    const auto n = static_cast<double>(alloc.n_elements[k]);
    const double p = alloc.tx_power_w[k];
    const double amplified = ue.beta * n;
    const double signal = p * ue.signal_gain * amplified * amplified;
    const double noise = ue.amp_noise_gain * ue.beta * amplified + spec.noise_w;
    const double rate = spec.bandwidth_hz * std::log1p(signal / noise) / ln2;
    rep.sum_rate_bps += rate;
    rep.min_rate_bps = std::min(rep.min_rate_bps, rate);
    const std::string id = std::to_string(k);
    rep.slacks.push_back({"rate_" + id, rate - rate_floor});
    rep.slacks.push_back({"n_min_" + id, n - ue.n_min});
    rep.slacks.push_back({"n_max_" + id, ue.n_max - n});
    rep.slacks.push_back({"p_min_" + id, p - ue.p_min_w});
    rep.slacks.push_back({"p_max_" + id, ue.p_max_w - p});
    n_total += n;
    p_total += p;
  }
  rep.slacks.push_back({"n_budget", spec.n_budget - n_total});
  rep.slacks.push_back({"p_budget", spec.p_budget_w - p_total});

  rep.min_slack = std::numeric_limits<double>::infinity();
  for (const auto& s : rep.slacks) {
    rep.min_slack = std::min(rep.min_slack, s.value);
    if (s.value < 0.0 || !std::isfinite(s.value)) {
      ++rep.violations;
    }
  }
  return rep;
}

}  // namespace hapsris
