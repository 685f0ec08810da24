#pragma once

// Reference implementations used only by the tests. They evaluate the
// allocation problem by exhaustive enumeration and never call the solver.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "hapsris/allocator.hpp"

namespace oracle {

inline double snr(const hapsris::UeTerms& u, double n, double p, double n0) {
  const double b2 = u.beta * u.beta;
  return p * u.signal_gain * b2 * n * n / (b2 * n * u.amp_noise_gain + n0);
}

inline double rate(const hapsris::UeTerms& u, double n, double p, double n0, double bw) {
  return bw * std::log2(1.0 + snr(u, n, p, n0));
}

struct GridResult {
  bool feasible = false;
  double sum_rate_bps = 0.0;
  std::vector<std::int64_t> n;
  std::vector<double> p;
};

// Integer element counts, powers on a `step_db` grid inside each box. The
// last UE takes the remaining budget, capped at its box.
inline GridResult grid_search(const hapsris::ProblemSpec& spec, double step_db = 0.01) {
  const std::size_t K = spec.ues.size();
  std::vector<std::vector<double>> pgrid(K);
  for (std::size_t k = 0; k < K; ++k) {
    const auto& u = spec.ues[k];
    const double lo = 10.0 * std::log10(u.p_min_w);
    const double hi = 10.0 * std::log10(u.p_max_w);
    for (int i = 0;; ++i) {
      const double db = lo + i * step_db;
      if (db > hi + 1e-12) break;
      pgrid[k].push_back(std::pow(10.0, db / 10.0));
    }
  }
  auto rate_ok = [&](double g) { return spec.gamma_min <= 0.0 || g >= spec.gamma_min * (1.0 - 1e-12); };

  GridResult best;
  std::vector<std::int64_t> n(K);
  std::vector<double> p(K);
  const auto last = K - 1;
  const auto& ul = spec.ues[last];

  // Depth-first over the first K-1 UEs.
  auto recurse = [&](auto&& self, std::size_t k, double n_used, double p_used, double partial) -> void {
    if (k == last) {
      const double n_rem = std::floor(spec.n_budget - n_used + 1e-9);
      const double p_rem = spec.p_budget_w - p_used;
      const double nl = std::min(n_rem, std::floor(ul.n_max));
      const double pl = std::min(p_rem, ul.p_max_w);
      if (nl < std::ceil(ul.n_min) || pl < ul.p_min_w * (1.0 - 1e-12)) return;
      const double g = snr(ul, nl, pl, spec.noise_w);
      if (!rate_ok(g)) return;
      const double total = partial + spec.bandwidth_hz * std::log2(1.0 + g);
      if (!best.feasible || total > best.sum_rate_bps) {
        best.feasible = true;
        best.sum_rate_bps = total;
        n[last] = static_cast<std::int64_t>(nl);
        p[last] = pl;
        best.n = n;
        best.p = p;
      }
      return;
    }
    const auto& u = spec.ues[k];
    for (auto nk = static_cast<std::int64_t>(std::ceil(u.n_min)); nk <= static_cast<std::int64_t>(u.n_max); ++nk) {
      if (n_used + nk > spec.n_budget) break;
      for (double pk : pgrid[k]) {
        if (p_used + pk > spec.p_budget_w) break;
        const double g = snr(u, static_cast<double>(nk), pk, spec.noise_w);
        if (!rate_ok(g)) continue;
        n[k] = nk;
        p[k] = pk;
        self(self, k + 1, n_used + nk, p_used + pk, partial + spec.bandwidth_hz * std::log2(1.0 + g));
      }
    }
  };
  recurse(recurse, 0, 0.0, 0.0, 0.0);
  return best;
}

// Small random instance: element boxes [n_lo, n_lo + n_width], power boxes
// `p_width_db` wide, budgets strictly inside the box sums so both bind. The
// optional rate floor is what the weakest UE reaches at 30% of its boxes.
inline hapsris::ProblemSpec random_spec(std::mt19937_64& rng, std::size_t K, bool with_rate_floor,
                                        double n_lo = 300.0, double n_width = 40.0, double p_width_db = 1.5) {
  auto uni = [&](double a, double b) { return a + (b - a) * ((rng() >> 11) * 0x1.0p-53); };
  hapsris::ProblemSpec s;
  s.noise_w = 1e-13;
  s.bandwidth_hz = 1e6;
  const double p_lo = 0.1;
  const double p_hi = p_lo * std::pow(10.0, p_width_db / 10.0);
  double min_snr = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < K; ++k) {
    hapsris::UeTerms u;
    u.beta = std::pow(10.0, uni(0.0, 4.0));
    u.n_min = n_lo;
    u.n_max = n_lo + n_width;
    u.p_min_w = p_lo;
    u.p_max_w = p_hi;
    const double n_ref = n_lo + 0.5 * n_width;
    const double target = std::pow(10.0, uni(0.0, 3.0));     // SNR at the box centre
    const double noise_ratio = std::pow(10.0, uni(-1.5, 1.5)); // amplifier / receiver noise
    const double b2 = u.beta * u.beta;
    u.amp_noise_gain = noise_ratio * s.noise_w / (b2 * n_ref);
    u.signal_gain = target * (b2 * n_ref * u.amp_noise_gain + s.noise_w) / (std::sqrt(p_lo * p_hi) * b2 * n_ref * n_ref);
    s.ues.push_back(u);
    min_snr = std::min(min_snr, snr(u, n_lo + 0.3 * n_width, p_lo + 0.3 * (p_hi - p_lo), s.noise_w));
  }
  s.n_budget = std::floor(K * n_lo + uni(0.3, 0.7) * K * n_width);
  s.p_budget_w = K * p_lo + uni(0.3, 0.7) * K * (p_hi - p_lo);
  if (K == 1) {
    s.n_budget = n_lo + n_width + 10.0;
    s.p_budget_w = p_hi * 1.1;
  }
  s.gamma_min = with_rate_floor ? min_snr : 0.0;
  return s;
}

}  // namespace oracle
