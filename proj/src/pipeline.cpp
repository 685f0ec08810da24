#include "hapsris/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hapsris/units.hpp"

namespace hapsris {

ChannelState compute_channels(const Scenario& s, const std::vector<Position>& ues) {
  const GeometryConstants geo = s.geometry();
  ChannelParams params = s.channel;
  params.carrier_ghz = s.carrier_ghz;

  ChannelState ch;
  ch.feeder = path_loss(elevation_angle_deg(s.cs, s.haps), params, geo, s.tx_gain_db, 0.0);
  ch.access.reserve(ues.size());
  ch.g_gain2.reserve(ues.size());
  for (const Position& ue : ues) {
    ch.access.push_back(path_loss(elevation_angle_deg(ue, s.haps), params, geo, 0.0, s.rx_gain_db));
    const ElementGains gains = element_channel_gains(ch.feeder, ch.access.back());
    ch.h_gain2 = gains.h_gain2;
    ch.g_gain2.push_back(gains.g_gain2);
  }
  if (ues.empty()) {
    ch.h_gain2 = db_to_linear(s.tx_gain_db - ch.feeder.pl_total_db);
  }
  return ch;
}

RisConfig ris_config(const Scenario& s) {
  RisConfig cfg;
  cfg.n_total = s.ris.n_total;
  cfg.pa_power_w = dbm_to_watts(s.ris.pa_power_dbm);
  cfg.dynamic_noise_w = dbm_to_watts(s.ris.dynamic_noise_dbm);
  cfg.phase_bits = s.ris.phase_bits;
  if (s.scheme == Scheme::Passive) {
    cfg.mode = RisMode::Passive;
    cfg.group_size = 1;
  } else {
    cfg.mode = RisMode::Active;
    cfg.group_size = group_size(s.scheme);
  }
  return cfg;
}

PowerModel power_model(const Scenario& s) {
  PowerModel pm;
  pm.static_w = dbm_to_watts(s.power.static_dbm);
  pm.switch_w_per_element = s.power.switch_mw * 1e-3;
  pm.bias_w_per_element = dbm_to_watts(s.power.bias_dbm);
  pm.amplifier_w = dbm_to_watts(s.ris.pa_power_dbm);
  pm.ue_circuit_w = dbm_to_watts(s.power.ue_circuit_dbm);
  pm.mode = s.scheme == Scheme::Passive ? RisMode::Passive : RisMode::Active;
  return pm;
}

double noise_floor_w(const Scenario& s) {
  return dbm_to_watts(s.noise_psd_dbm_hz) * s.bandwidth_hz;
}

ProblemSpec make_problem(const Scenario& s, const ChannelState& ch, const std::vector<double>& beta) {
  const RisConfig cfg = ris_config(s);
  ProblemSpec spec;
  spec.noise_w = noise_floor_w(s);
  spec.bandwidth_hz = s.bandwidth_hz;
  spec.n_budget = static_cast<double>(s.ris.n_total);
  spec.p_budget_w = dbm_to_watts(s.budgets.p_max_dbm);
  spec.gamma_min = gamma_min_from_rate(s.budgets.r_min_bps, s.bandwidth_hz);
  const double p_min = dbm_to_watts(s.budgets.p_ue_min_dbm);
  const double p_max = dbm_to_watts(s.budgets.p_ue_max_dbm);
  for (std::size_t k = 0; k < ch.g_gain2.size(); ++k) {
    UeTerms ue;
    ue.signal_gain = ch.h_gain2 * ch.g_gain2[k];
    ue.amp_noise_gain = ch.g_gain2[k] * cfg.effective_dynamic_noise_w();
    ue.beta = cfg.mode == RisMode::Passive ? 1.0 : beta.at(k);
    ue.n_min = s.budgets.n_ue_min;
    ue.n_max = s.budgets.n_ue_max;
    ue.p_min_w = p_min;
    ue.p_max_w = p_max;
    spec.ues.push_back(ue);
  }
  return spec;
}

namespace {

constexpr int kMaxCouplingRounds = 20;
constexpr double kCouplingTol = 1e-6;

void evaluate_rates(Allocation& alloc, const ProblemSpec& spec) {
  alloc.sum_rate_bps = 0.0;
  for (std::size_t k = 0; k < spec.ues.size(); ++k) {
    alloc.snr[k] = ue_snr(spec.ues[k], static_cast<double>(alloc.n_elements[k]), alloc.tx_power_w[k],
                          spec.noise_w);
    alloc.rate_bps[k] = rate_bps(alloc.snr[k], spec.bandwidth_hz);
    alloc.sum_rate_bps += alloc.rate_bps[k];
  }
}

}  // namespace

PointResult run_point(const Scenario& s) {
  validate(s);
  const std::vector<Position> ues = ue_positions(s);
  const RisConfig cfg = ris_config(s);
  validate(cfg);

  PointResult r;
  r.scheme = s.scheme;
  r.n_total = s.ris.n_total;
  r.group_size = group_size(s.scheme);
  r.amplifiers = cfg.amplifiers();
  r.pa_power_dbm = s.ris.pa_power_dbm;
  r.seed = s.seed;
  r.channels = compute_channels(s, ues);

  AllocatorOptions opts;
  opts.gp.tol = s.solver.tol;
  opts.gp.max_iterations = s.solver.max_iterations;
  opts.refine_true_rate = s.solver.refine_true_rate;

  const double p_max = dbm_to_watts(s.budgets.p_max_dbm);
  const double beta0 = amplification_gain(cfg, p_max, r.channels.h_gain2);
  r.beta.assign(ues.size(), beta0);
  r.problem = make_problem(s, r.channels, r.beta);
  r.allocation = allocate(r.problem, opts);

  if (s.ris.beta_coupling == BetaCoupling::PerUe && cfg.mode == RisMode::Active) {
    // Fixed point between the amplifier bound and each UE's own power.
    for (int round = 0; round < kMaxCouplingRounds; ++round) {
      double change = 0.0;
      std::vector<double> next(ues.size());
      for (std::size_t k = 0; k < ues.size(); ++k) {
        next[k] = amplification_gain(cfg, r.allocation.tx_power_w[k], r.channels.h_gain2);
        change = std::max(change, std::abs(next[k] / r.beta[k] - 1.0));
      }
      if (change < kCouplingTol) {
        break;
      }
      r.beta = std::move(next);
      r.problem = make_problem(s, r.channels, r.beta);
      r.allocation = allocate(r.problem, opts);
    }
  }

  // Discrete phases only shrink the coherent signal term; the allocation
  // itself is computed with continuous phases.
  ProblemSpec evaluated = r.problem;
  if (cfg.phase_bits > 0) {
    for (std::size_t k = 0; k < evaluated.ues.size(); ++k) {
      evaluated.ues[k].signal_gain *=
          quantized_coherence_loss(cfg.phase_bits, r.allocation.n_elements[k], s.seed + k);
    }
    evaluate_rates(r.allocation, evaluated);
  }
  r.certification = certify(r.allocation, evaluated);
  r.status = r.allocation.status;
  r.feasible = r.allocation.feasible && r.certification.ok();
  r.kkt_residual = r.allocation.kkt_residual;
  r.sum_rate_bps = r.allocation.sum_rate_bps;
  r.min_ue_rate_bps = r.allocation.min_rate_bps();

  const PowerModel pm = power_model(s);
  const double tx = std::accumulate(r.allocation.tx_power_w.begin(), r.allocation.tx_power_w.end(), 0.0);
  std::int64_t counted = s.ris.n_total;
  if (s.power.accounting == ElementAccounting::Allocated) {
    counted = std::accumulate(r.allocation.n_elements.begin(), r.allocation.n_elements.end(), std::int64_t{0});
  }
  RisConfig counted_cfg = cfg;
  counted_cfg.n_total = std::max<std::int64_t>(counted, 1);
  const auto num_ues = s.power.include_ue_power ? static_cast<std::int64_t>(ues.size()) : 0;
  r.total_power_w = total_power_w(pm, tx, counted, counted_cfg.amplifiers(), num_ues);
  r.energy_eff_bpj = energy_efficiency(r.sum_rate_bps, r.total_power_w);
  return r;
}

}  // namespace hapsris
