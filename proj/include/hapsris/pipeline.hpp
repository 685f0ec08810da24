#pragma once

#include <cstdint>
#include <vector>

#include "hapsris/allocator.hpp"
#include "hapsris/channel.hpp"
#include "hapsris/energy.hpp"
#include "hapsris/ris.hpp"
#include "hapsris/scenario.hpp"

namespace hapsris {

/// Link budgets of the feeder hop (CS -> HAPS) and every access hop
/// (HAPS -> UE), with the resulting per-element gains.
struct ChannelState {
  LinkBudget feeder;
  std::vector<LinkBudget> access;
  double h_gain2 = 0.0;
  std::vector<double> g_gain2;
};

ChannelState compute_channels(const Scenario& s, const std::vector<Position>& ues);

RisConfig ris_config(const Scenario& s);
PowerModel power_model(const Scenario& s);

/// Noise floor N0 * B_UE in watts.
double noise_floor_w(const Scenario& s);

/// Allocation problem for the given channel state and per-UE amplification
/// factors (one entry per UE).
ProblemSpec make_problem(const Scenario& s, const ChannelState& ch, const std::vector<double>& beta);

/// One evaluated operating point: a single CSV row plus the detail behind it.
struct PointResult {
  Scheme scheme = Scheme::I;
  std::int64_t n_total = 0;
  std::int64_t group_size = 0;
  std::int64_t amplifiers = 0;
  double pa_power_dbm = 0.0;
  double sum_rate_bps = 0.0;
  double total_power_w = 0.0;
  double energy_eff_bpj = 0.0;
  double min_ue_rate_bps = 0.0;
  bool feasible = false;
  double kkt_residual = 0.0;
  std::uint64_t seed = 0;

  gp::GpStatus status = gp::GpStatus::MaxIterations;
  std::vector<double> beta;
  ProblemSpec problem;
  Allocation allocation;
  CertificationReport certification;
  ChannelState channels;
};

/// Channel model -> amplifier gain -> allocation -> power and efficiency.
/// Solver infeasibility is reported through `feasible`, not thrown.
PointResult run_point(const Scenario& s);

}  // namespace hapsris
