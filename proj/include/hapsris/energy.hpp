#pragma once

#include <cstdint>

#include "hapsris/ris.hpp"

namespace hapsris {

/// Power draw of the communication payload. Per-element terms are charged
/// for every element counted by the caller; the amplifier term for every
/// power amplifier.
struct PowerModel {
  double static_w = 0.0;              // P_s, control-station circuitry
  double switch_w_per_element = 0.0;  // P_sw
  double bias_w_per_element = 0.0;    // P_dc
  double amplifier_w = 0.0;           // P_A
  double ue_circuit_w = 0.0;          // per-UE device power
  RisMode mode = RisMode::Active;
};

void validate(const PowerModel& pm);

/// P_t + P_s + N (P_sw + P_dc) + Q P_A + K2 P_ue. A passive model ignores Q.
double total_power_w(const PowerModel& pm, double tx_power_w, std::int64_t n_elements,
                     std::int64_t n_amplifiers, std::int64_t num_ues);

/// Sum-rate per watt, bit/J. Throws std::domain_error for non-positive power.
double energy_efficiency(double sum_rate_bps, double total_power_w);

}  // namespace hapsris
