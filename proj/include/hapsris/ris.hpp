#pragma once

#include <cstdint>

namespace hapsris {

enum class RisMode { Active, Passive };

/// Reflecting surface configuration. In active mode every `group_size`
/// consecutive elements share one power amplifier.
struct RisConfig {
  std::int64_t n_total = 1;
  std::int64_t group_size = 1;
  double pa_power_w = 0.0;
  double dynamic_noise_w = 0.0;  // sigma_z^2
  int phase_bits = 0;            // 0 = continuous phases
  RisMode mode = RisMode::Active;

  /// ceil(n_total / group_size) in active mode, 0 for a passive surface.
  std::int64_t amplifiers() const;
  /// Amplifier noise actually injected: zero for a passive surface.
  double effective_dynamic_noise_w() const;
};

void validate(const RisConfig& cfg);

/// Per-UE cascaded link seen through the surface.
struct UeLink {
  double h_gain2 = 0.0;
  double g_gain2 = 0.0;
  double n_elements = 0.0;  // continuous so relaxed allocations can be evaluated
  double tx_power_w = 0.0;
  double noise_w = 0.0;  // N0 * B_UE
};

/// Largest admissible amplification factor when one amplifier drives a group
/// of `group_size` elements that collectively see `p_incident_w * group_size
/// * h_gain2` of incident power:
///   beta = sqrt(P_A / (p_incident * T * |h|^2 + sigma_z^2))
/// Passive surfaces reflect with unit gain.
double amplification_gain(const RisConfig& cfg, double p_incident_w, double h_gain2);

/// Received SNR with ideally aligned phases:
///   P beta^2 N^2 |h|^2 |g|^2 / (beta^2 N |g|^2 sigma_z^2 + n0)
double snr(const UeLink& link, double beta, const RisConfig& cfg);

/// Shannon rate in bit/s.
double rate_bps(double snr, double bandwidth_hz);

/// Nearest level of a uniform `bits`-bit phase quantizer, wrapped to
/// [0, 2 pi). Exact midpoints go to the lower level.
double quantize_phase(double phi, int bits);

/// Monte-Carlo estimate of |sum_i exp(j d_i)|^2 / n^2, where d_i is the
/// quantization error of a uniformly random phase. This is the factor by
/// which coherent combining gain shrinks once phases are quantized.
double quantized_coherence_loss(int bits, std::int64_t n_elements, std::uint64_t seed);

}  // namespace hapsris
