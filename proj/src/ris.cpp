#include "hapsris/ris.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

namespace hapsris {

std::int64_t RisConfig::amplifiers() const {
  if (mode == RisMode::Passive) {
    return 0;
  }
  return (n_total + group_size - 1) / group_size;
}

double RisConfig::effective_dynamic_noise_w() const {
  return mode == RisMode::Passive ? 0.0 : dynamic_noise_w;
}

void validate(const RisConfig& cfg) {
  if (cfg.n_total < 1) {
    throw std::invalid_argument("RIS needs at least one element");
  }
  if (cfg.group_size < 1) {
    throw std::invalid_argument("amplifier group size must be >= 1");
  }
  if (cfg.phase_bits < 0) {
    throw std::invalid_argument("phase bits must be >= 0");
  }
  if (cfg.mode == RisMode::Active && !(cfg.pa_power_w > 0.0)) {
    throw std::invalid_argument("active RIS requires positive amplifier power");
  }
  if (cfg.dynamic_noise_w < 0.0) {
    throw std::invalid_argument("dynamic noise power must be >= 0");
  }
}

double amplification_gain(const RisConfig& cfg, double p_incident_w, double h_gain2) {
  if (cfg.mode == RisMode::Passive) {
    return 1.0;
  }
  if (!(cfg.pa_power_w > 0.0)) {
    throw std::invalid_argument("active RIS requires positive amplifier power");
  }
  if (p_incident_w < 0.0 || h_gain2 < 0.0) {
    throw std::invalid_argument("incident power and channel gain must be >= 0");
  }
  const double group_power =
      p_incident_w * static_cast<double>(cfg.group_size) * h_gain2 + cfg.dynamic_noise_w;
  if (!(group_power > 0.0)) {
    throw std::invalid_argument("amplifier gain unbounded: no incident power and no amplifier noise");
  }
  return std::sqrt(cfg.pa_power_w / group_power);
}

double snr(const UeLink& link, double beta, const RisConfig& cfg) {
  const double b2 = cfg.mode == RisMode::Passive ? 1.0 : beta * beta;
  const double n = link.n_elements;
  const double signal = link.tx_power_w * b2 * n * n * link.h_gain2 * link.g_gain2;
  const double noise = b2 * n * link.g_gain2 * cfg.effective_dynamic_noise_w() + link.noise_w;
  return signal / noise;
}

double rate_bps(double snr, double bandwidth_hz) {
  if (snr < 0.0) {
    throw std::domain_error("negative SNR");
  }
  return bandwidth_hz * std::log2(1.0 + snr);
}

double quantize_phase(double phi, int bits) {
  if (bits < 1 || bits > 62) {
    throw std::invalid_argument("phase bits must lie in [1, 62]");
  }
  const double two_pi = 2.0 * M_PI;
  const double levels = std::ldexp(1.0, bits);
  const double step = two_pi / levels;
  double wrapped = std::fmod(phi, two_pi);
  if (wrapped < 0.0) {
    wrapped += two_pi;
  }
  const double pos = wrapped / step;
  double k = std::floor(pos);
  // Ties go down; strictly above the midpoint goes up.
  if (pos - k > 0.5) {
    k += 1.0;
  }
  if (k >= levels) {
    k = 0.0;
  }
  return k * step;
}

double quantized_coherence_loss(int bits, std::int64_t n_elements, std::uint64_t seed) {
  if (bits < 1) {
    throw std::invalid_argument("phase bits must be >= 1");
  }
  if (n_elements < 1) {
    throw std::invalid_argument("need at least one element");
  }
  if (bits > 62) {
    return 1.0;
  }
  std::mt19937_64 rng(seed);
  const double two_pi = 2.0 * M_PI;
  std::complex<double> acc{0.0, 0.0};
  for (std::int64_t i = 0; i < n_elements; ++i) {
    // 53 random mantissa bits.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double phi = u * two_pi;
    const double err = quantize_phase(phi, bits) - phi;
    acc += std::polar(1.0, err);
  }
  const double n = static_cast<double>(n_elements);
  return std::norm(acc) / (n * n);
}

}  // namespace hapsris
