#include "hapsris/energy.hpp"

#include <stdexcept>

namespace hapsris {

void validate(const PowerModel& pm) {
  if (pm.static_w < 0.0 || pm.switch_w_per_element < 0.0 || pm.bias_w_per_element < 0.0 ||
      pm.amplifier_w < 0.0 || pm.ue_circuit_w < 0.0) {
    throw std::invalid_argument("power model terms must be >= 0");
  }
}

double total_power_w(const PowerModel& pm, double tx_power_w, std::int64_t n_elements,
                     std::int64_t n_amplifiers, std::int64_t num_ues) {
  if (n_elements < 0 || n_amplifiers < 0 || num_ues < 0) {
    throw std::invalid_argument("counts must be >= 0");
  }
  const std::int64_t q = pm.mode == RisMode::Passive ? 0 : n_amplifiers;
  const auto n = static_cast<double>(n_elements);
  return tx_power_w + pm.static_w + n * pm.switch_w_per_element + n * pm.bias_w_per_element +
         static_cast<double>(q) * pm.amplifier_w + static_cast<double>(num_ues) * pm.ue_circuit_w;
}

double energy_efficiency(double sum_rate_bps, double total_power_w) {
  if (!(total_power_w > 0.0)) {
    throw std::domain_error("total power must be positive");
  }
  return sum_rate_bps / total_power_w;
}

}  // namespace hapsris
