#include "hapsris/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hapsris/units.hpp"

namespace hapsris {

namespace {

constexpr double kMinFitElevation = 10.0;
constexpr double kMaxFitElevation = 90.0;

}  // namespace

double lookup_bucket(const ElevationTable& table, double elevation_deg) {
  const double clamped = std::clamp(elevation_deg, 10.0, 90.0);
  const int bucket = static_cast<int>(std::lround(clamped / 10.0)) * 10;
  const auto it = table.find(bucket);
  if (it == table.end()) {
    throw std::out_of_range("incomplete channel table: no entry for " + std::to_string(bucket) +
                            " degrees");
  }
  return it->second;
}

double los_probability(double elevation_deg, const ChannelParams& p) {
  if (!(elevation_deg >= kMinFitElevation && elevation_deg <= kMaxFitElevation)) {
    throw std::domain_error("elevation outside LoS-fit domain");
  }
  const double percent = p.c1 * std::pow(elevation_deg, p.c2) + p.c3;
  return std::clamp(percent / 100.0, 0.0, 1.0);
}

double fspl_db(double carrier_ghz, double distance_m) {
  if (!(carrier_ghz > 0.0) || !(distance_m > 0.0)) {
    throw std::domain_error("fspl requires positive frequency and distance");
  }
  return 32.45 + 20.0 * std::log10(carrier_ghz) + 20.0 * std::log10(distance_m);
}

double scintillation_loss_db(double elevation_deg, const ChannelParams& p) {
  if (!(elevation_deg > 0.0)) {
    throw std::domain_error("scintillation loss requires positive elevation");
  }
  return p.scint_coeff * std::pow(elevation_deg, p.scint_exp);
}

LinkBudget path_loss(double elevation_deg, const ChannelParams& p, const GeometryConstants& g,
                     double antenna_gain_tx_db, double antenna_gain_rx_db) {
  LinkBudget lb;
  lb.elevation_deg = elevation_deg;
  lb.p_los = los_probability(elevation_deg, p);
  lb.slant_range_m = slant_distance_3d(elevation_deg, g);
  lb.fspl_db = fspl_db(p.carrier_ghz, lb.slant_range_m);
  lb.scintillation_db = scintillation_loss_db(elevation_deg, p);

  const double cl_nlos = lookup_bucket(p.clutter_loss_nlos_db, elevation_deg);
  const double sf_los = lookup_bucket(p.shadow_fading_los_db, elevation_deg);
  const double sf_nlos = lookup_bucket(p.shadow_fading_nlos_db, elevation_deg);

  // Shadow fading enters as its tabulated value, a deterministic margin.
  const double extra = p.gas_loss_db + lb.scintillation_db + p.entry_loss_db;
  lb.pl_los_db = lb.fspl_db + p.clutter_loss_los_db + sf_los + extra;
  lb.pl_nlos_db = lb.fspl_db + cl_nlos + sf_nlos + extra;

  const double w = lb.p_los;
  if (p.blend == BlendDomain::Decibel) {
    lb.pl_total_db = w * lb.pl_los_db + (1.0 - w) * lb.pl_nlos_db;
  } else {
    lb.pl_total_db =
        linear_to_db(w * db_to_linear(lb.pl_los_db) + (1.0 - w) * db_to_linear(lb.pl_nlos_db));
  }
  lb.antenna_gain_tx_db = antenna_gain_tx_db;
  lb.antenna_gain_rx_db = antenna_gain_rx_db;
  return lb;
}

ElementGains element_channel_gains(const LinkBudget& cs_to_haps, const LinkBudget& haps_to_ue) {
  return {db_to_linear(cs_to_haps.antenna_gain_tx_db - cs_to_haps.pl_total_db),
          db_to_linear(haps_to_ue.antenna_gain_rx_db - haps_to_ue.pl_total_db)};
}

}  // namespace hapsris
