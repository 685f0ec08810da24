#pragma once

#include <map>

#include "hapsris/geometry.hpp"

namespace hapsris {

/// How the LoS/NLoS conditional losses are combined.
enum class BlendDomain {
  Decibel,  // L = p L_los[dB] + (1 - p) L_nlos[dB]
  Linear,   // same weights applied to linear losses, reported back in dB
};

/// Elevation-indexed table in 10 degree buckets (10, 20, ..., 90).
using ElevationTable = std::map<int, double>;

/// Looks up the bucket nearest to `elevation_deg`; elevations below 10
/// degrees use the 10 degree entry. Throws std::out_of_range with
/// "incomplete channel table" when the bucket is absent.
double lookup_bucket(const ElevationTable& table, double elevation_deg);

/// Environment constants for the NTN path-loss model. The clutter and
/// shadow-fading tables have no built-in values; they are loaded from the
/// scenario configuration.
struct ChannelParams {
  double c1 = 9.668;
  double c2 = 0.547;
  double c3 = -10.58;
  double gas_loss_db = 10.0;
  double entry_loss_db = 10.0;
  double scint_coeff = 14.7;
  double scint_exp = -1.136;
  double clutter_loss_los_db = 0.0;
  ElevationTable clutter_loss_nlos_db;
  ElevationTable shadow_fading_los_db;
  ElevationTable shadow_fading_nlos_db;
  double carrier_ghz = 2.0;
  BlendDomain blend = BlendDomain::Decibel;
};

/// Per-link path-loss breakdown. All losses and gains are in dB.
struct LinkBudget {
  double elevation_deg = 0.0;
  double slant_range_m = 0.0;
  double p_los = 0.0;
  double fspl_db = 0.0;
  double scintillation_db = 0.0;
  double pl_los_db = 0.0;
  double pl_nlos_db = 0.0;
  double pl_total_db = 0.0;
  double antenna_gain_tx_db = 0.0;
  double antenna_gain_rx_db = 0.0;
};

/// LoS probability from the fit c1 * e^c2 + c3 (percent), as a fraction
/// clamped to [0, 1]. The fit is only defined for 10 <= elevation <= 90.
double los_probability(double elevation_deg, const ChannelParams& p);

/// Free-space loss with f in GHz and d in metres.
double fspl_db(double carrier_ghz, double distance_m);

double scintillation_loss_db(double elevation_deg, const ChannelParams& p);

/// Full link budget for one hop at the given elevation.
LinkBudget path_loss(double elevation_deg, const ChannelParams& p, const GeometryConstants& g,
                     double antenna_gain_tx_db = 0.0, double antenna_gain_rx_db = 0.0);

struct ElementGains {
  double h_gain2 = 0.0;  // |h|^2, CS -> one RIS element
  double g_gain2 = 0.0;  // |g|^2, one RIS element -> UE
};

/// Linear per-element power gains. Only magnitudes are kept.
ElementGains element_channel_gains(const LinkBudget& cs_to_haps, const LinkBudget& haps_to_ue);

}  // namespace hapsris
