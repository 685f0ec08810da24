#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hapsris/channel.hpp"
#include "hapsris/geometry.hpp"

namespace hapsris {

/// Malformed or inconsistent scenario configuration. The message names the
/// offending field and, when known, its line in the source file.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reference architectures: one amplifier per 1, 512, 1024 or 2048
/// elements, or a passive surface.
enum class Scheme { I, II, III, IV, Passive };

/// Elements per amplifier; 0 for the passive surface.
std::int64_t group_size(Scheme s);
std::string to_string(Scheme s);
/// Accepts I, II, III, IV and passive (case-insensitive).
Scheme parse_scheme(std::string_view text);
std::vector<Scheme> all_schemes();

/// Incident power used in the amplifier-gain bound: the CS budget P_max
/// (decoupled from the allocation) or each UE's allocated power.
enum class BetaCoupling { Budget, PerUe };

/// Elements charged in the power model: everything installed or only the
/// elements handed out to UEs.
enum class ElementAccounting { Installed, Allocated };

struct Area {
  double width_m = 15000.0;
  double height_m = 15000.0;
};

struct RisSettings {
  std::int64_t n_total = 389120;
  double pa_power_dbm = 33.0;
  double dynamic_noise_dbm = -80.0;
  int phase_bits = 0;
  double surface_area_m2 = 650.0;
  double element_size_wavelengths = 0.2;
  BetaCoupling beta_coupling = BetaCoupling::Budget;
};

struct PowerSettings {
  double static_dbm = 10.0;
  double switch_mw = 7.8;
  double bias_dbm = 10.0;
  double ue_circuit_dbm = 10.0;
  ElementAccounting accounting = ElementAccounting::Installed;
  bool include_ue_power = true;
};

struct BudgetSettings {
  double p_max_dbm = 33.0;
  double p_ue_min_dbm = 5.0;
  double p_ue_max_dbm = 30.0;
  double n_ue_min = 1000.0;
  double n_ue_max = 50000.0;
  double r_min_bps = 2e6;
};

struct SolverSettings {
  double tol = 1e-6;
  int max_iterations = 500;
  bool refine_true_rate = true;
};

/// Everything needed to evaluate one operating point.
struct Scenario {
  Area area;
  Position haps{7500.0, 7500.0, 20000.0};
  Position cs{6000.0, 6000.0, 0.0};
  double earth_radius_m = 6378e3;

  std::size_t ue_count = 30;
  std::vector<Position> ue_positions;  // empty: drawn from `seed`
  std::uint64_t seed = 42;

  double carrier_ghz = 2.0;
  double bandwidth_hz = 2e6;
  double noise_psd_dbm_hz = -174.0;
  double tx_gain_db = 43.2;
  double rx_gain_db = 0.0;

  ChannelParams channel;
  RisSettings ris;
  PowerSettings power;
  BudgetSettings budgets;
  SolverSettings solver;
  Scheme scheme = Scheme::I;

  /// The platform altitude is the HAPS z-coordinate.
  GeometryConstants geometry() const { return {earth_radius_m, haps.z}; }
};

/// Urban S-band clutter-loss and shadow-fading tables (10 degree buckets).
void load_urban_s_band_tables(ChannelParams& p);

/// Baseline operating point with the urban S-band tables.
Scenario default_scenario();

/// Parses YAML text. Absent keys keep their defaults; unknown keys, wrong
/// types and out-of-range values raise ConfigError.
Scenario parse_scenario(std::string_view yaml_text, const std::string& source_name = "<config>");
Scenario load_scenario(const std::filesystem::path& path);

/// Serializes to the same YAML schema, round-trip exact for doubles.
std::string dump_scenario(const Scenario& s);

/// Throws ConfigError on inconsistent values.
void validate(const Scenario& s);

/// Non-fatal findings, e.g. more elements than fit on the configured surface.
std::vector<std::string> warnings(const Scenario& s);

/// UE positions: the explicit list, or `ue_count` points uniform over the
/// area drawn deterministically from `seed`.
std::vector<Position> ue_positions(const Scenario& s);

/// Copy of `config` with explicit UE positions filled in.
Scenario generate_scenario(const Scenario& config);

}  // namespace hapsris
