#include "hapsris/scenario.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "hapsris/units.hpp"

namespace hapsris {

std::int64_t group_size(Scheme s) {
  switch (s) {
    case Scheme::I:
      return 1;
    case Scheme::II:
      return 512;
    case Scheme::III:
      return 1024;
    case Scheme::IV:
      return 2048;
    case Scheme::Passive:
      return 0;
  }
  return 0;
}

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::I:
      return "I";
    case Scheme::II:
      return "II";
    case Scheme::III:
      return "III";
    case Scheme::IV:
      return "IV";
    case Scheme::Passive:
      return "passive";
  }
  return "?";
}

Scheme parse_scheme(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "i") return Scheme::I;
  if (t == "ii") return Scheme::II;
  if (t == "iii") return Scheme::III;
  if (t == "iv") return Scheme::IV;
  if (t == "passive") return Scheme::Passive;
  throw std::invalid_argument("unknown scheme '" + std::string(text) + "' (expected I, II, III, IV or passive)");
}

std::vector<Scheme> all_schemes() {
  return {Scheme::I, Scheme::II, Scheme::III, Scheme::IV, Scheme::Passive};
}

void load_urban_s_band_tables(ChannelParams& p) {
  // Urban scenario, S band: NLoS clutter loss, LoS and NLoS shadow-fading
  // standard deviations, all in dB.
  constexpr std::array<std::array<double, 4>, 9> kRows{{
      {10, 34.3, 4.0, 6.0},
      {20, 30.9, 4.0, 6.0},
      {30, 29.0, 4.0, 6.0},
      {40, 27.7, 4.0, 6.0},
      {50, 26.8, 4.0, 6.0},
      {60, 26.2, 4.0, 6.0},
      {70, 25.8, 4.0, 6.0},
      {80, 25.5, 4.0, 6.0},
      {90, 25.5, 4.0, 6.0},
  }};
  p.clutter_loss_nlos_db.clear();
  p.shadow_fading_los_db.clear();
  p.shadow_fading_nlos_db.clear();
  for (const auto& row : kRows) {
    const int e = static_cast<int>(row[0]);
    p.clutter_loss_nlos_db[e] = row[1];
    p.shadow_fading_los_db[e] = row[2];
    p.shadow_fading_nlos_db[e] = row[3];
  }
}

Scenario default_scenario() {
  Scenario s;
  load_urban_s_band_tables(s.channel);
  return s;
}

namespace {

std::string where(const YAML::Node& node, const std::string& source) {
  const YAML::Mark m = node.Mark();
  if (m.is_null()) {
    return source;
  }
  return source + ":" + std::to_string(m.line + 1);
}

// Reads the keys of one mapping; leftovers are reported as unknown fields.
class Section {
 public:
  Section(YAML::Node node, std::string path, const std::string& source)
      : node_(std::move(node)), path_(std::move(path)), source_(source) {
    if (node_ && !node_.IsNull() && !node_.IsMap()) {
      fail(node_, "expected a mapping");
    }
  }

  bool present() const { return node_ && node_.IsMap(); }

  template <typename T>
  void read(const char* key, T& out) {
    if (!present()) return;
    seen_.insert(key);
    const YAML::Node v = node_[key];
    if (!v) return;
    try {
      out = v.as<T>();
    } catch (const YAML::Exception&) {
      fail(v, field(key), std::string("has the wrong type"));
    }
  }

  void read_position(const char* key, Position& out) {
    if (!present()) return;
    seen_.insert(key);
    const YAML::Node v = node_[key];
    if (!v) return;
    out = to_position(v, field(key));
  }

  Position to_position(const YAML::Node& v, const std::string& name) const {
    if (!v.IsSequence() || v.size() != 3) {
      fail(v, name, "must be a list [x, y, z]");
    }
    try {
      return {v[0].as<double>(), v[1].as<double>(), v[2].as<double>()};
    } catch (const YAML::Exception&) {
      fail(v, name, "must contain numbers");
    }
  }

  Section child(const char* key) {
    if (present()) {
      seen_.insert(key);
      return {node_[key], field(key), source_};
    }
    return {YAML::Node(), field(key), source_};
  }

  YAML::Node raw(const char* key) {
    if (!present()) return YAML::Node(YAML::NodeType::Undefined);
    seen_.insert(key);
    return node_[key];
  }

  void finish() const {
    if (!present()) return;
    for (const auto& kv : node_) {
      const auto key = kv.first.as<std::string>();
      if (!seen_.contains(key)) {
        fail(kv.first, field(key.c_str()), "is not a known field");
      }
    }
  }

  std::string field(const char* key) const { return path_.empty() ? key : path_ + "." + key; }

  [[noreturn]] void fail(const YAML::Node& at, const std::string& name, const std::string& what) const {
    throw ConfigError(where(at, source_) + ": field '" + name + "' " + what);
  }
  [[noreturn]] void fail(const YAML::Node& at, const std::string& what) const {
    throw ConfigError(where(at, source_) + ": '" + path_ + "' " + what);
  }

  const std::string& source() const { return source_; }

 private:
  YAML::Node node_;
  std::string path_;
  const std::string& source_;
  std::set<std::string> seen_;
};

template <typename Enum>
Enum parse_enum(Section& sec, const char* key, Enum current,
                std::initializer_list<std::pair<const char*, Enum>> options) {
  std::string text;
  sec.read(key, text);
  if (text.empty()) {
    return current;
  }
  for (const auto& [name, value] : options) {
    if (text == name) {
      return value;
    }
  }
  std::string allowed;
  for (const auto& [name, value] : options) {
    allowed += allowed.empty() ? name : std::string(", ") + name;
  }
  throw ConfigError(sec.source() + ": field '" + sec.field(key) + "' must be one of " + allowed);
}

}  // namespace

namespace {

Scenario parse_document(std::string_view yaml_text, const std::string& source_name) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml_text));
  } catch (const YAML::ParserException& e) {
    throw ConfigError(source_name + ":" + std::to_string(e.mark.line + 1) + ": parse error: " + e.msg);
  }

  Scenario s = default_scenario();
  if (!root || root.IsNull()) {
    return s;
  }
  Section top(root, "", source_name);

  Section sc = top.child("scenario");
  YAML::Node area = sc.raw("area_m");
  if (area) {
    if (!area.IsSequence() || area.size() != 2) {
      sc.fail(area, "scenario.area_m", "must be a list [width, height]");
    }
    s.area = {area[0].as<double>(), area[1].as<double>()};
  }
  sc.read("ue_count", s.ue_count);
  sc.read("seed", s.seed);
  YAML::Node ues = sc.raw("ue_positions");
  if (ues && !ues.IsNull()) {
    if (!ues.IsSequence()) {
      sc.fail(ues, "scenario.ue_positions", "must be a list of [x, y, z]");
    }
    s.ue_positions.clear();
    for (std::size_t i = 0; i < ues.size(); ++i) {
      s.ue_positions.push_back(sc.to_position(ues[i], "scenario.ue_positions[" + std::to_string(i) + "]"));
    }
  }
  s.scheme = parse_enum(sc, "scheme", s.scheme,
                        {{"I", Scheme::I}, {"II", Scheme::II}, {"III", Scheme::III}, {"IV", Scheme::IV},
                         {"passive", Scheme::Passive}});
  sc.finish();

  Section nodes = top.child("nodes");
  nodes.read_position("haps", s.haps);
  nodes.read_position("cs", s.cs);
  nodes.read("earth_radius_m", s.earth_radius_m);
  nodes.finish();

  Section spectrum = top.child("spectrum");
  spectrum.read("carrier_ghz", s.carrier_ghz);
  spectrum.read("bandwidth_hz", s.bandwidth_hz);
  spectrum.read("noise_psd_dbm_hz", s.noise_psd_dbm_hz);
  spectrum.read("tx_gain_db", s.tx_gain_db);
  spectrum.read("rx_gain_db", s.rx_gain_db);
  spectrum.finish();
  s.channel.carrier_ghz = s.carrier_ghz;

  Section ch = top.child("channel");
  YAML::Node fit = ch.raw("los_fit");
  if (fit) {
    if (!fit.IsSequence() || fit.size() != 3) {
      ch.fail(fit, "channel.los_fit", "must be a list [c1, c2, c3]");
    }
    s.channel.c1 = fit[0].as<double>();
    s.channel.c2 = fit[1].as<double>();
    s.channel.c3 = fit[2].as<double>();
  }
  ch.read("gas_loss_db", s.channel.gas_loss_db);
  ch.read("entry_loss_db", s.channel.entry_loss_db);
  ch.read("clutter_loss_los_db", s.channel.clutter_loss_los_db);
  Section scint = ch.child("scintillation");
  scint.read("coeff", s.channel.scint_coeff);
  scint.read("exponent", s.channel.scint_exp);
  scint.finish();
  s.channel.blend =
      parse_enum(ch, "blend", s.channel.blend, {{"db", BlendDomain::Decibel}, {"linear", BlendDomain::Linear}});
  YAML::Node tables = ch.raw("tables");
  if (tables) {
    if (!tables.IsMap()) {
      ch.fail(tables, "channel.tables", "must map elevation -> [cl_nlos, sf_los, sf_nlos]");
    }
    s.channel.clutter_loss_nlos_db.clear();
    s.channel.shadow_fading_los_db.clear();
    s.channel.shadow_fading_nlos_db.clear();
    for (const auto& kv : tables) {
      int elev = 0;
      try {
        elev = kv.first.as<int>();
      } catch (const YAML::Exception&) {
        ch.fail(kv.first, "channel.tables", "keys must be integer elevations");
      }
      const YAML::Node row = kv.second;
      const std::string name = "channel.tables." + std::to_string(elev);
      if (!row.IsSequence() || row.size() != 3) {
        ch.fail(row, name, "must be [cl_nlos, sf_los, sf_nlos]");
      }
      try {
        s.channel.clutter_loss_nlos_db[elev] = row[0].as<double>();
        s.channel.shadow_fading_los_db[elev] = row[1].as<double>();
        s.channel.shadow_fading_nlos_db[elev] = row[2].as<double>();
      } catch (const YAML::Exception&) {
        ch.fail(row, name, "must contain numbers");
      }
    }
  }
  ch.finish();

  Section ris = top.child("ris");
  ris.read("elements", s.ris.n_total);
  ris.read("pa_power_dbm", s.ris.pa_power_dbm);
  ris.read("dynamic_noise_dbm", s.ris.dynamic_noise_dbm);
  ris.read("phase_bits", s.ris.phase_bits);
  ris.read("surface_area_m2", s.ris.surface_area_m2);
  ris.read("element_size_wavelengths", s.ris.element_size_wavelengths);
  s.ris.beta_coupling = parse_enum(ris, "beta_coupling", s.ris.beta_coupling,
                                   {{"budget", BetaCoupling::Budget}, {"per_ue", BetaCoupling::PerUe}});
  ris.finish();

  Section power = top.child("power");
  power.read("static_dbm", s.power.static_dbm);
  power.read("switch_mw", s.power.switch_mw);
  power.read("bias_dbm", s.power.bias_dbm);
  power.read("ue_circuit_dbm", s.power.ue_circuit_dbm);
  power.read("include_ue_power", s.power.include_ue_power);
  s.power.accounting =
      parse_enum(power, "element_accounting", s.power.accounting,
                 {{"installed", ElementAccounting::Installed}, {"allocated", ElementAccounting::Allocated}});
  power.finish();

  Section budgets = top.child("budgets");
  budgets.read("p_max_dbm", s.budgets.p_max_dbm);
  budgets.read("p_ue_min_dbm", s.budgets.p_ue_min_dbm);
  budgets.read("p_ue_max_dbm", s.budgets.p_ue_max_dbm);
  budgets.read("n_ue_min", s.budgets.n_ue_min);
  budgets.read("n_ue_max", s.budgets.n_ue_max);
  budgets.read("r_min_bps", s.budgets.r_min_bps);
  budgets.finish();

  Section solver = top.child("solver");
  solver.read("tol", s.solver.tol);
  solver.read("max_iterations", s.solver.max_iterations);
  solver.read("refine_true_rate", s.solver.refine_true_rate);
  solver.finish();

  top.finish();
  validate(s);
  return s;
}

}  // namespace

Scenario parse_scenario(std::string_view yaml_text, const std::string& source_name) {
  try {
    return parse_document(yaml_text, source_name);
  } catch (const YAML::Exception& e) {
    const std::string line = e.mark.is_null() ? "" : ":" + std::to_string(e.mark.line + 1);
    throw ConfigError(source_name + line + ": " + e.msg);
  }
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(path.string() + ": cannot open config file");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path.string());
}

namespace {

void emit_position(YAML::Emitter& out, const Position& p) {
  out << YAML::Flow << YAML::BeginSeq << p.x << p.y << p.z << YAML::EndSeq;
}

}  // namespace

std::string dump_scenario(const Scenario& s) {
  YAML::Emitter out;
  out.SetDoublePrecision(17);
  out << YAML::BeginMap;

  out << YAML::Key << "scenario" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "area_m" << YAML::Value << YAML::Flow << YAML::BeginSeq << s.area.width_m
      << s.area.height_m << YAML::EndSeq;
  out << YAML::Key << "ue_count" << YAML::Value << s.ue_count;
  out << YAML::Key << "seed" << YAML::Value << s.seed;
  out << YAML::Key << "scheme" << YAML::Value << to_string(s.scheme);
  if (!s.ue_positions.empty()) {
    out << YAML::Key << "ue_positions" << YAML::Value << YAML::BeginSeq;
    for (const auto& p : s.ue_positions) {
      emit_position(out, p);
    }
    out << YAML::EndSeq;
  }
  out << YAML::EndMap;

  out << YAML::Key << "nodes" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "haps" << YAML::Value;
  emit_position(out, s.haps);
  out << YAML::Key << "cs" << YAML::Value;
  emit_position(out, s.cs);
  out << YAML::Key << "earth_radius_m" << YAML::Value << s.earth_radius_m;
  out << YAML::EndMap;

  out << YAML::Key << "spectrum" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "carrier_ghz" << YAML::Value << s.carrier_ghz;
  out << YAML::Key << "bandwidth_hz" << YAML::Value << s.bandwidth_hz;
  out << YAML::Key << "noise_psd_dbm_hz" << YAML::Value << s.noise_psd_dbm_hz;
  out << YAML::Key << "tx_gain_db" << YAML::Value << s.tx_gain_db;
  out << YAML::Key << "rx_gain_db" << YAML::Value << s.rx_gain_db;
  out << YAML::EndMap;

  const ChannelParams& c = s.channel;
  out << YAML::Key << "channel" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "los_fit" << YAML::Value << YAML::Flow << YAML::BeginSeq << c.c1 << c.c2 << c.c3
      << YAML::EndSeq;
  out << YAML::Key << "gas_loss_db" << YAML::Value << c.gas_loss_db;
  out << YAML::Key << "entry_loss_db" << YAML::Value << c.entry_loss_db;
  out << YAML::Key << "clutter_loss_los_db" << YAML::Value << c.clutter_loss_los_db;
  out << YAML::Key << "scintillation" << YAML::Value << YAML::Flow << YAML::BeginMap << YAML::Key << "coeff"
      << YAML::Value << c.scint_coeff << YAML::Key << "exponent" << YAML::Value << c.scint_exp << YAML::EndMap;
  out << YAML::Key << "blend" << YAML::Value << (c.blend == BlendDomain::Decibel ? "db" : "linear");
  out << YAML::Key << "tables" << YAML::Value << YAML::BeginMap;
  for (const auto& [elev, cl] : c.clutter_loss_nlos_db) {
    const auto los = c.shadow_fading_los_db.find(elev);
    const auto nlos = c.shadow_fading_nlos_db.find(elev);
    if (los == c.shadow_fading_los_db.end() || nlos == c.shadow_fading_nlos_db.end()) {
      continue;
    }
    out << YAML::Key << elev << YAML::Value << YAML::Flow << YAML::BeginSeq << cl << los->second
        << nlos->second << YAML::EndSeq;
  }
  out << YAML::EndMap;
  out << YAML::EndMap;

  out << YAML::Key << "ris" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "elements" << YAML::Value << s.ris.n_total;
  out << YAML::Key << "pa_power_dbm" << YAML::Value << s.ris.pa_power_dbm;
  out << YAML::Key << "dynamic_noise_dbm" << YAML::Value << s.ris.dynamic_noise_dbm;
  out << YAML::Key << "phase_bits" << YAML::Value << s.ris.phase_bits;
  out << YAML::Key << "surface_area_m2" << YAML::Value << s.ris.surface_area_m2;
  out << YAML::Key << "element_size_wavelengths" << YAML::Value << s.ris.element_size_wavelengths;
  out << YAML::Key << "beta_coupling" << YAML::Value
      << (s.ris.beta_coupling == BetaCoupling::Budget ? "budget" : "per_ue");
  out << YAML::EndMap;

  out << YAML::Key << "power" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "static_dbm" << YAML::Value << s.power.static_dbm;
  out << YAML::Key << "switch_mw" << YAML::Value << s.power.switch_mw;
  out << YAML::Key << "bias_dbm" << YAML::Value << s.power.bias_dbm;
  out << YAML::Key << "ue_circuit_dbm" << YAML::Value << s.power.ue_circuit_dbm;
  out << YAML::Key << "element_accounting" << YAML::Value
      << (s.power.accounting == ElementAccounting::Installed ? "installed" : "allocated");
  out << YAML::Key << "include_ue_power" << YAML::Value << s.power.include_ue_power;
  out << YAML::EndMap;

  out << YAML::Key << "budgets" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "p_max_dbm" << YAML::Value << s.budgets.p_max_dbm;
  out << YAML::Key << "p_ue_min_dbm" << YAML::Value << s.budgets.p_ue_min_dbm;
  out << YAML::Key << "p_ue_max_dbm" << YAML::Value << s.budgets.p_ue_max_dbm;
  out << YAML::Key << "n_ue_min" << YAML::Value << s.budgets.n_ue_min;
  out << YAML::Key << "n_ue_max" << YAML::Value << s.budgets.n_ue_max;
  out << YAML::Key << "r_min_bps" << YAML::Value << s.budgets.r_min_bps;
  out << YAML::EndMap;

  out << YAML::Key << "solver" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "tol" << YAML::Value << s.solver.tol;
  out << YAML::Key << "max_iterations" << YAML::Value << s.solver.max_iterations;
  out << YAML::Key << "refine_true_rate" << YAML::Value << s.solver.refine_true_rate;
  out << YAML::EndMap;

  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

namespace {

bool inside(const Area& a, const Position& p) {
  return p.x >= 0.0 && p.x <= a.width_m && p.y >= 0.0 && p.y <= a.height_m;
}

}  // namespace

void validate(const Scenario& s) {
  auto check = [](bool ok, const std::string& msg) {
    if (!ok) throw ConfigError(msg);
  };
  check(s.area.width_m > 0.0 && s.area.height_m > 0.0, "scenario.area_m must be positive");
  try {
    validate(s.haps);
    validate(s.cs);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("nodes: ") + e.what());
  }
  check(inside(s.area, s.haps), "nodes.haps lies outside the area");
  check(inside(s.area, s.cs), "nodes.cs lies outside the area");
  check(s.haps.z > s.cs.z, "nodes.haps must be above nodes.cs");
  check(s.earth_radius_m > 0.0, "nodes.earth_radius_m must be positive");
  check(s.ue_count >= 1, "scenario.ue_count must be >= 1");
  if (!s.ue_positions.empty()) {
    check(s.ue_positions.size() == s.ue_count,
          "scenario.ue_positions has " + std::to_string(s.ue_positions.size()) + " entries but ue_count is " +
              std::to_string(s.ue_count));
    for (std::size_t i = 0; i < s.ue_positions.size(); ++i) {
      const Position& p = s.ue_positions[i];
      const std::string name = "scenario.ue_positions[" + std::to_string(i) + "]";
      check(std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z) && p.z >= 0.0,
            name + " is not a valid position");
      check(inside(s.area, p), name + " lies outside the area");
      check(p.z < s.haps.z, name + " must be below the HAPS");
    }
  }
  check(s.carrier_ghz > 0.0, "spectrum.carrier_ghz must be positive");
  check(s.bandwidth_hz > 0.0, "spectrum.bandwidth_hz must be positive");
  check(s.channel.gas_loss_db >= 0.0 && s.channel.entry_loss_db >= 0.0 && s.channel.clutter_loss_los_db >= 0.0,
        "channel losses must be >= 0");
  for (int e = 10; e <= 90; e += 10) {
    check(s.channel.clutter_loss_nlos_db.contains(e) && s.channel.shadow_fading_los_db.contains(e) &&
              s.channel.shadow_fading_nlos_db.contains(e),
          "incomplete channel table: channel.tables needs an entry for " + std::to_string(e) + " degrees");
  }
  check(s.ris.n_total >= 1, "ris.elements must be >= 1");
  check(s.ris.phase_bits >= 0 && s.ris.phase_bits <= 62, "ris.phase_bits must lie in [0, 62]");
  check(s.ris.surface_area_m2 > 0.0 && s.ris.element_size_wavelengths > 0.0,
        "ris surface area and element size must be positive");
  check(s.power.switch_mw >= 0.0, "power.switch_mw must be >= 0");
  check(s.budgets.p_ue_min_dbm < s.budgets.p_ue_max_dbm, "budgets.p_ue_min_dbm must be below p_ue_max_dbm");
  check(s.budgets.n_ue_min >= 1.0 && s.budgets.n_ue_min < s.budgets.n_ue_max,
        "budgets.n_ue_min must be >= 1 and below n_ue_max");
  check(s.budgets.r_min_bps >= 0.0, "budgets.r_min_bps must be >= 0");
  const auto k = static_cast<double>(s.ue_count);
  check(k * s.budgets.n_ue_min <= static_cast<double>(s.ris.n_total) &&
            k * dbm_to_watts(s.budgets.p_ue_min_dbm) <= dbm_to_watts(s.budgets.p_max_dbm),
        "box budgets exceed totals");
  check(s.solver.tol > 0.0 && s.solver.max_iterations >= 1, "solver settings must be positive");
}

std::vector<std::string> warnings(const Scenario& s) {
  std::vector<std::string> out;
  const double wavelength = kSpeedOfLight / (s.carrier_ghz * 1e9);
  const double side = s.ris.element_size_wavelengths * wavelength;
  const double needed = static_cast<double>(s.ris.n_total) * side * side;
  if (needed > s.ris.surface_area_m2) {
    std::ostringstream msg;
    msg << s.ris.n_total << " elements of " << side << " m x " << side << " m need " << needed
        << " m^2, more than the configured " << s.ris.surface_area_m2 << " m^2 surface";
    out.push_back(msg.str());
  }
  return out;
}

std::vector<Position> ue_positions(const Scenario& s) {
  if (!s.ue_positions.empty()) {
    return s.ue_positions;
  }
  std::mt19937_64 rng(s.seed);
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<Position> out;
  out.reserve(s.ue_count);
  for (std::size_t i = 0; i < s.ue_count; ++i) {
    const double x = unit() * s.area.width_m;
    const double y = unit() * s.area.height_m;
    out.push_back({x, y, 0.0});
  }
  return out;
}

Scenario generate_scenario(const Scenario& config) {
  validate(config);
  Scenario s = config;
  s.ue_positions = ue_positions(config);
  return s;
}

}  // namespace hapsris
