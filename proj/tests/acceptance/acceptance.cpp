// Acceptance checks. Prints one PASS/FAIL line per criterion; an optional
// argument selects a single criterion by name. Exit status is non-zero when
// any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../support/oracles.hpp"
#include "hapsris/allocator.hpp"
#include "hapsris/channel.hpp"
#include "hapsris/geometry.hpp"
#include "hapsris/pipeline.hpp"
#include "hapsris/scenario.hpp"
#include "hapsris/sweep.hpp"
#include "hapsris/units.hpp"

namespace {

using hapsris::PointResult;
using hapsris::Scheme;
using Clock = std::chrono::steady_clock;

// Tolerances.
constexpr int kOracleInstances = 60;
constexpr double kOracleGap = 0.005;
constexpr double kInstanceSeconds = 1.0;
constexpr double kSweepSeconds = 120.0;
constexpr double kOrderingRelTol = 1e-6;
constexpr double kFsplTol = 0.01;
constexpr double kNoiseTol = 0.01;
constexpr double kHighSnr = 100.0;
constexpr double kHighSnrRelGap = 0.015;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct SweepRun {
  std::vector<PointResult> rows;
  double seconds = 0.0;
};

const hapsris::Scenario& base() {
  static const hapsris::Scenario s = hapsris::default_scenario();
  return s;
}

SweepRun run(hapsris::SweepVariable var, unsigned threads = 0) {
  hapsris::SweepSpec sw;
  sw.variable = var;
  sw.values = var == hapsris::SweepVariable::Elements ? hapsris::default_element_values()
                                                      : hapsris::default_pa_power_values();
  sw.schemes = hapsris::all_schemes();
  sw.seed = base().seed;
  const auto t0 = Clock::now();
  SweepRun r;
  r.rows = hapsris::run_sweep(base(), sw, threads);
  r.seconds = seconds_since(t0);
  return r;
}

const SweepRun& element_sweep() {
  static const SweepRun r = run(hapsris::SweepVariable::Elements);
  return r;
}

const SweepRun& power_sweep() {
  static const SweepRun r = run(hapsris::SweepVariable::PaPower);
  return r;
}

// rows[scheme][value index]
std::map<Scheme, std::vector<const PointResult*>> by_scheme(const std::vector<PointResult>& rows) {
  std::map<Scheme, std::vector<const PointResult*>> out;
  for (const auto& r : rows) out[r.scheme].push_back(&r);
  return out;
}

const std::vector<Scheme> kActive = {Scheme::I, Scheme::II, Scheme::III, Scheme::IV};

std::string fmt_row(const PointResult& r) {
  std::ostringstream s;
  s << hapsris::to_string(r.scheme) << "@" << (r.n_total) << "/" << r.pa_power_dbm << "dBm";
  return s.str();
}

Outcome gp_vs_oracle() {
  std::mt19937_64 rng(20240601);
  int worse = 0;
  int slow = 0;
  int infeasible = 0;
  double worst_gap = -1.0;
  double slowest = 0.0;
  for (int i = 0; i < kOracleInstances; ++i) {
    const std::size_t k2 = 1 + static_cast<std::size_t>(i % 3);
    const hapsris::ProblemSpec spec = oracle::random_spec(rng, k2, i % 2 == 1);
    const auto grid = oracle::grid_search(spec);
    const auto t0 = Clock::now();
    const auto alloc = hapsris::allocate(spec);
    const double dt = seconds_since(t0);
    slowest = std::max(slowest, dt);
    if (dt >= kInstanceSeconds) ++slow;
    if (!grid.feasible || !alloc.feasible) {
      ++infeasible;
      continue;
    }
    const double gap = (grid.sum_rate_bps - alloc.sum_rate_bps) / grid.sum_rate_bps;
    worst_gap = std::max(worst_gap, gap);
    if (gap > kOracleGap) ++worse;
  }
  std::ostringstream d;
  d << kOracleInstances << " instances (K=1..3), worst shortfall vs grid " << worst_gap * 100.0
    << "% (limit " << kOracleGap * 100.0 << "%), slowest solve " << slowest << " s, " << infeasible
    << " infeasible, " << slow << " over " << kInstanceSeconds << " s";
  return {worse == 0 && slow == 0 && infeasible == 0, d.str()};
}

Outcome certification() {
  std::size_t checked = 0;
  std::size_t bad = 0;
  std::string first_bad;
  for (const auto* sweep : {&element_sweep(), &power_sweep()}) {
    for (const auto& r : sweep->rows) {
      if (!r.feasible) continue;
      ++checked;
      const auto& a = r.allocation;
      const auto& p = r.problem;
      double n_sum = 0.0, p_sum = 0.0;
      bool ok = r.certification.ok() && r.certification.min_slack >= 0.0;
      for (std::size_t k = 0; k < a.n_elements.size(); ++k) {
        n_sum += static_cast<double>(a.n_elements[k]);
        p_sum += a.tx_power_w[k];
        const double rate = oracle::rate(p.ues[k], static_cast<double>(a.n_elements[k]), a.tx_power_w[k], p.noise_w,
                                         p.bandwidth_hz);
        ok = ok && rate >= base().budgets.r_min_bps * (1.0 - 1e-12);
        ok = ok && a.n_elements[k] >= p.ues[k].n_min && a.n_elements[k] <= p.ues[k].n_max;
      }
      ok = ok && n_sum <= static_cast<double>(r.n_total) && p_sum <= hapsris::dbm_to_watts(base().budgets.p_max_dbm);
      if (!ok) {
        ++bad;
        if (first_bad.empty()) first_bad = fmt_row(r);
      }
    }
  }
  std::ostringstream d;
  d << checked << " feasible allocations re-evaluated, " << bad << " violations";
  if (!first_bad.empty()) d << " (first: " << first_bad << ")";
  return {bad == 0 && checked > 0, d.str()};
}

Outcome scheme_rate_ordering() {
  const auto& sw = element_sweep();
  auto rows = by_scheme(sw.rows);
  const std::vector<Scheme> order = {Scheme::I, Scheme::II, Scheme::III, Scheme::IV, Scheme::Passive};
  std::size_t breaks = 0;
  std::string first;
  const std::size_t points = rows[Scheme::I].size();
  for (std::size_t i = 0; i < points; ++i) {
    for (std::size_t s = 0; s + 1 < order.size(); ++s) {
      const auto* hi = rows[order[s]][i];
      const auto* lo = rows[order[s + 1]][i];
      if (hi->sum_rate_bps < lo->sum_rate_bps * (1.0 - kOrderingRelTol)) {
        ++breaks;
        if (first.empty()) first = fmt_row(*hi) + " < " + fmt_row(*lo);
      }
    }
    for (Scheme a : kActive) {
      if (!(rows[a][i]->sum_rate_bps > rows[Scheme::Passive][i]->sum_rate_bps)) {
        ++breaks;
        if (first.empty()) first = fmt_row(*rows[a][i]) + " not above passive";
      }
    }
  }
  std::ostringstream d;
  d << points << " points x 5 schemes in " << sw.seconds << " s (limit " << kSweepSeconds << " s), " << breaks
    << " ordering breaks";
  if (!first.empty()) d << " (first: " << first << ")";
  d << "; at N=" << rows[Scheme::I][0]->n_total << ": I " << rows[Scheme::I][0]->sum_rate_bps / 1e6 << ", II "
    << rows[Scheme::II][0]->sum_rate_bps / 1e6 << ", III " << rows[Scheme::III][0]->sum_rate_bps / 1e6 << ", IV "
    << rows[Scheme::IV][0]->sum_rate_bps / 1e6 << ", passive " << rows[Scheme::Passive][0]->sum_rate_bps / 1e6
    << " Mbit/s";
  return {breaks == 0 && sw.seconds < kSweepSeconds, d.str()};
}

Outcome efficiency_ordering() {
  auto rows = by_scheme(element_sweep().rows);
  std::size_t breaks = 0;
  std::string first;
  const std::size_t points = rows[Scheme::I].size();
  for (std::size_t i = 0; i < points; ++i) {
    for (Scheme s : {Scheme::II, Scheme::III, Scheme::IV}) {
      if (!(rows[Scheme::I][i]->energy_eff_bpj < rows[s][i]->energy_eff_bpj)) {
        ++breaks;
        if (first.empty()) first = "scheme I not lowest at " + fmt_row(*rows[s][i]);
      }
      if (i > 0 && rows[s][i]->energy_eff_bpj > rows[s][i - 1]->energy_eff_bpj) {
        ++breaks;
        if (first.empty()) first = "EE rises at " + fmt_row(*rows[s][i]);
      }
    }
  }
  std::ostringstream d;
  d << points << " points, " << breaks << " breaks";
  if (!first.empty()) d << " (first: " << first << ")";
  d << "; EE at N=" << rows[Scheme::I][0]->n_total << ": I " << rows[Scheme::I][0]->energy_eff_bpj << ", II "
    << rows[Scheme::II][0]->energy_eff_bpj << ", IV " << rows[Scheme::IV][0]->energy_eff_bpj << " bit/J";
  return {breaks == 0, d.str()};
}

Outcome rate_vs_pa_power() {
  auto rows = by_scheme(power_sweep().rows);
  std::size_t breaks = 0;
  std::string first;
  bool fixed_n = true;
  for (Scheme s : kActive) {
    for (std::size_t i = 0; i < rows[s].size(); ++i) {
      fixed_n = fixed_n && rows[s][i]->n_total == 389120;
      if (i > 0 && !(rows[s][i]->sum_rate_bps > rows[s][i - 1]->sum_rate_bps)) {
        ++breaks;
        if (first.empty()) first = fmt_row(*rows[s][i]);
      }
    }
  }
  std::ostringstream d;
  d << "PA power " << rows[Scheme::I].front()->pa_power_dbm << ".." << rows[Scheme::I].back()->pa_power_dbm
    << " dBm at N=389120, " << breaks << " non-increasing steps";
  if (!first.empty()) d << " (first: " << first << ")";
  d << "; scheme II " << rows[Scheme::II].front()->sum_rate_bps / 1e6 << " -> "
    << rows[Scheme::II].back()->sum_rate_bps / 1e6 << " Mbit/s";
  return {breaks == 0 && fixed_n, d.str()};
}

Outcome efficiency_crossover() {
  auto rows = by_scheme(power_sweep().rows);
  const std::size_t points = rows[Scheme::I].size();
  std::vector<Scheme> winner(points);
  std::ostringstream d;
  d << "EE-best scheme by PA power:";
  for (std::size_t i = 0; i < points; ++i) {
    Scheme best = Scheme::I;
    for (Scheme s : kActive) {
      if (rows[s][i]->energy_eff_bpj > rows[best][i]->energy_eff_bpj) best = s;
    }
    winner[i] = best;
    d << " " << rows[Scheme::I][i]->pa_power_dbm << ":" << hapsris::to_string(best);
  }
  bool found = false;
  for (std::size_t lo = 0; lo < points && !found; ++lo) {
    for (std::size_t hi = lo + 1; hi < points && !found; ++hi) {
      found = hapsris::group_size(winner[lo]) < hapsris::group_size(winner[hi]);
    }
  }
  return {found, d.str()};
}

Outcome feasibility_boundary() {
  hapsris::Scenario s = base();
  s.scheme = Scheme::Passive;
  s.ris.n_total = 389120;
  const auto r = hapsris::run_point(s);
  std::size_t meeting = 0;
  for (double rate : r.allocation.rate_bps) {
    if (rate >= s.budgets.r_min_bps) ++meeting;
  }
  double best_snr = 0.0;
  for (double g : r.allocation.snr) best_snr = std::max(best_snr, g);
  std::ostringstream d;
  d << meeting << "/" << s.ue_count << " UEs reach " << s.budgets.r_min_bps / 1e6 << " Mbit/s; solver "
    << hapsris::gp::to_string(r.status) << ", best UE SNR " << hapsris::linear_to_db(best_snr)
    << " dB vs floor 0 dB, min UE rate " << r.min_ue_rate_bps << " bit/s";
  return {r.feasible && meeting == s.ue_count, d.str()};
}

Outcome unit_anchors() {
  const double gmin = hapsris::gamma_min_from_rate(2e6, 2e6);
  const double fspl = hapsris::fspl_db(2.0, 20000.0);
  const double d90 = hapsris::slant_distance_3d(90.0, base().geometry());
  const double noise_dbm = hapsris::watts_to_dbm(hapsris::noise_floor_w(base()));
  const bool ok = gmin == 1.0 && std::abs(fspl - 124.49) <= kFsplTol && d90 == base().haps.z &&
                  std::abs(noise_dbm - (-110.99)) <= kNoiseTol;
  std::ostringstream d;
  d.precision(10);
  d << "gamma_min " << gmin << ", FSPL " << fspl << " dB, d3D(90) " << d90 << " m, noise floor " << noise_dbm
    << " dBm";
  return {ok, d.str()};
}

Outcome high_snr_consistency() {
  std::size_t checked = 0;
  double worst = 0.0;
  for (const auto* sweep : {&element_sweep(), &power_sweep()}) {
    for (const auto& r : sweep->rows) {
      const auto& snr = r.allocation.snr;
      if (snr.empty() || *std::min_element(snr.begin(), snr.end()) < kHighSnr) continue;
      double product = 0.0, exact = 0.0;
      for (double g : snr) {
        product += std::log2(g);
        exact += std::log1p(g) / std::log(2.0);
      }
      worst = std::max(worst, std::abs(product - exact) / exact);
      ++checked;
    }
  }
  std::ostringstream d;
  d << checked << " sweep points with min SNR >= " << kHighSnr << ", worst relative gap " << worst * 100.0
    << "% (limit " << kHighSnrRelGap * 100.0 << "%)";
  return {checked > 0 && worst <= kHighSnrRelGap, d.str()};
}

Outcome determinism() {
  const auto a = run(hapsris::SweepVariable::Elements, 1);
  const auto b = run(hapsris::SweepVariable::Elements, 0);
  std::ostringstream ca, cb;
  hapsris::write_csv(ca, a.rows);
  hapsris::write_csv(cb, b.rows);
  std::ostringstream d;
  d << "two default sweeps (1 thread vs all), " << ca.str().size() << " bytes, "
    << (ca.str() == cb.str() ? "identical" : "different");
  return {ca.str() == cb.str(), d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"gp-vs-oracle", gp_vs_oracle},
      {"certification", certification},
      {"scheme-rate-ordering", scheme_rate_ordering},
      {"efficiency-ordering", efficiency_ordering},
      {"rate-vs-pa-power", rate_vs_pa_power},
      {"efficiency-crossover", efficiency_crossover},
      {"feasibility-boundary", feasibility_boundary},
      {"unit-anchors", unit_anchors},
      {"high-snr-consistency", high_snr_consistency},
      {"determinism", determinism},
  };
  const std::optional<std::string> only = argc > 1 ? std::optional<std::string>(argv[1]) : std::nullopt;
  if (only && std::none_of(criteria.begin(), criteria.end(), [&](auto& c) { return c.first == *only; })) {
    std::fprintf(stderr, "unknown criterion '%s'\n", only->c_str());
    return 2;
  }
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    if (only && name != *only) continue;
    const Outcome o = check();
    std::printf("%s  %-22s %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
