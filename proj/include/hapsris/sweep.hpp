#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hapsris/pipeline.hpp"
#include "hapsris/scenario.hpp"

namespace hapsris {

enum class SweepVariable { Elements, PaPower };

SweepVariable parse_sweep_variable(std::string_view text);  // "elements" | "pa-power"

struct SweepSpec {
  SweepVariable variable = SweepVariable::Elements;
  std::vector<double> values;
  std::vector<Scheme> schemes;
  int repetitions = 1;
  std::uint64_t seed = 42;
};

/// Throws std::invalid_argument unless values are strictly increasing, at
/// least one scheme is given and repetitions >= 1.
void validate(const SweepSpec& sw);

/// "a:b:step" (inclusive of b when it lies on the grid) or "v1,v2,...".
std::vector<double> parse_values(std::string_view text);
std::vector<Scheme> parse_schemes(std::string_view text);

/// 389,120 to 716,800 elements in six equal steps.
std::vector<double> default_element_values();
/// 20 to 40 dBm in 2 dB steps.
std::vector<double> default_pa_power_values();

/// Evaluates every (scheme, value, repetition) point. Points run
/// concurrently on up to `threads` workers (0: hardware concurrency); the
/// result order is scheme-major, then value, then repetition, independent
/// of scheduling. Repetition r places UEs with seed `sw.seed + r` unless the
/// scenario lists explicit positions.
std::vector<PointResult> run_sweep(const Scenario& base, const SweepSpec& sw, unsigned threads = 0);

/// The scenario evaluated at one sweep point.
Scenario sweep_point(const Scenario& base, const SweepSpec& sw, Scheme scheme, double value, int rep);

std::string csv_header();
std::string csv_row(const PointResult& r);
void write_csv(std::ostream& out, const std::vector<PointResult>& rows);
/// Throws std::runtime_error naming the path on I/O failure.
void write_csv_file(const std::filesystem::path& path, const std::vector<PointResult>& rows);

}  // namespace hapsris
