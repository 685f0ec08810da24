#include "hapsris/sweep.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace hapsris {

SweepVariable parse_sweep_variable(std::string_view text) {
  if (text == "elements") return SweepVariable::Elements;
  if (text == "pa-power") return SweepVariable::PaPower;
  throw std::invalid_argument("unknown sweep variable '" + std::string(text) +
                              "' (expected elements or pa-power)");
}

void validate(const SweepSpec& sw) {
  if (sw.values.empty()) {
    throw std::invalid_argument("sweep needs at least one value");
  }
  for (std::size_t i = 1; i < sw.values.size(); ++i) {
    if (!(sw.values[i] > sw.values[i - 1])) {
      throw std::invalid_argument("sweep values must be strictly increasing");
    }
  }
  if (sw.schemes.empty()) {
    throw std::invalid_argument("sweep needs at least one scheme");
  }
  if (sw.repetitions < 1) {
    throw std::invalid_argument("repetitions must be >= 1");
  }
}

namespace {

double parse_number(std::string_view text) {
  const std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(v)) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::vector<double> parse_values(std::string_view text) {
  std::vector<double> out;
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) {
      throw std::invalid_argument("range must look like start:stop:step");
    }
    const double a = parse_number(parts[0]);
    const double b = parse_number(parts[1]);
    const double step = parse_number(parts[2]);
    if (!(step > 0.0) || b < a) {
      throw std::invalid_argument("range needs step > 0 and stop >= start");
    }
    const auto count = static_cast<std::int64_t>(std::floor((b - a) / step + 1e-9));
    for (std::int64_t i = 0; i <= count; ++i) {
      out.push_back(a + static_cast<double>(i) * step);
    }
  } else {
    for (const auto part : split(text, ',')) {
      out.push_back(parse_number(part));
    }
  }
  return out;
}

std::vector<Scheme> parse_schemes(std::string_view text) {
  std::vector<Scheme> out;
  for (const auto part : split(text, ',')) {
    out.push_back(parse_scheme(part));
  }
  return out;
}

std::vector<double> default_element_values() { return parse_values("389120:716800:65536"); }
std::vector<double> default_pa_power_values() { return parse_values("20:40:2"); }

Scenario sweep_point(const Scenario& base, const SweepSpec& sw, Scheme scheme, double value, int rep) {
  Scenario s = base;
  s.scheme = scheme;
  s.seed = sw.seed + static_cast<std::uint64_t>(rep);
  if (sw.variable == SweepVariable::Elements) {
    s.ris.n_total = static_cast<std::int64_t>(std::llround(value));
  } else {
    s.ris.pa_power_dbm = value;
  }
  return s;
}

std::vector<PointResult> run_sweep(const Scenario& base, const SweepSpec& sw, unsigned threads) {
  validate(sw);
  struct Job {
    Scheme scheme;
    double value;
    int rep;
  };
  std::vector<Job> jobs;
  for (const Scheme scheme : sw.schemes) {
    for (const double v : sw.values) {
      for (int rep = 0; rep < sw.repetitions; ++rep) {
        jobs.push_back({scheme, v, rep});
      }
    }
  }
  // Validate every point before any work starts.
  for (const Job& j : jobs) {
    validate(sweep_point(base, sw, j.scheme, j.value, j.rep));
  }

  std::vector<PointResult> results(jobs.size());
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  threads = std::min<unsigned>(threads, static_cast<unsigned>(jobs.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        const Job& j = jobs[i];
        results[i] = run_point(sweep_point(base, sw, j.scheme, j.value, j.rep));
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) {
      pool.emplace_back(worker);
    }
    worker();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  return results;
}

std::string csv_header() {
  return "scheme,N,T,Q,pa_power_dbm,sum_rate_bps,total_power_w,energy_eff_bpj,min_ue_rate_bps,feasible,"
         "kkt_residual,seed";
}

std::string csv_row(const PointResult& r) {
  // {} prints the shortest representation that round-trips.
  return fmt::format("{},{},{},{},{},{},{},{},{},{},{},{}", to_string(r.scheme), r.n_total, r.group_size,
                     r.amplifiers, r.pa_power_dbm, r.sum_rate_bps, r.total_power_w, r.energy_eff_bpj,
                     r.min_ue_rate_bps, r.feasible ? 1 : 0, r.kkt_residual, r.seed);
}

void write_csv(std::ostream& out, const std::vector<PointResult>& rows) {
  out << csv_header() << '\n';
  for (const auto& r : rows) {
    out << csv_row(r) << '\n';
  }
}

void write_csv_file(const std::filesystem::path& path, const std::vector<PointResult>& rows) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error(path.string() + ": cannot open for writing");
  }
  write_csv(out, rows);
  out.flush();
  if (!out) {
    throw std::runtime_error(path.string() + ": write failed");
  }
}

}  // namespace hapsris
