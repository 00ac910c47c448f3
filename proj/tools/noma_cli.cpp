// SPDX-License-Identifier: Apache-2.0
//
// noma — command-line front end for the NOMA analysis toolkit.
//
// Subcommands: table1, region, alloc (sum|wsr|qos), multicell, myths.
// SNR inputs are linear by default; *-db flags convert 10^(dB/10) here at
// the boundary, never inside the library. Exit codes: 0 success/confirmed,
// 1 counterexample found, 2 usage or input error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "noma/allocation.hpp"
#include "noma/multicell.hpp"
#include "noma/region.hpp"
#include "noma/verify.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

/// Two-user channel specified as linear SNRs, dB SNRs, or gains + power.
struct ChannelOptions {
  std::optional<double> gamma1, gamma2;
  std::optional<double> gamma1_db, gamma2_db;
  std::optional<double> gain1, gain2, power;

  void attach(CLI::App& cmd) {
    cmd.add_option("--gamma1", gamma1, "strong user's linear SNR");
    cmd.add_option("--gamma2", gamma2, "weak user's linear SNR");
    cmd.add_option("--gamma1-db", gamma1_db, "strong user's SNR in dB");
    cmd.add_option("--gamma2-db", gamma2_db, "weak user's SNR in dB");
    cmd.add_option("--gain1", gain1, "strong user's channel gain |h1|");
    cmd.add_option("--gain2", gain2, "weak user's channel gain |h2|");
    cmd.add_option("--power", power, "transmit power P (with --gain1/--gain2)");
  }

  /// Defaults reproduce the canonical example: |h1| = 10|h2| = sqrt(5),
  /// P = 40, i.e. (gamma1, gamma2) = (200, 2).
  std::pair<double, double> resolve() const {
    const bool linear = gamma1 || gamma2;
    const bool db = gamma1_db || gamma2_db;
    const bool gains = gain1 || gain2 || power;
    if (linear + db + gains > 1) {
      throw CLI::ValidationError(
          "channel", "give --gamma*, --gamma*-db or --gain*/--power, not a mix");
    }
    if (db) {
      if (!gamma1_db || !gamma2_db) {
        throw CLI::ValidationError("channel", "need both --gamma1-db and --gamma2-db");
      }
      return {db_to_linear(*gamma1_db), db_to_linear(*gamma2_db)};
    }
    if (gains) {
      if (!gain1 || !gain2 || !power) {
        throw CLI::ValidationError("channel", "need --gain1, --gain2 and --power");
      }
      const auto snrs = noma::SnrVector::from_gains(
          {noma::ChannelGain(*gain1), noma::ChannelGain(*gain2)}, *power);
      return {snrs[0], snrs[1]};
    }
    return {gamma1.value_or(200.0), gamma2.value_or(2.0)};
  }
};

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

// ---------------------------------------------------------------------------
// table1

constexpr struct {
  const char* point;
  double alpha;
} kTablePoints[] = {
    {"A", 0.0}, {"B", 0.025}, {"C", 0.5}, {"D", 0.8}, {"E", 1.0}};

int run_table1(const std::string& csv_path) {
  const double g1 = 200.0, g2 = 2.0;
  std::printf("%-6s%-8s%8s%8s%8s\n", "point", "alpha", "r1", "r2", "r_sum");
  for (const auto& row : kTablePoints) {
    const noma::RatePair r = noma::noma_two_user(g1, g2, row.alpha);
    std::printf("%-6s%-8g%8.2f%8.2f%8.2f\n", row.point, row.alpha, r.r1, r.r2,
                r.r1 + r.r2);
  }
  if (!csv_path.empty()) {
    std::string csv = "point,alpha,r1,r2,r_sum\n";
    char line[160];
    for (const auto& row : kTablePoints) {
      const noma::RatePair r = noma::noma_two_user(g1, g2, row.alpha);
      std::snprintf(line, sizeof line, "%s,%.12g,%.12g,%.12g,%.12g\n",
                    row.point, row.alpha, r.r1, r.r2, r.r1 + r.r2);
      csv += line;
    }
    write_text_file(csv_path, csv);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// region

int run_region(const ChannelOptions& channel, std::size_t n_points,
               const std::string& out_path) {
  const auto [g1, g2] = channel.resolve();
  const std::vector<noma::RegionBoundary> boundaries = {
      noma::noma_boundary(g1, g2, n_points),
      noma::oma_boundary(g1, g2, n_points)};
  if (out_path.empty()) {
    noma::write_region_csv(std::cout, boundaries);
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    noma::write_region_csv(out, boundaries);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// alloc

void emit_json(const ordered_json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  std::cout << text;
  if (!out_path.empty()) write_text_file(out_path, text);
}

int run_alloc_sum(const ChannelOptions& channel, const std::string& out_path) {
  const auto [g1, g2] = channel.resolve();
  const noma::SumRateSolution s = noma::max_sum_rate(g1, g2);
  ordered_json j;
  j["alpha"] = s.alpha;
  j["r1"] = s.rates.r1;
  j["r2"] = s.rates.r2;
  j["sum_rate"] = s.rates.r1 + s.rates.r2;
  j["equal_gains"] = s.equal_gains;
  emit_json(j, out_path);
  return kExitOk;
}

int run_alloc_wsr(const ChannelOptions& channel, double mu,
                  const std::string& out_path) {
  const auto [g1, g2] = channel.resolve();
  const noma::WsrSolution s =
      noma::max_weighted_sum_rate(g1, g2, noma::FairnessWeight(mu));
  ordered_json j;
  j["mu"] = mu;
  j["alpha"] = s.alpha;
  j["r1"] = s.rates.r1;
  j["r2"] = s.rates.r2;
  j["weighted_sum_rate"] = s.rates.r1 + mu * s.rates.r2;
  j["degenerate"] = s.degenerate;
  emit_json(j, out_path);
  return kExitOk;
}

int run_alloc_qos(const ChannelOptions& channel, double r1, double r2,
                  const std::string& out_path) {
  const auto [g1, g2] = channel.resolve();
  const noma::FeasibleInterval interval =
      noma::qos_interval(g1, g2, noma::QosRequirement(r1, r2));
  ordered_json j;
  j["r1_min"] = r1;
  j["r2_min"] = r2;
  j["empty"] = interval.empty();
  if (!interval.empty()) {
    j["lo"] = interval.lo();
    j["hi"] = interval.hi();
  }
  emit_json(j, out_path);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// multicell

int run_multicell(const std::string& config_path, unsigned threads,
                  const std::string& out_path) {
  std::ifstream in(config_path);
  if (!in) throw std::runtime_error("cannot open config file: " + config_path);
  const noma::SimSetup setup = noma::load_sim_setup(in);
  const noma::SimReport report =
      noma::simulate(setup.layout, setup.plan, setup.config, threads);
  const std::string text = report.to_json() + "\n";
  std::cout << text;
  if (!out_path.empty()) write_text_file(out_path, text);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// myths

int run_myths(std::uint64_t seed, const std::vector<int>& only,
              const std::string& out_path) {
  std::vector<noma::MythReport> reports;
  if (only.empty()) {
    reports = noma::run_all_myths(seed);
  } else {
    for (int id : only) reports.push_back(noma::check_myth(id, seed));
  }
  const std::string text = noma::myths_to_json(reports) + "\n";
  std::cout << text;
  if (!out_path.empty()) write_text_file(out_path, text);
  for (const auto& r : reports) {
    std::cerr << "myth " << r.myth << ": " << noma::to_string(r.verdict)
              << "\n";
  }
  return noma::all_confirmed(reports) ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Downlink power-domain NOMA analysis toolkit"};
  app.require_subcommand(1);

  // table1
  auto* table1 = app.add_subcommand(
      "table1", "rates at the canonical boundary points A-E (gamma = 200, 2)");
  std::string table1_csv;
  table1->add_option("--csv", table1_csv, "also write exact values as CSV");

  // region
  auto* region = app.add_subcommand(
      "region", "NOMA and OMA rate-region boundaries as CSV");
  ChannelOptions region_channel;
  region_channel.attach(*region);
  std::size_t region_points = 201;
  region->add_option("-n,--points", region_points, "grid points per boundary")
      ->check(CLI::Range(std::size_t{2}, std::size_t{10'000'000}));
  std::string region_out;
  region->add_option("--out", region_out, "output CSV path (default stdout)");

  // alloc
  auto* alloc = app.add_subcommand("alloc", "power-allocation solvers");
  alloc->require_subcommand(1);
  auto* alloc_sum = alloc->add_subcommand("sum", "maximize R1 + R2");
  ChannelOptions sum_channel;
  sum_channel.attach(*alloc_sum);
  std::string sum_out;
  alloc_sum->add_option("--out", sum_out, "also write the JSON result here");
  auto* alloc_wsr = alloc->add_subcommand("wsr", "maximize R1 + mu*R2");
  ChannelOptions wsr_channel;
  wsr_channel.attach(*alloc_wsr);
  double wsr_mu = 1.0;
  alloc_wsr->add_option("--mu", wsr_mu, "weight on the weak user's rate")
      ->required();
  std::string wsr_out;
  alloc_wsr->add_option("--out", wsr_out, "also write the JSON result here");
  auto* alloc_qos = alloc->add_subcommand(
      "qos", "feasible power fractions for per-user rate floors");
  ChannelOptions qos_channel;
  qos_channel.attach(*alloc_qos);
  double qos_r1 = 0.0, qos_r2 = 0.0;
  alloc_qos->add_option("--r1", qos_r1, "strong user's minimum rate, bps/Hz")
      ->required();
  alloc_qos->add_option("--r2", qos_r2, "weak user's minimum rate, bps/Hz")
      ->required();
  std::string qos_out;
  alloc_qos->add_option("--out", qos_out, "also write the JSON result here");

  // multicell
  auto* multicell = app.add_subcommand(
      "multicell", "seeded Monte Carlo multi-cell reuse simulation");
  std::string mc_config;
  multicell->add_option("--config", mc_config, "JSON config file")->required();
  unsigned mc_threads = 1;
  multicell->add_option("--threads", mc_threads,
                        "worker threads (does not change the results)")
      ->check(CLI::Range(1u, 1024u));
  std::string mc_out;
  multicell->add_option("--out", mc_out, "also write the report JSON here");

  // myths
  auto* myths = app.add_subcommand(
      "myths", "run the myth checks; exit 0 iff all claims are confirmed");
  std::uint64_t myths_seed = 12345;
  myths->add_option("--seed", myths_seed, "seed for the randomized checks");
  std::vector<int> myths_only;
  myths->add_option("--only", myths_only,
                    "run only these myth ids (1, 2, 3, 4, 5, 9)");
  std::string myths_out;
  myths->add_option("--out", myths_out, "also write the report JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (table1->parsed()) return run_table1(table1_csv);
    if (region->parsed()) {
      return run_region(region_channel, region_points, region_out);
    }
    if (alloc->parsed()) {
      if (alloc_sum->parsed()) return run_alloc_sum(sum_channel, sum_out);
      if (alloc_wsr->parsed()) {
        return run_alloc_wsr(wsr_channel, wsr_mu, wsr_out);
      }
      return run_alloc_qos(qos_channel, qos_r1, qos_r2, qos_out);
    }
    if (multicell->parsed()) {
      return run_multicell(mc_config, mc_threads, mc_out);
    }
    if (myths->parsed()) return run_myths(myths_seed, myths_only, myths_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
