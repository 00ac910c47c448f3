// SPDX-License-Identifier: Apache-2.0
#include "noma/multicell.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <iterator>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include <json.hpp>

#include "noma/rng.hpp"

namespace noma {
namespace {

using ordered_json = nlohmann::ordered_json;

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 16) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

double mean_or_zero(std::span<const double> v) {
  if (v.empty()) return 0.0;
  return pairwise_sum(v) / static_cast<double>(v.size());
}

/// Linear-interpolation quantile on a sorted sample (the common "type 7").
double quantile_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) return 0.0;
  if (sorted.size() == 1) return sorted[0];
  const double h = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(h);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

struct TrialResult {
  std::vector<double> rates;
  std::vector<double> ici;
  std::vector<std::uint8_t> edge;
  std::size_t degenerate = 0;
};

}  // namespace

double distance(Vec2 a, Vec2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

CellLayout::CellLayout(std::vector<Vec2> bs_positions, double cell_radius,
                       double tx_power)
    : bs_positions_(std::move(bs_positions)), cell_radius_(cell_radius),
      tx_power_(tx_power) {
  if (bs_positions_.empty()) {
    throw std::invalid_argument("CellLayout: needs at least one cell");
  }
  if (!(cell_radius_ > 0.0) || !std::isfinite(cell_radius_)) {
    throw std::domain_error("CellLayout: cell_radius must be > 0");
  }
  if (!(tx_power_ > 0.0) || !std::isfinite(tx_power_)) {
    throw std::domain_error("CellLayout: tx_power must be > 0");
  }
}

CellLayout CellLayout::hexagonal(std::size_t n_cells, double cell_radius,
                                 double tx_power) {
  const double d = std::numbers::sqrt3 * cell_radius;  // inter-site distance
  std::vector<Vec2> bs;
  switch (n_cells) {
    case 1:
      bs = {{0.0, 0.0}};
      break;
    case 3:
      bs = {{0.0, 0.0}, {d, 0.0}, {d / 2.0, d * std::numbers::sqrt3 / 2.0}};
      break;
    case 7: {
      bs.push_back({0.0, 0.0});
      for (int k = 0; k < 6; ++k) {
        const double phi = k * std::numbers::pi / 3.0;
        bs.push_back({d * std::cos(phi), d * std::sin(phi)});
      }
      break;
    }
    default:
      throw std::invalid_argument(
          "CellLayout::hexagonal: supported cell counts are 1, 3 and 7");
  }
  return CellLayout(std::move(bs), cell_radius, tx_power);
}

UserDrop make_user_drop(const CellLayout& layout, std::vector<Vec2> positions,
                        double edge_threshold) {
  if (!(edge_threshold > 0.0 && edge_threshold < 1.0)) {
    throw std::domain_error("make_user_drop: edge_threshold must be in (0,1)");
  }
  UserDrop drop;
  drop.positions = std::move(positions);
  drop.serving_cell.resize(drop.positions.size());
  drop.edge_flag.resize(drop.positions.size());
  for (std::size_t u = 0; u < drop.positions.size(); ++u) {
    std::size_t best = 0;
    double best_d = distance(drop.positions[u], layout.bs_positions()[0]);
    for (std::size_t b = 1; b < layout.n_cells(); ++b) {
      const double d = distance(drop.positions[u], layout.bs_positions()[b]);
      if (d < best_d) {  // ties keep the lower index
        best_d = d;
        best = b;
      }
    }
    drop.serving_cell[u] = best;
    drop.edge_flag[u] = best_d / layout.cell_radius() > edge_threshold ? 1 : 0;
  }
  return drop;
}

const char* to_string(ReuseScheme scheme) {
  switch (scheme) {
    case ReuseScheme::kUniversal: return "universal";
    case ReuseScheme::kFfr: return "ffr";
    case ReuseScheme::kNomaFfr: return "noma_ffr";
  }
  return "?";
}

ReuseScheme reuse_scheme_from_string(const std::string& name) {
  if (name == "universal") return ReuseScheme::kUniversal;
  if (name == "ffr") return ReuseScheme::kFfr;
  if (name == "noma_ffr") return ReuseScheme::kNomaFfr;
  throw std::invalid_argument(
      "unknown scheme '" + name + "' (expected universal, ffr or noma_ffr)");
}

ReusePlan::ReusePlan(ReuseScheme scheme, std::vector<std::string> names,
                     std::vector<double> fractions,
                     std::vector<std::size_t> edge_band_of_cell)
    : scheme_(scheme), band_names_(std::move(names)),
      band_fractions_(std::move(fractions)),
      edge_band_of_cell_(std::move(edge_band_of_cell)) {
  double total = 0.0;
  for (double f : band_fractions_) {
    if (!(f >= 0.0 && f <= 1.0)) {
      throw std::domain_error("ReusePlan: band fractions must lie in [0,1]");
    }
    total += f;
  }
  if (std::abs(total - 1.0) > kSimplexTol) {
    throw std::domain_error("ReusePlan: band fractions must sum to 1");
  }
  if (scheme_ != ReuseScheme::kUniversal) {
    for (std::size_t b : edge_band_of_cell_) {
      if (b < 1 || b > 3) {
        throw std::invalid_argument(
            "ReusePlan: edge bands index f1..f3 (1..3)");
      }
    }
  }
}

std::size_t ReusePlan::band_index(const std::string& name) const {
  const auto it = std::find(band_names_.begin(), band_names_.end(), name);
  if (it == band_names_.end()) {
    throw std::invalid_argument("ReusePlan: no band named '" + name + "'");
  }
  return static_cast<std::size_t>(it - band_names_.begin());
}

ReusePlan ReusePlan::universal() {
  return ReusePlan(ReuseScheme::kUniversal, {"w"}, {1.0}, {});
}

namespace {

std::vector<std::size_t> default_edge_coloring(std::size_t n_cells) {
  // Proper colorings for the hexagonal factory layouts: any two adjacent
  // cells end up on distinct edge bands.
  switch (n_cells) {
    case 1: return {1};
    case 3: return {1, 2, 3};
    case 7: return {1, 2, 3, 2, 3, 2, 3};
    default:
      throw std::invalid_argument(
          "ReusePlan: no default edge coloring for this cell count; use "
          "ffr_custom");
  }
}

std::map<std::string, double> equal_quarters() {
  return {{"f", 0.25}, {"f1", 0.25}, {"f2", 0.25}, {"f3", 0.25}};
}

}  // namespace

ReusePlan ReusePlan::ffr(std::size_t n_cells) {
  return ffr_custom(ReuseScheme::kFfr, equal_quarters(),
                    default_edge_coloring(n_cells));
}

ReusePlan ReusePlan::noma_ffr(std::size_t n_cells) {
  return ffr_custom(ReuseScheme::kNomaFfr, equal_quarters(),
                    default_edge_coloring(n_cells));
}

ReusePlan ReusePlan::ffr_custom(ReuseScheme scheme,
                                std::map<std::string, double> band_fractions,
                                std::vector<std::size_t> edge_band_of_cell) {
  if (scheme == ReuseScheme::kUniversal) {
    throw std::invalid_argument("ReusePlan::ffr_custom: use universal()");
  }
  const std::vector<std::string> names = {"f", "f1", "f2", "f3"};
  if (band_fractions.size() != names.size()) {
    throw std::invalid_argument(
        "ReusePlan: ffr band fractions must name exactly f, f1, f2, f3");
  }
  std::vector<double> values;
  for (const auto& name : names) {
    const auto it = band_fractions.find(name);
    if (it == band_fractions.end()) {
      throw std::invalid_argument("ReusePlan: missing band fraction '" + name +
                                  "'");
    }
    values.push_back(it->second);
  }
  return ReusePlan(scheme, names, std::move(values),
                   std::move(edge_band_of_cell));
}

GainMatrix channel_gains(const CellLayout& layout, const UserDrop& drop,
                         double path_loss_exponent) {
  // Free-space eta = 2 is permitted here; the simulator's config demands the
  // stricter eta > 2 of cluttered environments.
  if (!(path_loss_exponent > 0.0) || !std::isfinite(path_loss_exponent)) {
    throw std::domain_error("channel_gains: path_loss_exponent must be > 0");
  }
  GainMatrix gains(drop.n_users(),
                   std::vector<double>(layout.n_cells(), 0.0));
  for (std::size_t u = 0; u < drop.n_users(); ++u) {
    for (std::size_t b = 0; b < layout.n_cells(); ++b) {
      const double d =
          std::max(distance(drop.positions[u], layout.bs_positions()[b]), 1.0);
      gains[u][b] = std::pow(d, -path_loss_exponent);
    }
  }
  return gains;
}

BandAssignment apply_reuse_plan(const ReusePlan& plan, const CellLayout& layout,
                                const UserDrop& drop) {
  if (plan.scheme() != ReuseScheme::kUniversal &&
      plan.edge_band_of_cell().size() != layout.n_cells()) {
    throw std::invalid_argument(
        "apply_reuse_plan: plan edge coloring does not match the cell count");
  }
  const std::size_t n = drop.n_users();
  const std::size_t n_bands = plan.band_names().size();
  BandAssignment out;
  out.user_band.assign(n, 0);
  out.user_fraction.assign(n, 0.0);
  out.user_pair.assign(n, -1);
  out.serving_cell = drop.serving_cell;
  out.transmits.assign(layout.n_cells(),
                       std::vector<std::uint8_t>(n_bands, 0));

  // The plan, not per-trial occupancy, decides which bands a BS is loaded on.
  for (std::size_t c = 0; c < layout.n_cells(); ++c) {
    if (plan.scheme() == ReuseScheme::kUniversal) {
      out.transmits[c][0] = 1;
    } else {
      out.transmits[c][plan.band_index("f")] = 1;
      out.transmits[c][plan.edge_band_of_cell()[c]] = 1;
    }
  }

  // Users grouped by serving cell and region.
  std::vector<std::vector<std::size_t>> center(layout.n_cells());
  std::vector<std::vector<std::size_t>> edge(layout.n_cells());
  for (std::size_t u = 0; u < n; ++u) {
    (drop.edge_flag[u] ? edge : center)[drop.serving_cell[u]].push_back(u);
  }

  const auto share_band = [&](const std::vector<std::size_t>& users,
                              std::size_t band) {
    if (users.empty()) return;
    const double each = plan.band_fractions()[band] /
                        static_cast<double>(users.size());
    for (std::size_t u : users) {
      out.user_band[u] = band;
      out.user_fraction[u] = each;
    }
  };

  for (std::size_t c = 0; c < layout.n_cells(); ++c) {
    switch (plan.scheme()) {
      case ReuseScheme::kUniversal: {
        std::vector<std::size_t> all = center[c];
        all.insert(all.end(), edge[c].begin(), edge[c].end());
        std::sort(all.begin(), all.end());
        share_band(all, 0);
        break;
      }
      case ReuseScheme::kFfr: {
        share_band(center[c], plan.band_index("f"));
        share_band(edge[c], plan.edge_band_of_cell()[c]);
        break;
      }
      case ReuseScheme::kNomaFfr: {
        auto by_serving_distance = [&](std::size_t a, std::size_t b,
                                       bool ascending) {
          const double da =
              distance(drop.positions[a], layout.bs_positions()[c]);
          const double db =
              distance(drop.positions[b], layout.bs_positions()[c]);
          if (da != db) return ascending ? da < db : da > db;
          return a < b;
        };
        std::vector<std::size_t> interior = center[c];
        std::vector<std::size_t> fringe = edge[c];
        std::sort(interior.begin(), interior.end(),
                  [&](auto a, auto b) { return by_serving_distance(a, b, true); });
        std::sort(fringe.begin(), fringe.end(),
                  [&](auto a, auto b) { return by_serving_distance(a, b, false); });
        const std::size_t n_pairs = std::min(interior.size(), fringe.size());
        if (n_pairs == 0) {
          ++out.degenerate_cells;
          share_band(interior, plan.band_index("f"));
          share_band(fringe, plan.edge_band_of_cell()[c]);
          break;
        }
        const std::size_t edge_band = plan.edge_band_of_cell()[c];
        const std::size_t edge_units = n_pairs + (fringe.size() - n_pairs);
        const double unit_fraction = plan.band_fractions()[edge_band] /
                                     static_cast<double>(edge_units);
        for (std::size_t i = 0; i < n_pairs; ++i) {
          const std::size_t strong = interior[i];
          const std::size_t weak = fringe[i];
          const int pair_id = static_cast<int>(out.pairs.size());
          out.pairs.push_back({strong, weak, edge_band, unit_fraction});
          for (std::size_t u : {strong, weak}) {
            out.user_band[u] = edge_band;
            out.user_fraction[u] = unit_fraction;
            out.user_pair[u] = pair_id;
          }
        }
        for (std::size_t i = n_pairs; i < fringe.size(); ++i) {
          out.user_band[fringe[i]] = edge_band;
          out.user_fraction[fringe[i]] = unit_fraction;
        }
        share_band({interior.begin() + static_cast<std::ptrdiff_t>(n_pairs),
                    interior.end()},
                   plan.band_index("f"));
        break;
      }
    }
  }
  return out;
}

double ici_power(std::size_t user, const GainMatrix& gains,
                 const CellLayout& layout, const BandAssignment& assignment,
                 std::span<const PowerSplit> /*structurally ignored*/) {
  const std::size_t band = assignment.user_band.at(user);
  const std::size_t serving = assignment.serving_cell.at(user);
  double total = 0.0;
  for (std::size_t b = 0; b < layout.n_cells(); ++b) {
    if (b == serving || !assignment.transmits[b][band]) continue;
    total += gains[user][b] * layout.tx_power();
  }
  return total;
}

void SimConfig::validate() const {
  if (trials < 1) throw std::domain_error("SimConfig: trials must be >= 1");
  if (!(path_loss_exponent > 2.0)) {
    throw std::domain_error("SimConfig: path_loss_exponent must be > 2");
  }
  if (!(noise_power > 0.0) || !std::isfinite(noise_power)) {
    throw std::domain_error("SimConfig: noise_power must be > 0");
  }
  if (users_per_cell < 1) {
    throw std::domain_error("SimConfig: users_per_cell must be >= 1");
  }
  if (!(edge_threshold > 0.0 && edge_threshold < 1.0)) {
    throw std::domain_error("SimConfig: edge_threshold must be in (0,1)");
  }
  if (!(alpha_policy >= 0.0 && alpha_policy <= 1.0)) {
    throw std::domain_error("SimConfig: alpha_policy must lie in [0,1]");
  }
}

namespace {

void check_plan_against_layout(const ReusePlan& plan,
                               const CellLayout& layout) {
  if (plan.scheme() == ReuseScheme::kUniversal) return;
  if (plan.edge_band_of_cell().size() != layout.n_cells()) {
    throw std::invalid_argument(
        "simulate: plan edge coloring does not match the cell count");
  }
  if (layout.n_cells() < 2) return;
  double d_min = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < layout.n_cells(); ++a) {
    for (std::size_t b = a + 1; b < layout.n_cells(); ++b) {
      d_min = std::min(
          d_min, distance(layout.bs_positions()[a], layout.bs_positions()[b]));
    }
  }
  for (std::size_t a = 0; a < layout.n_cells(); ++a) {
    for (std::size_t b = a + 1; b < layout.n_cells(); ++b) {
      const bool adjacent =
          distance(layout.bs_positions()[a], layout.bs_positions()[b]) <=
          1.05 * d_min;
      if (adjacent &&
          plan.edge_band_of_cell()[a] == plan.edge_band_of_cell()[b]) {
        throw std::invalid_argument(
            "simulate: adjacent cells share an edge band");
      }
    }
  }
}

TrialResult run_trial(const CellLayout& layout, const ReusePlan& plan,
                      const SimConfig& cfg, std::uint64_t trial) {
  SplitMix64 rng = SplitMix64::substream(cfg.seed, trial);
  std::vector<Vec2> positions;
  positions.reserve(layout.n_cells() * cfg.users_per_cell);
  for (std::size_t c = 0; c < layout.n_cells(); ++c) {
    const Vec2 bs = layout.bs_positions()[c];
    for (std::size_t k = 0; k < cfg.users_per_cell; ++k) {
      const double r = layout.cell_radius() * std::sqrt(rng.next_double());
      const double phi = 2.0 * std::numbers::pi * rng.next_double();
      positions.push_back({bs.x + r * std::cos(phi), bs.y + r * std::sin(phi)});
    }
  }
  UserDrop drop =
      make_user_drop(layout, std::move(positions), cfg.edge_threshold);
  const GainMatrix gains =
      channel_gains(layout, drop, cfg.path_loss_exponent);
  const BandAssignment assignment = apply_reuse_plan(plan, layout, drop);

  const std::size_t n = drop.n_users();
  const double p = layout.tx_power();
  TrialResult out;
  out.rates.assign(n, 0.0);
  out.ici.resize(n);
  out.edge = drop.edge_flag;
  out.degenerate = assignment.degenerate_cells;
  for (std::size_t u = 0; u < n; ++u) {
    out.ici[u] = ici_power(u, gains, layout, assignment, {});
  }
  for (const NomaPair& pair : assignment.pairs) {
    std::size_t strong = pair.strong_user;
    std::size_t weak = pair.weak_user;
    const auto effective_snr = [&](std::size_t u) {
      return gains[u][assignment.serving_cell[u]] * p /
             (cfg.noise_power + out.ici[u]);
    };
    double snr_strong = effective_snr(strong);
    double snr_weak = effective_snr(weak);
    // ICI can invert the in-band ordering relative to the serving gains.
    if (snr_weak > snr_strong) {
      std::swap(strong, weak);
      std::swap(snr_strong, snr_weak);
    }
    const RatePair r = noma_two_user(snr_strong, snr_weak, cfg.alpha_policy);
    out.rates[strong] = pair.fraction * r.r1;
    out.rates[weak] = pair.fraction * r.r2;
  }
  for (std::size_t u = 0; u < n; ++u) {
    if (assignment.user_pair[u] >= 0) continue;
    const double sinr = gains[u][assignment.serving_cell[u]] * p /
                        (cfg.noise_power + out.ici[u]);
    out.rates[u] = assignment.user_fraction[u] * shannon_rate(sinr);
  }
  return out;
}

}  // namespace

SimReport simulate(const CellLayout& layout, const ReusePlan& plan,
                   const SimConfig& config, unsigned threads) {
  config.validate();
  check_plan_against_layout(plan, layout);

  const std::uint64_t n_trials = config.trials;
  std::vector<TrialResult> results(n_trials);
  const auto run_range = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t t = lo; t < hi; ++t) {
      results[t] = run_trial(layout, plan, config, t);
    }
  };
  const unsigned n_workers = std::max(
      1u, std::min<unsigned>(threads, static_cast<unsigned>(n_trials)));
  if (n_workers == 1) {
    run_range(0, n_trials);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(n_workers);
    const std::uint64_t chunk = (n_trials + n_workers - 1) / n_workers;
    for (unsigned w = 0; w < n_workers; ++w) {
      const std::uint64_t lo = w * chunk;
      const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, n_trials);
      if (lo >= hi) break;
      workers.emplace_back(run_range, lo, hi);
    }
    for (auto& t : workers) t.join();
  }

  // Aggregation is index-ordered, so it cannot depend on the thread count.
  std::vector<double> all_rates, center_rates, edge_rates, center_ici, edge_ici;
  std::uint64_t degenerate = 0;
  for (const TrialResult& trial : results) {
    degenerate += trial.degenerate;
    for (std::size_t u = 0; u < trial.rates.size(); ++u) {
      all_rates.push_back(trial.rates[u]);
      if (trial.edge[u]) {
        edge_rates.push_back(trial.rates[u]);
        edge_ici.push_back(trial.ici[u]);
      } else {
        center_rates.push_back(trial.rates[u]);
        center_ici.push_back(trial.ici[u]);
      }
    }
  }

  SimReport report;
  report.scheme = to_string(plan.scheme());
  report.trials = n_trials;
  report.seed = config.seed;
  report.users_per_trial = layout.n_cells() * config.users_per_cell;
  report.mean_rate = mean_or_zero(all_rates);
  std::vector<double> sorted = all_rates;
  std::sort(sorted.begin(), sorted.end());
  report.median_rate = quantile_sorted(sorted, 0.5);
  report.p05_rate = quantile_sorted(sorted, 0.05);
  report.mean_rate_center = mean_or_zero(center_rates);
  report.mean_rate_edge = mean_or_zero(edge_rates);
  report.mean_ici_center = mean_or_zero(center_ici);
  report.mean_ici_edge = mean_or_zero(edge_ici);
  report.degenerate_cell_count = degenerate;
  return report;
}

std::string SimReport::to_json() const {
  ordered_json j;
  j["scheme"] = scheme;
  j["trials"] = trials;
  j["seed"] = seed;
  j["users_per_trial"] = users_per_trial;
  j["mean_rate"] = mean_rate;
  j["median_rate"] = median_rate;
  j["p05_rate"] = p05_rate;
  j["mean_rate_center"] = mean_rate_center;
  j["mean_rate_edge"] = mean_rate_edge;
  j["mean_ici_center"] = mean_ici_center;
  j["mean_ici_edge"] = mean_ici_edge;
  j["degenerate_cell_count"] = degenerate_cell_count;
  return j.dump(2);
}

namespace {

const ordered_json& require_key(const ordered_json& j, const char* key) {
  if (!j.contains(key)) {
    throw std::runtime_error(std::string("missing config key: ") + key);
  }
  return j.at(key);
}

template <typename T>
T get_as(const ordered_json& j, const char* key) {
  try {
    return require_key(j, key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw std::runtime_error(std::string("bad value for config key: ") + key);
  }
}

template <typename T>
T get_or(const ordered_json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  return get_as<T>(j, key);
}

}  // namespace

SimSetup load_sim_setup_from_string(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("config is not valid JSON: ") +
                             e.what());
  }

  SimConfig config;
  config.trials = get_as<std::uint64_t>(j, "trials");
  config.seed = get_as<std::uint64_t>(j, "seed");
  config.path_loss_exponent = get_as<double>(j, "path_loss_exponent");
  config.edge_threshold = get_as<double>(j, "edge_threshold");
  config.users_per_cell = get_as<std::size_t>(j, "users_per_cell");
  config.alpha_policy = get_or<double>(j, "alpha_policy", 0.5);
  config.noise_power = get_or<double>(j, "noise_power", 1.0);

  const ReuseScheme scheme =
      reuse_scheme_from_string(get_as<std::string>(j, "scheme"));
  const auto n_cells = get_or<std::size_t>(j, "cells", 3);
  const double radius = get_or<double>(j, "cell_radius", 500.0);
  // Power is in noise-normalized units (the path-loss model carries no link
  // budget constants). The default lands the cell-edge SNR near 5 dB for the
  // default radius and exponent, so reuse schemes operate in the
  // interference-limited regime they were designed for.
  const double power = get_or<double>(j, "tx_power", 1e10);
  CellLayout layout = CellLayout::hexagonal(n_cells, radius, power);

  ReusePlan plan = ReusePlan::universal();
  if (scheme == ReuseScheme::kUniversal) {
    if (j.contains("band_fractions")) {
      const auto fractions =
          get_as<std::map<std::string, double>>(j, "band_fractions");
      if (fractions.size() != 1 || !fractions.contains("w") ||
          fractions.at("w") != 1.0) {
        throw std::runtime_error(
            "bad value for config key: band_fractions (universal uses {\"w\": "
            "1})");
      }
    }
  } else {
    auto fractions = j.contains("band_fractions")
                         ? get_as<std::map<std::string, double>>(
                               j, "band_fractions")
                         : std::map<std::string, double>{{"f", 0.25},
                                                         {"f1", 0.25},
                                                         {"f2", 0.25},
                                                         {"f3", 0.25}};
    std::vector<std::size_t> coloring;
    switch (n_cells) {
      case 1: coloring = {1}; break;
      case 3: coloring = {1, 2, 3}; break;
      case 7: coloring = {1, 2, 3, 2, 3, 2, 3}; break;
      default:
        throw std::runtime_error("bad value for config key: cells");
    }
    try {
      plan = ReusePlan::ffr_custom(scheme, std::move(fractions),
                                   std::move(coloring));
    } catch (const std::exception& e) {
      throw std::runtime_error(
          std::string("bad value for config key: band_fractions (") +
          e.what() + ")");
    }
  }

  config.validate();
  return SimSetup{std::move(layout), std::move(plan), config};
}

SimSetup load_sim_setup(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return load_sim_setup_from_string(text);
}

}  // namespace noma
