// SPDX-License-Identifier: Apache-2.0
#include "noma/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "noma/allocation.hpp"
#include "noma/multicell.hpp"
#include "noma/region.hpp"
#include "noma/rng.hpp"

namespace noma {
namespace {

using ordered_json = nlohmann::ordered_json;

/// Collects pass/fail across many conditions; any failure flips the verdict.
struct Checker {
  bool ok = true;
  void require(bool condition) { ok = ok && condition; }
};

double log_uniform(SplitMix64& rng, double lo, double hi) {
  return std::exp(rng.uniform(std::log(lo), std::log(hi)));
}

MythEvidence evidence(std::string label,
                      std::vector<std::pair<std::string, double>> values) {
  return {std::move(label), std::move(values)};
}

// Dependent context, so an ill-formed call makes this false instead of a
// compile error.
template <typename... Args>
constexpr bool sic_order_callable = requires(Args... args) {
  sic_order(args...);
};

ordered_json report_json(const MythReport& report) {
  ordered_json j;
  j["myth"] = report.myth;
  j["verdict"] = to_string(report.verdict);
  j["seed"] = report.seed;
  ordered_json items = ordered_json::array();
  for (const auto& e : report.evidence) {
    ordered_json item;
    item["label"] = e.label;
    ordered_json values;
    for (const auto& [name, value] : e.values) values[name] = value;
    item["values"] = values;
    items.push_back(item);
  }
  j["evidence"] = items;
  return j;
}

}  // namespace

const char* to_string(Verdict verdict) {
  return verdict == Verdict::kConfirmed ? "confirmed" : "counterexample-found";
}

std::string MythReport::to_json() const { return report_json(*this).dump(2); }

MythReport check_myth1(std::uint64_t seed) {
  Checker check;
  MythReport report;
  report.myth = 1;
  report.seed = seed;

  // A Pareto point that gives the strong user MORE power than the weak one.
  const double g1 = 200.0, g2 = 2.0;
  const RatePair d = noma_two_user(g1, g2, 0.8);
  check.require(std::abs(d.r1 - 3.67) <= 0.01 && std::abs(d.r2 - 0.10) <= 0.01);
  report.evidence.push_back(evidence(
      "boundary point with alpha > 1/2",
      {{"gamma1", g1}, {"gamma2", g2}, {"alpha", 0.8}, {"r1", d.r1}, {"r2", d.r2}}));

  // Sum rate is maximized by giving the strong user everything.
  const SumRateSolution best = max_sum_rate(g1, g2);
  check.require(best.alpha == 1.0);
  check.require(std::abs(best.rates.r1 + best.rates.r2 - 3.83) <= 0.01);
  report.evidence.push_back(evidence(
      "sum rate maximal at alpha = 1",
      {{"alpha", best.alpha}, {"sum_rate", best.rates.r1 + best.rates.r2}}));

  // QoS targets met while the weak user receives the SMALLER share.
  const FeasibleInterval qos = qos_interval(g1, g2, QosRequirement(1.0, 0.1));
  check.require(!qos.empty() && qos.hi() > 0.5);
  const double biased =
      qos.empty() ? 0.5 : 0.5 * (0.5 + qos.hi());  // inside (0.5, hi]
  const RatePair at_biased = noma_two_user(g1, g2, biased);
  check.require(at_biased.r1 >= 1.0 - 1e-9 && at_biased.r2 >= 0.1 - 1e-9);
  report.evidence.push_back(evidence(
      "qos met with alpha > 1/2",
      {{"r1_min", 1.0}, {"r2_min", 0.1}, {"interval_lo", qos.empty() ? -1.0 : qos.lo()},
       {"interval_hi", qos.empty() ? -1.0 : qos.hi()}, {"alpha", biased},
       {"r1", at_biased.r1}, {"r2", at_biased.r2}}));

  // Random channels: the sum rate grows with alpha and peaks at alpha = 1.
  SplitMix64 rng = SplitMix64::substream(seed, 11);
  int instances = 0;
  for (int i = 0; i < 200; ++i) {
    const double b = log_uniform(rng, 0.05, 50.0);
    const double a = b * log_uniform(rng, 1.05, 100.0);
    double previous = -1.0;
    bool increasing = true;
    for (int k = 0; k <= 40; ++k) {
      const RatePair r = noma_two_user(a, b, k / 40.0);
      const double sum = r.r1 + r.r2;
      increasing = increasing && sum > previous;
      previous = sum;
    }
    check.require(increasing);
    check.require(std::abs(previous - shannon_rate(a)) <= 1e-9);
    ++instances;
  }
  report.evidence.push_back(
      evidence("sum rate increasing in alpha, random channels",
               {{"instances", static_cast<double>(instances)}}));

  // Equal gains: every alpha is Pareto-optimal with the same sum.
  double worst_spread = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double g = log_uniform(rng, 0.05, 200.0);
    for (int k = 0; k <= 20; ++k) {
      const RatePair r = noma_two_user(g, g, k / 20.0);
      worst_spread =
          std::max(worst_spread, std::abs(r.r1 + r.r2 - shannon_rate(g)));
    }
  }
  check.require(worst_spread <= 1e-12);
  report.evidence.push_back(evidence(
      "equal gains: sum independent of alpha", {{"max_deviation", worst_spread}}));

  report.verdict =
      check.ok ? Verdict::kConfirmed : Verdict::kCounterexampleFound;
  return report;
}

MythReport check_myth2(std::uint64_t seed) {
  Checker check;
  MythReport report;
  report.myth = 2;
  report.seed = seed;

  // sic_order takes no power split at all; its output can only depend on the
  // SNRs. Confirmed at compile time: there is no overload accepting a split.
  static_assert(sic_order_callable<SnrVector>);
  static_assert(!sic_order_callable<SnrVector, PowerSplit>);
  const SicOrder canonical = sic_order(SnrVector({200.0, 2.0}));
  check.require(canonical.order == std::vector<std::size_t>{0, 1});
  report.evidence.push_back(evidence(
      "order is a function of the SNRs alone",
      {{"gamma1", 200.0}, {"gamma2", 2.0},
       {"first_to_cancel", static_cast<double>(canonical.order[0])}}));

  // Decodability for every split: the strong user's SINR for the weak user's
  // message is at least the weak user's own.
  SplitMix64 rng = SplitMix64::substream(seed, 22);
  double min_margin = std::numeric_limits<double>::infinity();
  int draws = 0;
  for (int i = 0; i < 500; ++i) {
    const double b = log_uniform(rng, 0.05, 50.0);
    const double a = b * log_uniform(rng, 1.01, 100.0);
    for (double alpha : {0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99, 1.0}) {
      const double at_strong =
          shannon_rate((1.0 - alpha) * a / (1.0 + a * alpha));
      const double at_weak =
          shannon_rate((1.0 - alpha) * b / (1.0 + b * alpha));
      check.require(at_strong >= at_weak);
      min_margin = std::min(min_margin, at_strong - at_weak);
      ++draws;
    }
  }
  report.evidence.push_back(
      evidence("weak user's message decodable at the strong user, all alpha",
               {{"draws", static_cast<double>(draws)},
                {"min_margin", min_margin}}));

  // K-user: the hierarchy matches the SNR sort, never the split.
  bool sorted_ok = true;
  for (int i = 0; i < 100; ++i) {
    const std::size_t k = 2 + rng.next_below(4);
    std::vector<double> gammas;
    for (std::size_t u = 0; u < k; ++u) gammas.push_back(log_uniform(rng, 0.01, 300.0));
    const SicOrder order = sic_order(SnrVector(gammas));
    for (std::size_t pos = 1; pos < k; ++pos) {
      sorted_ok = sorted_ok &&
                  gammas[order.order[pos - 1]] >= gammas[order.order[pos]];
    }
  }
  check.require(sorted_ok);
  report.evidence.push_back(evidence(
      "k-user order equals the SNR sort", {{"instances", 100.0}}));

  report.verdict =
      check.ok ? Verdict::kConfirmed : Verdict::kCounterexampleFound;
  return report;
}

MythReport check_myth3(std::uint64_t seed) {
  Checker check;
  MythReport report;
  report.myth = 3;
  report.seed = seed;

  const auto weak_loss = [](double g2, double alpha) {
    const double with_interference =
        shannon_rate((1.0 - alpha) * g2 / (1.0 + g2 * alpha));
    return shannon_rate((1.0 - alpha) * g2) - with_interference;
  };

  // Below the threshold alpha*gamma2 <= 0.1 the loss obeys the bound.
  SplitMix64 rng = SplitMix64::substream(seed, 33);
  double max_loss = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double g2 = log_uniform(rng, 0.01, 100.0);
    const double alpha =
        rng.next_double() * std::min(1.0, kNegligibleInterferenceProduct / g2);
    max_loss = std::max(max_loss, weak_loss(g2, alpha));
  }
  check.require(max_loss <= kNegligibleLossBound);
  report.evidence.push_back(evidence(
      "loss bound below the threshold",
      {{"draws", 1000.0}, {"max_loss", max_loss},
       {"bound", kNegligibleLossBound}}));

  // At gamma2 = 10 the threshold demands alpha <= 0.01 ...
  const double threshold_10 = negligibility_threshold(10.0);
  const double small = weak_loss(10.0, 0.01);
  check.require(threshold_10 == 0.01 && small <= kNegligibleLossBound);
  report.evidence.push_back(evidence(
      "gamma2 = 10 dB: negligible only when alpha <= 0.01",
      {{"alpha_max", threshold_10}, {"loss_at_0.01", small}}));

  // ... and a moderate split is anything but negligible.
  const double large = weak_loss(10.0, 0.5);
  check.require(large > 0.5);
  report.evidence.push_back(evidence(
      "gamma2 = 10 dB, alpha = 0.5: interference dominates",
      {{"loss", large}}));

  // Tiny gamma2: interference-free approximation holds for every alpha.
  double tiny_max = 0.0;
  for (int k = 0; k <= 100; ++k) {
    tiny_max = std::max(tiny_max, weak_loss(0.05, k / 100.0));
  }
  check.require(tiny_max < 0.02);
  report.evidence.push_back(evidence(
      "gamma2 = 0.05: negligible regardless of alpha",
      {{"max_loss_over_alpha", tiny_max}}));

  report.verdict =
      check.ok ? Verdict::kConfirmed : Verdict::kCounterexampleFound;
  return report;
}

MythReport check_myth4(std::uint64_t seed) {
  Checker check;
  MythReport report;
  report.myth = 4;
  report.seed = seed;

  // Reference sum rates along the boundary of the canonical example.
  const double g1 = 200.0, g2 = 2.0;
  const double alphas[] = {0.0, 0.025, 0.5, 0.8, 1.0};
  const double expected_sums[] = {0.79, 2.05, 3.62, 3.77, 3.83};
  for (int i = 0; i < 5; ++i) {
    const RatePair r = noma_two_user(g1, g2, alphas[i]);
    check.require(std::abs(r.r1 + r.r2 - expected_sums[i]) <= 0.01);
  }
  report.evidence.push_back(evidence(
      "sum rate along the boundary",
      {{"sum_at_0", noma_two_user(g1, g2, 0.0).r2},
       {"sum_at_1", noma_two_user(g1, g2, 1.0).r1}}));

  // The maximum is the single-user (OMA) corner; NOMA interior points trade
  // sum rate for serving both users.
  const double cap = shannon_rate(g1);
  bool interior_below = true;
  bool both_served = true;
  for (int k = 1; k <= 39; ++k) {
    const RatePair r = noma_two_user(g1, g2, k / 40.0);
    interior_below = interior_below && (r.r1 + r.r2 < cap);
    both_served = both_served && r.r1 > 0.0 && r.r2 > 0.0;
  }
  const RatePair corner = noma_two_user(g1, g2, 1.0);
  check.require(interior_below && both_served);
  check.require(corner.r2 == 0.0 && std::abs(corner.r1 - cap) == 0.0);
  report.evidence.push_back(evidence(
      "max sum rate is the single-user corner",
      {{"cap", cap}, {"corner_r2", corner.r2}}));

  // The trade-off vanishes when gains are equal.
  SplitMix64 rng = SplitMix64::substream(seed, 44);
  double spread = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double g = log_uniform(rng, 0.1, 100.0);
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (int k = 0; k <= 20; ++k) {
      const RatePair r = noma_two_user(g, g, k / 20.0);
      lo = std::min(lo, r.r1 + r.r2);
      hi = std::max(hi, r.r1 + r.r2);
    }
    spread = std::max(spread, hi - lo);
  }
  check.require(spread <= 1e-12);
  report.evidence.push_back(evidence(
      "equal gains: no sum-rate trade-off", {{"max_spread", spread}}));

  report.verdict =
      check.ok ? Verdict::kConfirmed : Verdict::kCounterexampleFound;
  return report;
}

MythReport check_myth5(std::uint64_t seed) {
  Checker check;
  MythReport report;
  report.myth = 5;
  report.seed = seed;

  // Full simulator sweep: identical ICI statistics (bitwise) for every
  // power-split policy.
  const CellLayout layout = CellLayout::hexagonal(3, 500.0, 1e10);
  const ReusePlan plan = ReusePlan::noma_ffr(3);
  SimConfig config;
  config.trials = 40;
  config.seed = seed;
  config.path_loss_exponent = 3.5;
  config.users_per_cell = 4;
  config.edge_threshold = 0.6;

  double ici_center = 0.0, ici_edge = 0.0;
  bool identical = true;
  int n_policies = 0;
  for (int k = 0; k <= 10; ++k) {
    config.alpha_policy = k / 10.0;
    const SimReport r = simulate(layout, plan, config);
    if (n_policies == 0) {
      ici_center = r.mean_ici_center;
      ici_edge = r.mean_ici_edge;
    } else {
      identical = identical && r.mean_ici_center == ici_center &&
                  r.mean_ici_edge == ici_edge;
    }
    ++n_policies;
  }
  check.require(identical);
  report.evidence.push_back(evidence(
      "simulator ICI identical across split policies",
      {{"policies", static_cast<double>(n_policies)},
       {"mean_ici_center", ici_center}, {"mean_ici_edge", ici_edge}}));

  // Hand-sized two-cell check: received interference is gain * P no matter
  // how the interferer splits its power.
  const CellLayout two_cells({{0.0, 0.0}, {10.0, 0.0}}, 10.0, 40.0);
  const UserDrop drop = make_user_drop(two_cells, {{0.0, 0.0}}, 0.6);
  const GainMatrix gains = channel_gains(two_cells, drop, 2.0);
  const BandAssignment assignment =
      apply_reuse_plan(ReusePlan::universal(), two_cells, drop);
  bool constant = true;
  double reference = -1.0;
  for (int k = 0; k <= 10; ++k) {
    const PowerSplit split = PowerSplit::two_user(k / 10.0);
    const std::vector<PowerSplit> splits(2, split);
    const double ici = ici_power(0, gains, two_cells, assignment, splits);
    if (k == 0) reference = ici;
    constant = constant && ici == reference;
  }
  check.require(constant && std::abs(reference - 0.4) <= 1e-12);
  report.evidence.push_back(evidence(
      "two-cell ICI equals cross-gain * P for every split",
      {{"cross_gain", gains[0][1]}, {"tx_power", two_cells.tx_power()},
       {"ici", reference}}));

  report.verdict =
      check.ok ? Verdict::kConfirmed : Verdict::kCounterexampleFound;
  return report;
}

MythReport check_myth9(std::uint64_t seed) {
  Checker check;
  MythReport report;
  report.myth = 9;
  report.seed = seed;

  // Equal gains: the two regions coincide (mutual dominance).
  SplitMix64 rng = SplitMix64::substream(seed, 99);
  double max_gap_equal = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double g = log_uniform(rng, 0.1, 200.0);
    const RegionBoundary n = noma_boundary(g, g, 257);
    const RegionBoundary o = oma_boundary(g, g, 257);
    check.require(dominates(n, o, 1e-9).holds && dominates(o, n, 1e-9).holds);
    for (const auto& p : n.points()) {
      max_gap_equal =
          std::max(max_gap_equal, std::abs(boundary_r2_at(o, p.r1) - p.r2));
    }
  }
  check.require(max_gap_equal <= 1e-9);
  report.evidence.push_back(evidence(
      "equal gains: regions coincide", {{"max_gap", max_gap_equal}}));

  // The region gap grows with the gain ratio and vanishes as it tends to 1.
  const double g2 = 2.0;
  const auto midpoint_gap = [&](double ratio) {
    const double g1 = g2 * ratio;
    const double r1 = shannon_rate(g1) / 2.0;
    const double noma_r2 = r2_on_noma_boundary(g1, g2, r1);
    const double oma_r2 = (1.0 - r1 / shannon_rate(g1)) * shannon_rate(g2);
    return noma_r2 - oma_r2;
  };
  const double ratios[] = {1.0, 1.5, 2.0, 5.0, 10.0, 50.0, 100.0};
  double previous = -1.0;
  bool monotone = true;
  for (double ratio : ratios) {
    const double gap = midpoint_gap(ratio);
    monotone = monotone && gap >= previous;
    previous = gap;
  }
  check.require(monotone);
  check.require(midpoint_gap(1.0) <= 1e-9);
  // Frozen reference at ratio 100: NOMA 0.703188001478 vs OMA 0.396240625180.
  const double g100 = midpoint_gap(100.0);
  check.require(std::abs(g100 - (0.703188001478 - 0.396240625180)) <= 1e-9);
  report.evidence.push_back(evidence(
      "gap at half the strong user's capacity",
      {{"ratio_1", midpoint_gap(1.0)}, {"ratio_10", midpoint_gap(10.0)},
       {"ratio_100", g100}}));

  report.verdict =
      check.ok ? Verdict::kConfirmed : Verdict::kCounterexampleFound;
  return report;
}

std::vector<MythReport> run_all_myths(std::uint64_t seed) {
  return {check_myth1(seed), check_myth2(seed), check_myth3(seed),
          check_myth4(seed), check_myth5(seed), check_myth9(seed)};
}

MythReport check_myth(int id, std::uint64_t seed) {
  switch (id) {
    case 1: return check_myth1(seed);
    case 2: return check_myth2(seed);
    case 3: return check_myth3(seed);
    case 4: return check_myth4(seed);
    case 5: return check_myth5(seed);
    case 9: return check_myth9(seed);
    default:
      throw std::invalid_argument("no check for myth id " +
                                  std::to_string(id) +
                                  " (available: 1, 2, 3, 4, 5, 9)");
  }
}

bool all_confirmed(std::span<const MythReport> reports) {
  return std::all_of(reports.begin(), reports.end(), [](const MythReport& r) {
    return r.verdict == Verdict::kConfirmed;
  });
}

std::string myths_to_json(std::span<const MythReport> reports) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(2);
}

}  // namespace noma
