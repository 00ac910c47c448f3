// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// fails. Every tolerance is pinned here, not configurable.
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "noma/allocation.hpp"
#include "noma/multicell.hpp"
#include "noma/pairing.hpp"
#include "noma/region.hpp"
#include "noma/rng.hpp"
#include "noma/verify.hpp"
#include "support/oracles.hpp"

namespace {

using namespace noma;

struct Criterion {
  int id;
  const char* name;
  std::function<bool(std::string&)> run;
};

bool close(double x, double expected, double tol) {
  return std::abs(x - expected) <= tol;
}

double log_uniform(SplitMix64& rng, double lo, double hi) {
  return std::exp(rng.uniform(std::log(lo), std::log(hi)));
}

// 1. Canonical two-user table: all five rows within +-0.01 bps/Hz.
bool criterion_table(std::string& detail) {
  const struct {
    double alpha, r1, r2, sum;
  } rows[] = {{0.0, 0.0, 0.79, 0.79},
              {0.025, 1.29, 0.76, 2.05},
              {0.5, 3.33, 0.29, 3.62},
              {0.8, 3.67, 0.10, 3.77},
              {1.0, 3.83, 0.0, 3.83}};
  for (const auto& row : rows) {
    const RatePair r = noma_two_user(200.0, 2.0, row.alpha);
    if (!close(r.r1, row.r1, 0.01) || !close(r.r2, row.r2, 0.01) ||
        !close(r.r1 + r.r2, row.sum, 0.01)) {
      detail = "row at alpha=" + std::to_string(row.alpha) + " off";
      return false;
    }
  }
  return true;
}

// 2. Region corners shared within +-0.01; NOMA dominates OMA at 1000 R1
//    samples with tol 1e-9.
bool criterion_region(std::string& detail) {
  const double g1 = 200.0, g2 = 2.0;
  const RegionBoundary noma = noma_boundary(g1, g2, 1001);
  const RegionBoundary oma = oma_boundary(g1, g2, 1001);
  for (const RegionBoundary* b : {&noma, &oma}) {
    if (!close(b->points().front().r2, 0.79, 0.01) ||
        !close(b->points().back().r1, 3.83, 0.01)) {
      detail = "corner mismatch";
      return false;
    }
  }
  const double c1 = shannon_rate(g1);
  const double c2 = shannon_rate(g2);
  for (int i = 0; i < 1000; ++i) {
    const double r1 = c1 * (i + 0.5) / 1000.0;
    const double noma_r2 = r2_on_noma_boundary(g1, g2, r1);
    const double oma_r2 = (1.0 - r1 / c1) * c2;
    if (noma_r2 < oma_r2 - 1e-9) {
      detail = "dominance fails at r1=" + std::to_string(r1);
      return false;
    }
  }
  return dominates(noma, oma, 1e-9).holds;
}

// 3. QoS interval endpoints: 0.015 within 1e-6 and 0.8058 within 1e-3.
bool criterion_qos(std::string& detail) {
  const FeasibleInterval interval =
      qos_interval(200.0, 2.0, QosRequirement(1.0, 0.1));
  if (interval.empty()) {
    detail = "interval unexpectedly empty";
    return false;
  }
  if (!close(interval.lo(), 0.015, 1e-6)) {
    detail = "lo=" + std::to_string(interval.lo());
    return false;
  }
  if (!close(interval.hi(), 0.8058, 1e-3)) {
    detail = "hi=" + std::to_string(interval.hi());
    return false;
  }
  return true;
}

// 4. Equal gains: max boundary gap <= 1e-9 on 100 random channels.
bool criterion_equal_gain_collapse(std::string& detail) {
  SplitMix64 rng(404);
  for (int i = 0; i < 100; ++i) {
    const double g = log_uniform(rng, 0.01, 300.0);
    const RegionBoundary noma = noma_boundary(g, g, 129);
    const RegionBoundary oma = oma_boundary(g, g, 129);
    double max_gap = 0.0;
    for (const auto& p : noma.points()) {
      max_gap = std::max(max_gap, std::abs(boundary_r2_at(oma, p.r1) - p.r2));
    }
    for (const auto& p : oma.points()) {
      max_gap = std::max(max_gap, std::abs(boundary_r2_at(noma, p.r1) - p.r2));
    }
    if (max_gap > 1e-9) {
      detail = "gap " + std::to_string(max_gap) + " at gamma " +
               std::to_string(g);
      return false;
    }
  }
  return true;
}

// 5. Sum rate strictly increasing in alpha and equal to C(gamma1) at alpha=1
//    within 1e-9, on 1000 random channels.
bool criterion_sum_rate(std::string& detail) {
  SplitMix64 rng(505);
  for (int i = 0; i < 1000; ++i) {
    const double g2 = log_uniform(rng, 0.05, 100.0);
    const double g1 = g2 * rng.uniform(1.1, 100.0);
    double previous = -1.0;
    for (int k = 0; k <= 50; ++k) {
      const RatePair r = noma_two_user(g1, g2, k / 50.0);
      const double sum = r.r1 + r.r2;
      if (!(sum > previous)) {
        detail = "not strictly increasing at instance " + std::to_string(i);
        return false;
      }
      previous = sum;
    }
    if (!close(previous, shannon_rate(g1), 1e-9)) {
      detail = "cap mismatch at instance " + std::to_string(i);
      return false;
    }
  }
  return true;
}

// 6. SIC order takes no power split (compile-level) and the decodability
//    inequality holds on 1000 random (channel, alpha) draws.
template <typename... Args>
constexpr bool sic_order_callable = requires(Args... args) {
  sic_order(args...);
};
static_assert(sic_order_callable<SnrVector>);
static_assert(!sic_order_callable<SnrVector, PowerSplit>,
              "sic_order must not accept a power split");

bool criterion_sic_order(std::string& detail) {
  SplitMix64 rng(606);
  for (int i = 0; i < 1000; ++i) {
    const double g2 = log_uniform(rng, 0.01, 100.0);
    const double g1 = g2 * rng.uniform(1.01, 100.0);
    const double alpha = rng.next_double();
    const double at_strong =
        shannon_rate((1.0 - alpha) * g1 / (1.0 + g1 * alpha));
    const double at_weak =
        shannon_rate((1.0 - alpha) * g2 / (1.0 + g2 * alpha));
    if (at_strong < at_weak) {
      detail = "decodability violated at instance " + std::to_string(i);
      return false;
    }
    if (sic_order(SnrVector({g1, g2})).order !=
        std::vector<std::size_t>{0, 1}) {
      detail = "order depends on something other than the SNR sort";
      return false;
    }
  }
  return true;
}

// 7. Weak-user rate loss <= 0.5*log2(1.1) whenever alpha*gamma2 <= 0.1,
//    on 1000 random instances.
bool criterion_negligibility(std::string& detail) {
  SplitMix64 rng(707);
  const double bound = kRatePrefactor * std::log2(1.1);
  for (int i = 0; i < 1000; ++i) {
    const double g2 = log_uniform(rng, 0.01, 100.0);
    const double alpha = rng.next_double() * std::min(1.0, 0.1 / g2);
    const double interference_free = shannon_rate((1.0 - alpha) * g2);
    const double actual =
        shannon_rate((1.0 - alpha) * g2 / (1.0 + g2 * alpha));
    if (interference_free - actual > bound) {
      detail = "loss above bound at gamma2=" + std::to_string(g2) +
               " alpha=" + std::to_string(alpha);
      return false;
    }
  }
  return true;
}

// 8. ICI statistics bit-identical across alpha policies {0, 0.1, ..., 1}.
bool criterion_ici_invariance(std::string& detail) {
  const CellLayout layout = CellLayout::hexagonal(3, 500.0, 1e10);
  const ReusePlan plan = ReusePlan::noma_ffr(3);
  SimConfig config;
  config.trials = 200;
  config.seed = 2025;
  config.path_loss_exponent = 3.5;
  config.users_per_cell = 4;
  config.edge_threshold = 0.6;

  double center = 0.0, edge = 0.0;
  for (int k = 0; k <= 10; ++k) {
    config.alpha_policy = k / 10.0;
    const SimReport report = simulate(layout, plan, config);
    if (k == 0) {
      center = report.mean_ici_center;
      edge = report.mean_ici_edge;
    } else if (report.mean_ici_center != center ||
               report.mean_ici_edge != edge) {
      detail = "ICI changed at alpha=" + std::to_string(config.alpha_policy);
      return false;
    }
  }
  return true;
}

// 9. Closed-form alpha* matches the golden-section oracle within 1e-6 on
//    1000 draws; mu <-> alpha round-trip within 1e-9.
bool criterion_duality(std::string& detail) {
  SplitMix64 rng(909);
  for (int i = 0; i < 1000; ++i) {
    const double g2 = log_uniform(rng, 0.05, 100.0);
    const double g1 = g2 * rng.uniform(1.1, 100.0);
    const double mu = log_uniform(rng, 0.2, 50.0);
    const double closed =
        max_weighted_sum_rate(g1, g2, FairnessWeight(mu)).alpha;
    const double numeric = oracles::golden_section_max(
        [&](double a) {
          const RatePair r = noma_two_user(g1, g2, a);
          return r.r1 + mu * r.r2;
        },
        0.0, 1.0, 1e-9);
    if (!close(closed, numeric, 1e-6)) {
      detail = "oracle mismatch: closed=" + std::to_string(closed) +
               " numeric=" + std::to_string(numeric);
      return false;
    }
    const double alpha = rng.uniform(0.01, 0.99);
    const double round_trip =
        max_weighted_sum_rate(g1, g2,
                              FairnessWeight(mu_for_alpha(g1, g2, alpha)))
            .alpha;
    if (!close(round_trip, alpha, 1e-9)) {
      detail = "round-trip off by " + std::to_string(round_trip - alpha);
      return false;
    }
  }
  return true;
}

// 10. noma_k_user matches the independent oracle to 1e-12 for K in 1..4 on
//     200 random instances; K=2 equals noma_two_user exactly.
bool criterion_k_user(std::string& detail) {
  SplitMix64 rng(1010);
  for (int i = 0; i < 200; ++i) {
    for (std::size_t k = 1; k <= 4; ++k) {
      std::vector<double> gammas, weights;
      double total = 0.0;
      for (std::size_t u = 0; u < k; ++u) {
        gammas.push_back(log_uniform(rng, 0.01, 300.0));
        weights.push_back(rng.uniform(0.01, 1.0));
        total += weights.back();
      }
      for (double& w : weights) w /= total;
      weights.back() +=
          1.0 - std::accumulate(weights.begin(), weights.end(), 0.0);
      const RateVector lib =
          noma_k_user(SnrVector(gammas), PowerSplit(weights));
      const std::vector<double> oracle = oracles::k_user_rates(gammas, weights);
      for (std::size_t u = 0; u < k; ++u) {
        if (!close(lib[u], oracle[u], 1e-12)) {
          detail = "oracle mismatch at K=" + std::to_string(k);
          return false;
        }
      }
    }
    const double g2 = log_uniform(rng, 0.01, 300.0);
    const double g1 = g2 * rng.uniform(1.0, 100.0);
    const double alpha = rng.next_double();
    const RatePair two = noma_two_user(g1, g2, alpha);
    const RateVector via_k =
        noma_k_user(SnrVector({g1, g2}), PowerSplit::two_user(alpha));
    if (via_k[0] != two.r1 || via_k[1] != two.r2) {
      detail = "K=2 path is not bit-identical";
      return false;
    }
  }
  return true;
}

// 11. simulate() serialization identical across repeats and thread counts.
bool criterion_determinism(std::string& detail) {
  const CellLayout layout = CellLayout::hexagonal(3, 500.0, 1e10);
  SimConfig config;
  config.trials = 100;
  config.seed = 11;
  config.path_loss_exponent = 3.5;
  config.users_per_cell = 4;
  config.edge_threshold = 0.6;
  for (const ReusePlan& plan :
       {ReusePlan::universal(), ReusePlan::ffr(3), ReusePlan::noma_ffr(3)}) {
    const std::string reference = simulate(layout, plan, config, 1).to_json();
    for (unsigned threads : {1u, 2u, 4u, 8u}) {
      if (simulate(layout, plan, config, threads).to_json() != reference) {
        detail = std::string("mismatch for ") + to_string(plan.scheme()) +
                 " at " + std::to_string(threads) + " threads";
        return false;
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "two-user rate table reproduction (+-0.01)", criterion_table},
      {2, "region corners and NOMA-over-OMA dominance", criterion_region},
      {3, "qos interval endpoints 0.015 / 0.8058", criterion_qos},
      {4, "equal-gain region collapse (gap <= 1e-9)",
       criterion_equal_gain_collapse},
      {5, "sum rate strictly increasing, capped at C(gamma1)",
       criterion_sum_rate},
      {6, "SIC order split-free and decodable for every alpha",
       criterion_sic_order},
      {7, "weak-user loss bound below alpha*gamma2 <= 0.1",
       criterion_negligibility},
      {8, "ICI statistics bit-identical across split policies",
       criterion_ici_invariance},
      {9, "weighted-sum-rate closed form vs oracle, duality round-trip",
       criterion_duality},
      {10, "k-user rates vs independent oracle, exact K=2 reduction",
       criterion_k_user},
      {11, "simulation determinism across repeats and threads",
       criterion_determinism},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (ok) {
      std::printf("PASS  [%2d] %s\n", criterion.id, criterion.name);
    } else {
      ++failures;
      std::printf("FAIL  [%2d] %s%s%s\n", criterion.id, criterion.name,
                  detail.empty() ? "" : " — ", detail.c_str());
    }
  }
  if (failures > 0) {
    std::printf("%d of %zu acceptance criteria failed\n", failures,
                criteria.size());
  }
  return failures == 0 ? 0 : 1;
}
