// SPDX-License-Identifier: Apache-2.0
#include "noma/pairing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "noma/rng.hpp"

namespace noma {
namespace {

std::vector<std::size_t> cluster_of(std::size_t a, std::size_t b,
                                    const SnrVector& snrs) {
  // Strongest first; ties by ascending index.
  if (snrs[b] > snrs[a] || (snrs[b] == snrs[a] && b < a)) std::swap(a, b);
  return {a, b};
}

void check_partition(const Pairing& pairing, std::size_t n_users) {
  std::vector<bool> seen(n_users, false);
  std::size_t covered = 0;
  for (const auto& cluster : pairing.clusters) {
    if (cluster.empty()) {
      throw std::invalid_argument("Pairing: empty cluster");
    }
    for (std::size_t u : cluster) {
      if (u >= n_users) {
        throw std::invalid_argument("Pairing: user index " +
                                    std::to_string(u) + " out of range");
      }
      if (seen[u]) {
        throw std::invalid_argument("Pairing: user " + std::to_string(u) +
                                    " appears in more than one cluster");
      }
      seen[u] = true;
      ++covered;
    }
  }
  if (covered != n_users) {
    throw std::invalid_argument("Pairing: clusters do not cover all users");
  }
}

}  // namespace

Pairing pair_users(const SnrVector& snrs, const PairingStrategy& strategy) {
  const std::vector<std::size_t> ranks = sic_order(snrs).order;
  const std::size_t k = ranks.size();
  Pairing pairing;
  pairing.clusters.reserve((k + 1) / 2);

  switch (strategy.kind()) {
    case PairingStrategy::Kind::kMaxDisparity: {
      std::size_t i = 0, j = k - 1;
      for (; i < j; ++i, --j) {
        pairing.clusters.push_back(cluster_of(ranks[i], ranks[j], snrs));
      }
      if (i == j) pairing.clusters.push_back({ranks[i]});
      break;
    }
    case PairingStrategy::Kind::kAdjacent: {
      std::size_t i = 0;
      for (; i + 1 < k; i += 2) {
        pairing.clusters.push_back(cluster_of(ranks[i], ranks[i + 1], snrs));
      }
      if (i < k) pairing.clusters.push_back({ranks[i]});
      break;
    }
    case PairingStrategy::Kind::kRandom: {
      std::vector<std::size_t> users(k);
      for (std::size_t u = 0; u < k; ++u) users[u] = u;
      SplitMix64 rng = SplitMix64::substream(strategy.seed(), 0);
      for (std::size_t i = k; i > 1; --i) {  // Fisher-Yates
        std::swap(users[i - 1], users[rng.next_below(i)]);
      }
      std::size_t i = 0;
      for (; i + 1 < k; i += 2) {
        pairing.clusters.push_back(cluster_of(users[i], users[i + 1], snrs));
      }
      if (i < k) pairing.clusters.push_back({users[i]});
      break;
    }
  }
  return pairing;
}

double jain_index(std::span<const double> rates) {
  if (rates.empty()) {
    throw std::invalid_argument("jain_index: empty rate vector");
  }
  double total = 0.0, total_sq = 0.0;
  for (double r : rates) {
    total += r;
    total_sq += r * r;
  }
  if (total_sq == 0.0) return 1.0;
  return total * total / (static_cast<double>(rates.size()) * total_sq);
}

PairingEvaluation evaluate_pairing(const SnrVector& snrs,
                                   const Pairing& pairing,
                                   std::span<const PowerSplit> cluster_splits,
                                   std::span<const double> band_fractions) {
  check_partition(pairing, snrs.size());
  const std::size_t n_clusters = pairing.clusters.size();
  if (cluster_splits.size() != n_clusters ||
      band_fractions.size() != n_clusters) {
    throw std::invalid_argument(
        "evaluate_pairing: one split and one band fraction per cluster");
  }
  double fraction_total = 0.0;
  for (double f : band_fractions) {
    if (!(f >= 0.0 && f <= 1.0)) {
      throw std::invalid_argument(
          "evaluate_pairing: band fractions must lie in [0, 1]");
    }
    fraction_total += f;
  }
  if (std::abs(fraction_total - 1.0) > kSimplexTol) {
    throw std::invalid_argument(
        "evaluate_pairing: band fractions must sum to 1, got " +
        std::to_string(fraction_total));
  }

  std::vector<double> rates(snrs.size(), 0.0);
  for (std::size_t c = 0; c < n_clusters; ++c) {
    const auto& members = pairing.clusters[c];
    std::vector<double> member_gammas;
    member_gammas.reserve(members.size());
    for (std::size_t u : members) member_gammas.push_back(snrs[u]);
    const RateVector cluster_rates =
        noma_k_user(SnrVector(std::move(member_gammas)), cluster_splits[c]);
    for (std::size_t m = 0; m < members.size(); ++m) {
      rates[members[m]] = band_fractions[c] * cluster_rates[m];
    }
  }

  RateVector out{std::move(rates)};
  const double total = out.sum();
  const double fairness = jain_index(out.rates);
  return {std::move(out), total, fairness};
}

}  // namespace noma
