// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "noma/rates.hpp"

/// User clustering for NOMA scheduling and cluster-level rate evaluation.
/// Clusters share the band orthogonally (one fraction each) and run
/// superposition coding internally.
namespace noma {

/// Disjoint user-index groups covering all users. Within a cluster users are
/// listed strongest first; clusters are ordered by their strongest member.
struct Pairing {
  std::vector<std::vector<std::size_t>> clusters;
};

/// How to form two-user clusters. Odd user counts leave one singleton.
///   - MaxDisparity: strongest with weakest, second strongest with second
///     weakest, ... (the canonical strong-weak pairing).
///   - Adjacent: consecutive SNR ranks together, as when cell-interior users
///     pair with each other and cell-edge users likewise.
///   - Random: uniform matching, deterministic in the seed.
class PairingStrategy {
 public:
  enum class Kind { kMaxDisparity, kAdjacent, kRandom };

  static PairingStrategy max_disparity() { return PairingStrategy(Kind::kMaxDisparity, 0); }
  static PairingStrategy adjacent() { return PairingStrategy(Kind::kAdjacent, 0); }
  static PairingStrategy random(std::uint64_t seed) { return PairingStrategy(Kind::kRandom, seed); }

  Kind kind() const noexcept { return kind_; }
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  PairingStrategy(Kind kind, std::uint64_t seed) : kind_(kind), seed_(seed) {}

  Kind kind_;
  std::uint64_t seed_;
};

/// Clusters users according to the strategy. SNR ranking uses sic_order
/// (descending gamma, ties by ascending index).
Pairing pair_users(const SnrVector& snrs, const PairingStrategy& strategy);

struct PairingEvaluation {
  RateVector rates;  // caller's user-index order
  double sum_rate;
  double jain_index;
};

/// Jain fairness index (sum r)^2 / (K * sum r^2), in (0, 1]; 1 iff all rates
/// are equal. An all-zero rate vector counts as equal and yields 1.
double jain_index(std::span<const double> rates);

/// Rates of a clustered allocation: cluster c runs noma_k_user on its members
/// and scales by band_fractions[c] (the fractions form a simplex across
/// clusters). Throws std::invalid_argument for invalid partitions, size
/// mismatches, or simplex violations.
PairingEvaluation evaluate_pairing(const SnrVector& snrs,
                                   const Pairing& pairing,
                                   std::span<const PowerSplit> cluster_splits,
                                   std::span<const double> band_fractions);

}  // namespace noma
