// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "noma/rates.hpp"

/// Seeded Monte Carlo multi-cell downlink simulator comparing universal
/// frequency reuse, FFR, and NOMA-FFR band plans.
///
/// Modeling choices (all deterministic):
///   - Path loss only, gain(u,b) = max(d(u,b), 1 m)^(-eta); no fading.
///   - Flat power spectral density: power in a band is proportional to the
///     band's bandwidth fraction, and so is the in-band noise, hence the
///     in-band SINR is gain*P / (noise + ICI) with ICI summed at full power.
///   - A base station is considered loaded on every band its plan assigns to
///     it, whether or not users landed there in a given trial.
namespace noma {

struct Vec2 {
  double x;
  double y;
};

double distance(Vec2 a, Vec2 b);

/// Base-station positions (meters), common cell radius, and per-BS transmit
/// power. Inter-cell interference only exists from 2 cells upward.
class CellLayout {
 public:
  CellLayout(std::vector<Vec2> bs_positions, double cell_radius,
             double tx_power);

  /// 1, 3 (triangle) or 7 (center + ring) cells with the standard
  /// inter-site distance sqrt(3) * radius.
  static CellLayout hexagonal(std::size_t n_cells, double cell_radius,
                              double tx_power);

  std::size_t n_cells() const noexcept { return bs_positions_.size(); }
  const std::vector<Vec2>& bs_positions() const noexcept { return bs_positions_; }
  double cell_radius() const noexcept { return cell_radius_; }
  double tx_power() const noexcept { return tx_power_; }

 private:
  std::vector<Vec2> bs_positions_;
  double cell_radius_;
  double tx_power_;
};

/// User positions with derived serving cell (nearest BS, ties to the lower
/// index) and edge classification (distance/radius > edge_threshold).
struct UserDrop {
  std::vector<Vec2> positions;
  std::vector<std::size_t> serving_cell;
  std::vector<std::uint8_t> edge_flag;

  std::size_t n_users() const noexcept { return positions.size(); }
};

UserDrop make_user_drop(const CellLayout& layout, std::vector<Vec2> positions,
                        double edge_threshold);

enum class ReuseScheme { kUniversal, kFfr, kNomaFfr };

const char* to_string(ReuseScheme scheme);
ReuseScheme reuse_scheme_from_string(const std::string& name);

/// Band plan. Universal uses one band {w: 1}. Ffr and NomaFfr use exactly
/// four bands {f, f1, f2, f3}: f at every cell center, f1/f2/f3 at cell
/// edges such that adjacent cells use distinct edge bands.
class ReusePlan {
 public:
  static ReusePlan universal();
  static ReusePlan ffr(std::size_t n_cells);
  static ReusePlan noma_ffr(std::size_t n_cells);
  /// Custom fractions (must cover {f, f1, f2, f3}) and/or edge coloring
  /// (entries in {1,2,3} indexing f1..f3, one per cell).
  static ReusePlan ffr_custom(ReuseScheme scheme,
                              std::map<std::string, double> band_fractions,
                              std::vector<std::size_t> edge_band_of_cell);

  ReuseScheme scheme() const noexcept { return scheme_; }
  const std::vector<std::string>& band_names() const noexcept { return band_names_; }
  const std::vector<double>& band_fractions() const noexcept { return band_fractions_; }
  /// Per cell: index into band_names() of the cell's edge band. Empty for
  /// the universal plan.
  const std::vector<std::size_t>& edge_band_of_cell() const noexcept { return edge_band_of_cell_; }
  std::size_t band_index(const std::string& name) const;

 private:
  ReusePlan(ReuseScheme scheme, std::vector<std::string> names,
            std::vector<double> fractions,
            std::vector<std::size_t> edge_band_of_cell);

  ReuseScheme scheme_;
  std::vector<std::string> band_names_;
  std::vector<double> band_fractions_;
  std::vector<std::size_t> edge_band_of_cell_;
};

/// gains[user][bs] = max(distance, 1 m)^(-eta). Requires eta > 0; the
/// simulator config additionally demands eta > 2.
using GainMatrix = std::vector<std::vector<double>>;
GainMatrix channel_gains(const CellLayout& layout, const UserDrop& drop,
                         double path_loss_exponent);

/// A center-edge NOMA pair sharing one band allocation.
struct NomaPair {
  std::size_t strong_user;
  std::size_t weak_user;
  std::size_t band;
  double fraction;  // the pair's joint share of the total bandwidth
};

/// Result of applying a reuse plan to one user drop.
struct BandAssignment {
  std::vector<std::size_t> user_band;     // per user: band index
  std::vector<double> user_fraction;      // per user: own share of W
                                          // (pair members carry the pair's share)
  std::vector<int> user_pair;             // per user: index into pairs, or -1
  std::vector<NomaPair> pairs;
  std::vector<std::size_t> serving_cell;  // copied from the drop
  /// transmits[cell][band]: the plan assigns this band to this cell.
  std::vector<std::vector<std::uint8_t>> transmits;
  /// Cells that could not form any NOMA pair under NomaFfr (no center or no
  /// edge users); their users fall back to plain sharing of their region's
  /// band.
  std::size_t degenerate_cells = 0;
};

/// Assigns each user a band and a bandwidth share.
///   Universal: all users of a cell share band w (fraction 1) equally.
///   Ffr: center users share f; edge users share their cell's edge band.
///   NomaFfr: each cell pairs center (strong) with edge (weak) users on the
///   cell's edge band, closest-center with farthest-edge first; leftover
///   users share their region's band as in Ffr.
BandAssignment apply_reuse_plan(const ReusePlan& plan, const CellLayout& layout,
                                const UserDrop& drop);

/// Inter-cell interference power received by `user`: the sum over non-serving
/// base stations transmitting on the user's band of gain(user, bs) * P.
///
/// The per-interferer power splits are accepted so callers can hand over a
/// full scheduling state, but they are structurally ignored: every cluster of
/// an interfering cell is received as one superposed signal of total power P,
/// so the split cannot influence ICI. The parameter is unnamed in the
/// definition, which makes that impossible to get wrong silently.
double ici_power(std::size_t user, const GainMatrix& gains,
                 const CellLayout& layout, const BandAssignment& assignment,
                 std::span<const PowerSplit> interferer_splits);

struct SimConfig {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double path_loss_exponent = 0.0;  // > 2
  double noise_power = 1.0;         // normalized
  std::size_t users_per_cell = 0;
  double edge_threshold = 0.6;      // in (0,1), fraction of the cell radius
  double alpha_policy = 0.5;        // strong-user power fraction in NOMA pairs

  void validate() const;
};

/// Aggregated statistics of one simulate() run. All rates bps/Hz, ICI in the
/// same normalized power units as the SNRs.
struct SimReport {
  std::string scheme;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t users_per_trial = 0;
  double mean_rate = 0.0;
  double median_rate = 0.0;
  double p05_rate = 0.0;
  double mean_rate_center = 0.0;
  double mean_rate_edge = 0.0;
  double mean_ici_center = 0.0;
  double mean_ici_edge = 0.0;
  std::uint64_t degenerate_cell_count = 0;

  /// Stable field names, full double precision.
  std::string to_json() const;
};

/// Runs config.trials independent trials. Trial t draws its users from the
/// substream (seed, t), so results are identical for any thread count and
/// any execution order; aggregation is index-ordered and pairwise-summed.
SimReport simulate(const CellLayout& layout, const ReusePlan& plan,
                   const SimConfig& config, unsigned threads = 1);

/// Simulation input bundle as read from a JSON config file.
struct SimSetup {
  CellLayout layout;
  ReusePlan plan;
  SimConfig config;
};

/// Parses a JSON config. Required keys: `trials`, `seed`,
/// `path_loss_exponent`, `edge_threshold`, `users_per_cell`, `scheme`.
/// Optional: `band_fractions`, `alpha_policy`, `cells`, `cell_radius`,
/// `tx_power`, `noise_power`. Missing required keys throw with the key name.
SimSetup load_sim_setup(std::istream& in);
SimSetup load_sim_setup_from_string(const std::string& text);

}  // namespace noma
