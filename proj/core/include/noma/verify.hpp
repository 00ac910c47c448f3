// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

/// Executable checks for widely repeated claims ("myths") about power-domain
/// NOMA. Each check is a deterministic, seeded property test over the library
/// and reports machine-readable evidence; a counterexample verdict on any
/// check is a regression.
namespace noma {

enum class Verdict { kConfirmed, kCounterexampleFound };

const char* to_string(Verdict verdict);

/// One labeled group of named numbers backing a verdict.
struct MythEvidence {
  std::string label;
  std::vector<std::pair<std::string, double>> values;
};

struct MythReport {
  int myth = 0;
  Verdict verdict = Verdict::kCounterexampleFound;
  std::uint64_t seed = 0;
  std::vector<MythEvidence> evidence;

  /// JSON object {myth, verdict, seed, evidence: [...]}.
  std::string to_json() const;
};

/// Myth 1 — "NOMA always gives the weak user more power." Exhibits Pareto
/// points with alpha > 1/2, shows the sum rate is maximal at alpha = 1, and
/// shows QoS targets satisfiable with less power on the weak user.
MythReport check_myth1(std::uint64_t seed);

/// Myth 2 — "The SIC order changes with the power split." sic_order takes no
/// split, and the strong user can decode the weak user's message for every
/// alpha (its SINR for that message dominates the weak user's own).
MythReport check_myth2(std::uint64_t seed);

/// Myth 3 — "Inter-user interference at the weak user is always small."
/// The loss is provably below kNegligibleLossBound only when
/// alpha*gamma2 <= 0.1; far above that threshold the loss is large.
MythReport check_myth3(std::uint64_t seed);

/// Myth 4 — "NOMA's point is higher sum rate." The sum rate is maximized by
/// serving only the strong user (an OMA point); interior splits trade sum
/// rate for serving both users.
MythReport check_myth4(std::uint64_t seed);

/// Myth 5 — "Biased power allocation makes ICI worse." Every receiver gets
/// one superposed signal of total power P, so measured ICI is identical for
/// every power-split policy: an exact-equality sweep over the simulator.
MythReport check_myth5(std::uint64_t seed);

/// Myth 9 — "NOMA users must have different channel gains." With equal gains
/// the NOMA and OMA regions coincide; the gap grows monotonically with the
/// gain ratio.
MythReport check_myth9(std::uint64_t seed);

/// All six checks (ids 1, 2, 3, 4, 5, 9) in order.
std::vector<MythReport> run_all_myths(std::uint64_t seed);

/// Single myth by id; throws std::invalid_argument for ids without a check.
MythReport check_myth(int id, std::uint64_t seed);

bool all_confirmed(std::span<const MythReport> reports);

/// JSON array of per-myth report objects.
std::string myths_to_json(std::span<const MythReport> reports);

}  // namespace noma
