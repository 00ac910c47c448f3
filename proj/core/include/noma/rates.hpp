// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

/// Closed-form achievable-rate computation for downlink power-domain NOMA
/// (superposition coding + successive interference cancellation) and its OMA
/// (time/frequency sharing) counterpart.
///
/// Conventions, used consistently by every module of this library:
///   - SNRs ("gamma") are linear and noise-normalized: gamma = |h|^2 * P for
///     channel gain |h| and transmit power P, with noise power equal to 1.
///     dB conversion belongs to the application boundary, never to the core.
///   - Rates are in bps/Hz via C(x) = kRatePrefactor * log2(1 + x).
namespace noma {

/// Prefactor of the rate function C(x) = kRatePrefactor * log2(1 + x).
/// Fixed library-wide: mixing prefactor conventions across call sites
/// silently corrupts rate comparisons, so it is a constant, not a parameter.
inline constexpr double kRatePrefactor = 0.5;

/// Simplex tolerance for PowerSplit / TimeShare fraction vectors.
inline constexpr double kSimplexTol = 1e-12;

/// Interference is deemed negligible for the weak user when
/// alpha * gamma2 <= kNegligibleInterferenceProduct.
inline constexpr double kNegligibleInterferenceProduct = 0.1;

/// Guaranteed weak-user rate-loss bound (bps/Hz) versus the interference-free
/// rate whenever alpha * gamma2 <= kNegligibleInterferenceProduct:
/// kRatePrefactor * log2(1 + kNegligibleInterferenceProduct) ~= 0.0688.
inline const double kNegligibleLossBound =
    kRatePrefactor * std::log2(1.0 + kNegligibleInterferenceProduct);

/// Linear-scale channel gain magnitude |h|. Nonnegative and finite.
class ChannelGain {
 public:
  explicit ChannelGain(double magnitude);
  double magnitude() const noexcept { return magnitude_; }

 private:
  double magnitude_;
};

/// Per-user received SNRs gamma_k = |h_k|^2 * P (noise normalized to 1).
/// Indices into the vector are stable user identifiers.
class SnrVector {
 public:
  explicit SnrVector(std::vector<double> gammas);
  static SnrVector from_gains(const std::vector<ChannelGain>& gains,
                              double tx_power);

  std::size_t size() const noexcept { return gammas_.size(); }
  double operator[](std::size_t k) const { return gammas_.at(k); }
  const std::vector<double>& gammas() const noexcept { return gammas_; }

 private:
  std::vector<double> gammas_;
};

/// Power fractions alpha_k of one superposed cluster; entries in [0,1] and
/// summing to 1 within kSimplexTol.
class PowerSplit {
 public:
  explicit PowerSplit(std::vector<double> alphas);
  /// Two-user split (alpha, 1 - alpha): alpha to the strong user.
  static PowerSplit two_user(double alpha);

  std::size_t size() const noexcept { return alphas_.size(); }
  double operator[](std::size_t k) const { return alphas_.at(k); }
  const std::vector<double>& alphas() const noexcept { return alphas_; }

 private:
  std::vector<double> alphas_;
};

/// Orthogonal time (or bandwidth) fractions tau_k; entries in [0,1] and
/// summing to 1 within kSimplexTol.
class TimeShare {
 public:
  explicit TimeShare(std::vector<double> taus);
  static TimeShare two_user(double tau);
  static TimeShare equal(std::size_t k);

  std::size_t size() const noexcept { return taus_.size(); }
  double operator[](std::size_t k) const { return taus_.at(k); }
  const std::vector<double>& taus() const noexcept { return taus_; }

 private:
  std::vector<double> taus_;
};

/// Per-user achievable rates, bps/Hz, in the caller's user-index order.
struct RateVector {
  std::vector<double> rates;

  double sum() const noexcept;
  std::size_t size() const noexcept { return rates.size(); }
  double operator[](std::size_t k) const { return rates.at(k); }
};

/// SIC cancellation hierarchy: user indices sorted by descending SNR, ties by
/// ascending index. Each user decodes and cancels the signals of every user
/// ranked after it before decoding its own, and treats users ranked before it
/// as noise. Deliberately a function of the SNRs alone: the power split plays
/// no role in the decoding order.
struct SicOrder {
  std::vector<std::size_t> order;
};

/// Fraction epsilon in [0,1] of a cancelled signal's power that survives SIC
/// as residual interference. epsilon = 0 is perfect cancellation.
class SicQuality {
 public:
  explicit SicQuality(double epsilon);
  double epsilon() const noexcept { return epsilon_; }

 private:
  double epsilon_;
};

struct RatePair {
  double r1;
  double r2;
};

/// C(x) = kRatePrefactor * log2(1 + x). Monotone increasing and concave.
/// Throws std::domain_error for negative or non-finite input.
double shannon_rate(double snr);

/// Two-user NOMA rates for gamma1 >= gamma2 and power fraction alpha to the
/// strong user: R1 = C(alpha*gamma1), R2 = C((1-alpha)*gamma2 /
/// (alpha*gamma2 + 1)). Throws std::invalid_argument if gamma1 < gamma2 (sort
/// first, or use noma_k_user) and std::domain_error for invalid alpha.
RatePair noma_two_user(double gamma1, double gamma2, double alpha);

/// Two-user OMA (TDMA/FDMA) rates: R1 = tau*C(gamma1), R2 = (1-tau)*C(gamma2).
RatePair oma_two_user(double gamma1, double gamma2, double tau);

/// K-user superposition-coding rates with SIC decoding. Users are ranked by
/// sic_order internally; user u's rate is
///   C(alpha_u * gamma_u / (1 + gamma_u * sum of stronger users' fractions))
/// and results are reported in the caller's original index order.
/// split.alphas()[u] is user u's fraction in that same order.
/// K = 2 agrees with noma_two_user bit for bit.
RateVector noma_k_user(const SnrVector& snrs, const PowerSplit& split);

/// K-user orthogonal sharing: R_k = tau_k * C(gamma_k).
RateVector oma_k_user(const SnrVector& snrs, const TimeShare& shares);

/// SIC cancellation hierarchy for the given SNRs. Takes no power split by
/// design; the order depends only on the SNRs (descending, ties by index).
SicOrder sic_order(const SnrVector& snrs);

/// Two-user NOMA with imperfect SIC at the strong user: a fraction epsilon of
/// the weak user's (nominally cancelled) power remains as interference,
///   R1 = C(alpha*gamma1 / (epsilon*(1-alpha)*gamma1 + 1)),
/// and R2 is unchanged from the perfect-SIC case (the weak user never
/// cancels). epsilon = 0 reproduces noma_two_user exactly.
RatePair noma_two_user_imperfect(double gamma1, double gamma2, double alpha,
                                 SicQuality quality);

/// Largest strong-user fraction alpha for which inter-user interference at
/// the weak user is negligible: alpha * gamma2 <= 0.1, i.e. returns
/// min(0.1 / gamma2, 1). Below this threshold the weak user loses at most
/// kNegligibleLossBound bps/Hz versus an interference-free link.
/// gamma2 = 0 returns 1 (interference vanishes regardless).
double negligibility_threshold(double gamma2);

}  // namespace noma
