// SPDX-License-Identifier: Apache-2.0
#include "noma/rates.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace noma {
namespace {

void check_snr(double x, const char* name) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw std::domain_error(std::string(name) +
                            " must be finite and >= 0, got " +
                            std::to_string(x));
  }
}

void check_unit(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error(std::string(name) + " must lie in [0, 1], got " +
                            std::to_string(x));
  }
}

void check_simplex(const std::vector<double>& fractions, const char* what) {
  if (fractions.empty()) {
    throw std::invalid_argument(std::string(what) + ": empty fraction vector");
  }
  double total = 0.0;
  for (double f : fractions) {
    check_unit(f, what);
    total += f;
  }
  if (std::abs(total - 1.0) > kSimplexTol) {
    throw std::invalid_argument(std::string(what) + ": fractions sum to " +
                                std::to_string(total) + ", expected 1");
  }
}

void check_ordering(double gamma1, double gamma2, const char* fn) {
  if (gamma1 < gamma2) {
    throw std::invalid_argument(
        std::string(fn) +
        ": requires gamma1 >= gamma2 (sort the users or use noma_k_user)");
  }
}

}  // namespace

ChannelGain::ChannelGain(double magnitude) : magnitude_(magnitude) {
  check_snr(magnitude, "channel gain magnitude");
}

SnrVector::SnrVector(std::vector<double> gammas) : gammas_(std::move(gammas)) {
  if (gammas_.empty()) {
    throw std::invalid_argument("SnrVector: needs at least one user");
  }
  for (double g : gammas_) check_snr(g, "gamma");
}

SnrVector SnrVector::from_gains(const std::vector<ChannelGain>& gains,
                                double tx_power) {
  check_snr(tx_power, "tx_power");
  std::vector<double> gammas;
  gammas.reserve(gains.size());
  for (const auto& h : gains) {
    gammas.push_back(h.magnitude() * h.magnitude() * tx_power);
  }
  return SnrVector(std::move(gammas));
}

PowerSplit::PowerSplit(std::vector<double> alphas) : alphas_(std::move(alphas)) {
  check_simplex(alphas_, "PowerSplit");
}

PowerSplit PowerSplit::two_user(double alpha) {
  check_unit(alpha, "alpha");
  return PowerSplit({alpha, 1.0 - alpha});
}

TimeShare::TimeShare(std::vector<double> taus) : taus_(std::move(taus)) {
  check_simplex(taus_, "TimeShare");
}

TimeShare TimeShare::two_user(double tau) {
  check_unit(tau, "tau");
  return TimeShare({tau, 1.0 - tau});
}

TimeShare TimeShare::equal(std::size_t k) {
  if (k == 0) throw std::invalid_argument("TimeShare::equal: k must be >= 1");
  std::vector<double> taus(k, 1.0 / static_cast<double>(k));
  // Repair the rounding residue so the simplex invariant holds exactly.
  double total = std::accumulate(taus.begin(), taus.end(), 0.0);
  taus.back() += 1.0 - total;
  return TimeShare(std::move(taus));
}

double RateVector::sum() const noexcept {
  return std::accumulate(rates.begin(), rates.end(), 0.0);
}

SicQuality::SicQuality(double epsilon) : epsilon_(epsilon) {
  check_unit(epsilon, "epsilon");
}

double shannon_rate(double snr) {
  check_snr(snr, "snr");
  return kRatePrefactor * std::log2(1.0 + snr);
}

RatePair noma_two_user(double gamma1, double gamma2, double alpha) {
  check_snr(gamma1, "gamma1");
  check_snr(gamma2, "gamma2");
  check_ordering(gamma1, gamma2, "noma_two_user");
  check_unit(alpha, "alpha");
  const double r1 = shannon_rate(alpha * gamma1);
  const double r2 =
      shannon_rate((1.0 - alpha) * gamma2 / (1.0 + gamma2 * alpha));
  return {r1, r2};
}

RatePair oma_two_user(double gamma1, double gamma2, double tau) {
  check_snr(gamma1, "gamma1");
  check_snr(gamma2, "gamma2");
  check_unit(tau, "tau");
  return {tau * shannon_rate(gamma1), (1.0 - tau) * shannon_rate(gamma2)};
}

SicOrder sic_order(const SnrVector& snrs) {
  std::vector<std::size_t> order(snrs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Stable sort keeps ties in ascending-index order.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return snrs[a] > snrs[b]; });
  return SicOrder{std::move(order)};
}

RateVector noma_k_user(const SnrVector& snrs, const PowerSplit& split) {
  if (snrs.size() != split.size()) {
    throw std::invalid_argument("noma_k_user: snrs and split sizes differ");
  }
  const SicOrder hierarchy = sic_order(snrs);
  std::vector<double> rates(snrs.size());
  double stronger_fraction = 0.0;  // power already assigned above this user
  for (std::size_t user : hierarchy.order) {
    const double g = snrs[user];
    const double a = split[user];
    rates[user] = shannon_rate(a * g / (1.0 + g * stronger_fraction));
    stronger_fraction += a;
  }
  return RateVector{std::move(rates)};
}

RateVector oma_k_user(const SnrVector& snrs, const TimeShare& shares) {
  if (snrs.size() != shares.size()) {
    throw std::invalid_argument("oma_k_user: snrs and shares sizes differ");
  }
  std::vector<double> rates(snrs.size());
  for (std::size_t k = 0; k < snrs.size(); ++k) {
    rates[k] = shares[k] * shannon_rate(snrs[k]);
  }
  return RateVector{std::move(rates)};
}

RatePair noma_two_user_imperfect(double gamma1, double gamma2, double alpha,
                                 SicQuality quality) {
  check_snr(gamma1, "gamma1");
  check_snr(gamma2, "gamma2");
  check_ordering(gamma1, gamma2, "noma_two_user_imperfect");
  check_unit(alpha, "alpha");
  const double residual = quality.epsilon() * (1.0 - alpha) * gamma1;
  const double r1 = shannon_rate(alpha * gamma1 / (residual + 1.0));
  const double r2 =
      shannon_rate((1.0 - alpha) * gamma2 / (1.0 + gamma2 * alpha));
  return {r1, r2};
}

double negligibility_threshold(double gamma2) {
  check_snr(gamma2, "gamma2");
  if (gamma2 == 0.0) return 1.0;
  return std::min(kNegligibleInterferenceProduct / gamma2, 1.0);
}

}  // namespace noma
