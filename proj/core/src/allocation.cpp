// SPDX-License-Identifier: Apache-2.0
#include "noma/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace noma {
namespace {

constexpr double kQosSlack = 1e-9;

void check_snr(double x, const char* name) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw std::domain_error(std::string(name) +
                            " must be finite and >= 0, got " +
                            std::to_string(x));
  }
}

void check_ordering(double gamma1, double gamma2, const char* fn) {
  if (gamma1 < gamma2) {
    throw std::invalid_argument(std::string(fn) +
                                ": requires gamma1 >= gamma2");
  }
}

}  // namespace

QosRequirement::QosRequirement(double r1, double r2) : r1_(r1), r2_(r2) {
  if (!(r1 >= 0.0) || !std::isfinite(r1) || !(r2 >= 0.0) ||
      !std::isfinite(r2)) {
    throw std::domain_error("QosRequirement: rates must be finite and >= 0");
  }
}

FeasibleInterval::FeasibleInterval(double lo, double hi)
    : empty_(false), lo_(lo), hi_(hi) {
  if (!(0.0 <= lo && lo <= hi && hi <= 1.0)) {
    throw std::invalid_argument("FeasibleInterval: requires 0 <= lo <= hi <= 1");
  }
}

double FeasibleInterval::lo() const {
  if (empty_) throw std::logic_error("FeasibleInterval: empty interval");
  return lo_;
}

double FeasibleInterval::hi() const {
  if (empty_) throw std::logic_error("FeasibleInterval: empty interval");
  return hi_;
}

bool FeasibleInterval::contains(double alpha) const noexcept {
  return !empty_ && lo_ <= alpha && alpha <= hi_;
}

FairnessWeight::FairnessWeight(double mu) : mu_(mu) {
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw std::domain_error("FairnessWeight: mu must be finite and > 0");
  }
}

SumRateSolution max_sum_rate(double gamma1, double gamma2) {
  check_snr(gamma1, "gamma1");
  check_snr(gamma2, "gamma2");
  check_ordering(gamma1, gamma2, "max_sum_rate");
  return {1.0, {shannon_rate(gamma1), 0.0}, gamma1 == gamma2};
}

WsrSolution max_weighted_sum_rate(double gamma1, double gamma2,
                                  FairnessWeight weight) {
  check_snr(gamma1, "gamma1");
  check_snr(gamma2, "gamma2");
  check_ordering(gamma1, gamma2, "max_weighted_sum_rate");
  if (gamma2 <= 0.0) {
    throw std::domain_error("max_weighted_sum_rate: requires gamma2 > 0");
  }
  const double mu = weight.mu();
  double alpha;
  bool degenerate = false;
  if (gamma1 == gamma2) {
    degenerate = true;
    // mu = 1: constant objective, alpha = 1 as representative. Otherwise the
    // objective is monotone and a boundary split wins.
    alpha = mu > 1.0 ? 0.0 : 1.0;
  } else if (mu <= 1.0) {
    // d/dalpha [R1 + mu R2] ~ gamma1/(1+a*gamma1) - mu*gamma2/(1+a*gamma2)
    // stays positive on [0,1] when gamma1 > gamma2 and mu <= 1.
    alpha = 1.0;
  } else {
    alpha = (mu * gamma2 - gamma1) / (gamma1 * gamma2 * (1.0 - mu));
    alpha = std::clamp(alpha, 0.0, 1.0);
    if (alpha == 0.0) alpha = 0.0;  // a zero numerator yields -0.0
  }
  return {alpha, noma_two_user(gamma1, gamma2, alpha), degenerate};
}

double mu_for_alpha(double gamma1, double gamma2, double alpha) {
  check_snr(gamma1, "gamma1");
  check_snr(gamma2, "gamma2");
  check_ordering(gamma1, gamma2, "mu_for_alpha");
  if (gamma2 <= 0.0) {
    throw std::domain_error("mu_for_alpha: requires gamma2 > 0");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error(
        "mu_for_alpha: boundary alpha has no unique finite mu");
  }
  return (gamma1 / (1.0 + alpha * gamma1)) /
         (gamma2 / (1.0 + alpha * gamma2));
}

FeasibleInterval qos_interval(double gamma1, double gamma2,
                              const QosRequirement& req) {
  check_snr(gamma1, "gamma1");
  check_snr(gamma2, "gamma2");
  check_ordering(gamma1, gamma2, "qos_interval");

  // R1 = C(alpha*gamma1) >= r1  <=>  alpha >= (2^(r1/prefactor) - 1)/gamma1.
  double lo;
  if (gamma1 > 0.0) {
    lo = (std::exp2(req.r1() / kRatePrefactor) - 1.0) / gamma1;
  } else {
    lo = req.r1() > 0.0 ? 2.0 : 0.0;  // 2.0: sentinel above the unit interval
  }
  // R2 >= r2  <=>  alpha <= ((1+gamma2)/2^(r2/prefactor) - 1)/gamma2.
  double hi;
  if (gamma2 > 0.0) {
    hi = ((1.0 + gamma2) / std::exp2(req.r2() / kRatePrefactor) - 1.0) / gamma2;
  } else {
    hi = req.r2() > 0.0 ? -1.0 : 1.0;
  }
  lo = std::max(lo, 0.0);
  hi = std::min(hi, 1.0);
  if (!(lo <= hi)) return FeasibleInterval::empty_interval();

  // Clipping can land endpoints inside [0,1] without making them feasible
  // (e.g. r1 > C(gamma1) clips lo to 1); re-verify against the rate formulas.
  const auto feasible = [&](double alpha) {
    const RatePair r = noma_two_user(gamma1, gamma2, alpha);
    return r.r1 >= req.r1() - kQosSlack && r.r2 >= req.r2() - kQosSlack;
  };
  if (!feasible(lo) || !feasible(hi)) return FeasibleInterval::empty_interval();
  return FeasibleInterval(lo, hi);
}

}  // namespace noma
