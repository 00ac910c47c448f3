// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "noma/rates.hpp"

/// Two-user power-allocation solvers: sum rate, weighted sum rate, and QoS
/// feasibility. The weighted-sum-rate optimum and the mu <-> alpha duality
/// use closed forms (cross-checked against a numerical maximizer in tests).
namespace noma {

/// Per-user minimum rates r_k >= 0, bps/Hz. Two-user only: for K > 2 the
/// feasible power set is no longer an interval.
class QosRequirement {
 public:
  QosRequirement(double r1, double r2);
  double r1() const noexcept { return r1_; }
  double r2() const noexcept { return r2_; }

 private:
  double r1_;
  double r2_;
};

/// Closed interval [lo, hi] of feasible strong-user power fractions, or an
/// explicit empty marker.
class FeasibleInterval {
 public:
  FeasibleInterval(double lo, double hi);
  static FeasibleInterval empty_interval() { return FeasibleInterval(); }

  bool empty() const noexcept { return empty_; }
  double lo() const;
  double hi() const;
  bool contains(double alpha) const noexcept;

 private:
  FeasibleInterval() = default;

  bool empty_ = true;
  double lo_ = 0.0;
  double hi_ = 0.0;
};

/// Weight mu > 0 on the weak user's rate in R1 + mu*R2. mu > 1 favors the
/// weak user; mu = 1 is the plain sum rate.
class FairnessWeight {
 public:
  explicit FairnessWeight(double mu);
  double mu() const noexcept { return mu_; }

 private:
  double mu_;
};

struct SumRateSolution {
  double alpha;
  RatePair rates;
  /// gamma1 == gamma2: every alpha attains the same sum rate; alpha = 1 is
  /// returned as a representative.
  bool equal_gains;
};

/// Sum-rate-optimal split: all power to the strong user (alpha = 1),
/// rates (C(gamma1), 0).
SumRateSolution max_sum_rate(double gamma1, double gamma2);

struct WsrSolution {
  double alpha;
  RatePair rates;
  /// gamma1 == gamma2: the objective is constant (mu = 1) or maximized at a
  /// boundary alpha (mu != 1).
  bool degenerate;
};

/// Maximizer of R1 + mu*R2 over alpha in [0,1] for gamma1 >= gamma2 > 0.
/// For mu <= 1 the objective is increasing in alpha, so alpha* = 1; for
/// mu > 1, alpha* = clip((mu*gamma2 - gamma1) / (gamma1*gamma2*(1 - mu))).
WsrSolution max_weighted_sum_rate(double gamma1, double gamma2,
                                  FairnessWeight weight);

/// The weight mu for which the given interior alpha is the weighted-sum-rate
/// optimum: mu = [gamma1/(1+alpha*gamma1)] / [gamma2/(1+alpha*gamma2)].
/// Round-trips with max_weighted_sum_rate. Boundary alpha has no unique
/// finite mu and throws std::domain_error.
double mu_for_alpha(double gamma1, double gamma2, double alpha);

/// All alpha meeting R1 >= r1 and R2 >= r2:
///   lo = (2^(r1/kRatePrefactor) - 1)/gamma1,
///   hi = ((1+gamma2)/2^(r2/kRatePrefactor) - 1)/gamma2,
/// intersected with [0,1]; the returned endpoints are re-verified against
/// noma_two_user and an empty interval is returned when no alpha qualifies.
FeasibleInterval qos_interval(double gamma1, double gamma2,
                              const QosRequirement& req);

}  // namespace noma
