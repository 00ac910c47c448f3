// SPDX-License-Identifier: Apache-2.0
#include "noma/region.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace noma {
namespace {

constexpr double kEndpointTol = 1e-9;

void check_channel(double gamma1, double gamma2) {
  if (!(gamma1 >= 0.0) || !std::isfinite(gamma1) || !(gamma2 >= 0.0) ||
      !std::isfinite(gamma2)) {
    throw std::domain_error("region: gammas must be finite and >= 0");
  }
  if (gamma1 < gamma2) {
    throw std::invalid_argument("region: requires gamma1 >= gamma2");
  }
}

double grid_value(std::size_t i, std::size_t n) {
  return static_cast<double>(i) / static_cast<double>(n - 1);
}

}  // namespace

const char* to_string(Scheme scheme) {
  return scheme == Scheme::kNoma ? "NOMA" : "OMA";
}

RegionBoundary::RegionBoundary(Scheme scheme, double gamma1, double gamma2,
                               std::vector<BoundaryPoint> points)
    : scheme_(scheme), gamma1_(gamma1), gamma2_(gamma2),
      points_(std::move(points)) {
  check_channel(gamma1_, gamma2_);
  if (points_.size() < 2) {
    throw std::invalid_argument("RegionBoundary: needs at least 2 points");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (!std::isfinite(p.r1) || !std::isfinite(p.r2) || p.r1 < 0.0 ||
        p.r2 < 0.0) {
      throw std::invalid_argument("RegionBoundary: rates must be finite, >= 0");
    }
    if (i > 0 && (p.r1 < points_[i - 1].r1 || p.r2 > points_[i - 1].r2)) {
      throw std::invalid_argument(
          "RegionBoundary: points must be ordered with R1 nondecreasing and "
          "R2 nonincreasing");
    }
  }
  const double c1 = shannon_rate(gamma1_);
  const double c2 = shannon_rate(gamma2_);
  if (std::abs(points_.front().r1) > kEndpointTol ||
      std::abs(points_.front().r2 - c2) > kEndpointTol ||
      std::abs(points_.back().r1 - c1) > kEndpointTol ||
      std::abs(points_.back().r2) > kEndpointTol) {
    throw std::invalid_argument(
        "RegionBoundary: endpoints must be (0, C(gamma2)) and (C(gamma1), 0)");
  }
}

RegionBoundary noma_boundary(double gamma1, double gamma2,
                             std::size_t n_points) {
  check_channel(gamma1, gamma2);
  if (n_points < 2) {
    throw std::invalid_argument("noma_boundary: n_points must be >= 2");
  }
  std::vector<BoundaryPoint> points;
  points.reserve(n_points);
  for (std::size_t i = 0; i < n_points; ++i) {
    const double alpha = grid_value(i, n_points);
    const RatePair r = noma_two_user(gamma1, gamma2, alpha);
    points.push_back({alpha, r.r1, r.r2});
  }
  return RegionBoundary(Scheme::kNoma, gamma1, gamma2, std::move(points));
}

RegionBoundary oma_boundary(double gamma1, double gamma2,
                            std::size_t n_points) {
  check_channel(gamma1, gamma2);
  if (n_points < 2) {
    throw std::invalid_argument("oma_boundary: n_points must be >= 2");
  }
  std::vector<BoundaryPoint> points;
  points.reserve(n_points);
  for (std::size_t i = 0; i < n_points; ++i) {
    const double tau = grid_value(i, n_points);
    const RatePair r = oma_two_user(gamma1, gamma2, tau);
    points.push_back({tau, r.r1, r.r2});
  }
  return RegionBoundary(Scheme::kOma, gamma1, gamma2, std::move(points));
}

double r2_on_noma_boundary(double gamma1, double gamma2, double r1_target) {
  check_channel(gamma1, gamma2);
  if (!(r1_target >= 0.0) || !std::isfinite(r1_target)) {
    throw std::domain_error("r2_on_noma_boundary: r1_target must be >= 0");
  }
  const double cap = shannon_rate(gamma1);
  if (r1_target > cap) {
    throw std::domain_error(
        "r2_on_noma_boundary: infeasible r1_target " +
        std::to_string(r1_target) + " > C(gamma1) = " + std::to_string(cap));
  }
  double alpha = 0.0;
  if (gamma1 > 0.0) {
    alpha = (std::exp2(r1_target / kRatePrefactor) - 1.0) / gamma1;
    alpha = std::clamp(alpha, 0.0, 1.0);
  }
  return shannon_rate((1.0 - alpha) * gamma2 / (1.0 + gamma2 * alpha));
}

double boundary_r2_at(const RegionBoundary& boundary, double r1) {
  const auto& pts = boundary.points();
  if (r1 <= pts.front().r1) return pts.front().r2;
  if (r1 >= pts.back().r1) return pts.back().r2;
  // First point with r1 at or past the query; exact hits return that point's
  // r2 (the largest among duplicates, since r2 is nonincreasing).
  const auto hi = std::lower_bound(
      pts.begin(), pts.end(), r1,
      [](const BoundaryPoint& p, double v) { return p.r1 < v; });
  if (hi->r1 <= r1) return hi->r2;
  const auto lo = hi - 1;
  const double t = (r1 - lo->r1) / (hi->r1 - lo->r1);
  return lo->r2 + t * (hi->r2 - lo->r2);
}

DominanceResult dominates(const RegionBoundary& outer,
                          const RegionBoundary& inner, double tol) {
  if (outer.gamma1() != inner.gamma1() || outer.gamma2() != inner.gamma2()) {
    throw std::invalid_argument(
        "dominates: boundaries were generated for different channels");
  }
  for (const auto& p : inner.points()) {
    if (boundary_r2_at(outer, p.r1) < p.r2 - tol) {
      return {false, p};
    }
  }
  return {true, std::nullopt};
}

void write_region_csv(std::ostream& os,
                      std::span<const RegionBoundary> boundaries) {
  const auto saved = os.precision();
  os.precision(12);
  os << "scheme,param,r1,r2\n";
  for (const auto& b : boundaries) {
    for (const auto& p : b.points()) {
      os << to_string(b.scheme()) << ',' << p.param << ',' << p.r1 << ','
         << p.r2 << '\n';
    }
  }
  os.precision(saved);
}

}  // namespace noma
