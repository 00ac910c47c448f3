// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "noma/rates.hpp"

/// Achievable rate-region boundaries for the two-user downlink, NOMA vs OMA.
namespace noma {

enum class Scheme { kNoma, kOma };

const char* to_string(Scheme scheme);

/// One sampled Pareto point and the sweep parameter that produced it
/// (alpha for NOMA, tau for OMA).
struct BoundaryPoint {
  double param;
  double r1;
  double r2;
};

/// Ordered Pareto polyline of achievable (R1, R2) pairs for one scheme and
/// one channel pair. Along the list R1 is nondecreasing and R2 nonincreasing;
/// the endpoints are (0, C(gamma2)) and (C(gamma1), 0) within 1e-9.
class RegionBoundary {
 public:
  RegionBoundary(Scheme scheme, double gamma1, double gamma2,
                 std::vector<BoundaryPoint> points);

  Scheme scheme() const noexcept { return scheme_; }
  double gamma1() const noexcept { return gamma1_; }
  double gamma2() const noexcept { return gamma2_; }
  const std::vector<BoundaryPoint>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

 private:
  Scheme scheme_;
  double gamma1_;
  double gamma2_;
  std::vector<BoundaryPoint> points_;
};

/// NOMA boundary sampled on a uniform alpha grid of n_points values in [0,1].
RegionBoundary noma_boundary(double gamma1, double gamma2,
                             std::size_t n_points);

/// OMA boundary sampled on a uniform tau grid: the straight segment between
/// (0, C(gamma2)) and (C(gamma1), 0).
RegionBoundary oma_boundary(double gamma1, double gamma2, std::size_t n_points);

/// Exact R2 on the NOMA boundary at a given R1: inverts R1 = C(alpha*gamma1)
/// for alpha, then evaluates the weak user's rate. Throws std::domain_error
/// if r1_target exceeds C(gamma1) (infeasible).
double r2_on_noma_boundary(double gamma1, double gamma2, double r1_target);

/// Linear interpolation of a boundary polyline at the given R1 (clamped to
/// the sampled R1 range).
double boundary_r2_at(const RegionBoundary& boundary, double r1);

struct DominanceResult {
  bool holds;
  /// The first inner point exceeding the outer boundary, when !holds.
  std::optional<BoundaryPoint> witness;

  explicit operator bool() const noexcept { return holds; }
};

/// True iff every inner point lies on or below the outer polyline within tol.
/// Both boundaries must have been generated for the same (gamma1, gamma2);
/// otherwise throws std::invalid_argument. tol should scale with the outer
/// grid density (the default suits a few hundred points or more).
DominanceResult dominates(const RegionBoundary& outer,
                          const RegionBoundary& inner, double tol = 1e-9);

/// CSV serialization: header `scheme,param,r1,r2`, 12 significant digits.
void write_region_csv(std::ostream& os,
                      std::span<const RegionBoundary> boundaries);

}  // namespace noma
