// SPDX-License-Identifier: Apache-2.0
#include "noma/region.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "noma/rng.hpp"

using namespace noma;

namespace {
bool close(double x, double expected, double tol) {
  return std::abs(x - expected) <= tol;
}

double random_gamma(SplitMix64& rng, double lo = 0.01, double hi = 300.0) {
  return std::exp(rng.uniform(std::log(lo), std::log(hi)));
}
}  // namespace

TEST_SUITE_BEGIN("region");

TEST_CASE("NOMA boundary hits the canonical points") {
  // Grid step 0.025 lands exactly on alpha = 0, 0.025, 0.5, 0.8, 1.
  const RegionBoundary b = noma_boundary(200.0, 2.0, 41);
  REQUIRE(b.size() == 41);
  struct Row {
    std::size_t idx;
    double alpha, r1, r2;
  };
  const Row rows[] = {{0, 0.0, 0.0, 0.79},
                      {1, 0.025, 1.29, 0.76},
                      {20, 0.5, 3.33, 0.29},
                      {32, 0.8, 3.67, 0.10},
                      {40, 1.0, 3.83, 0.0}};
  for (const Row& row : rows) {
    CHECK(close(b.points()[row.idx].param, row.alpha, 1e-15));
    CHECK(close(b.points()[row.idx].r1, row.r1, 0.01));
    CHECK(close(b.points()[row.idx].r2, row.r2, 0.01));
  }
}

TEST_CASE("boundaries keep their ordering invariants") {
  SplitMix64 rng(1234);
  for (int i = 0; i < 50; ++i) {
    const double g2 = random_gamma(rng);
    const double g1 = g2 * rng.uniform(1.0, 100.0);
    for (const RegionBoundary& b :
         {noma_boundary(g1, g2, 33), oma_boundary(g1, g2, 33)}) {
      const auto& pts = b.points();
      CHECK(close(pts.front().r1, 0.0, 1e-9));
      CHECK(close(pts.front().r2, shannon_rate(g2), 1e-9));
      CHECK(close(pts.back().r1, shannon_rate(g1), 1e-9));
      CHECK(close(pts.back().r2, 0.0, 1e-9));
      for (std::size_t k = 1; k < pts.size(); ++k) {
        CHECK(pts[k].r1 >= pts[k - 1].r1);
        CHECK(pts[k].r2 <= pts[k - 1].r2);
      }
    }
  }
}

TEST_CASE("equal gains put every NOMA point on the sum-rate line") {
  SplitMix64 rng(77);
  for (int i = 0; i < 20; ++i) {
    const double g = random_gamma(rng);
    const RegionBoundary b = noma_boundary(g, g, 65);
    for (const auto& p : b.points()) {
      CHECK(close(p.r1 + p.r2, shannon_rate(g), 1e-12));
    }
  }
}

TEST_CASE("OMA boundary is the straight segment") {
  const RegionBoundary b = oma_boundary(200.0, 2.0, 3);
  REQUIRE(b.size() == 3);
  CHECK(b.points()[0].r1 == 0.0);
  CHECK(close(b.points()[0].r2, 0.792481250360578, 1e-11));
  CHECK(close(b.points()[1].r1, 1.91276292279473, 1e-11));
  CHECK(close(b.points()[1].r2, 0.396240625180289, 1e-11));
  CHECK(close(b.points()[2].r1, 3.82552584558946, 1e-11));
  CHECK(b.points()[2].r2 == 0.0);
  // Midpoint is exactly half of each corner (linearity).
  CHECK(b.points()[1].r1 == 0.5 * b.points()[2].r1);
  CHECK(b.points()[1].r2 == 0.5 * b.points()[0].r2);
}

TEST_CASE("r2_on_noma_boundary inverts the sweep") {
  CHECK(close(r2_on_noma_boundary(200.0, 2.0, 1.29), 0.76, 0.01));
  CHECK(close(r2_on_noma_boundary(200.0, 2.0, 0.0), 0.792481250360578, 1e-11));
  CHECK(close(r2_on_noma_boundary(200.0, 2.0, shannon_rate(200.0)), 0.0,
              1e-12));
  CHECK_THROWS_AS(r2_on_noma_boundary(200.0, 2.0, 3.9), std::domain_error);
  CHECK_THROWS_AS(r2_on_noma_boundary(200.0, 2.0, -0.1), std::domain_error);
}

TEST_CASE("r2_on_noma_boundary round-trips random sweep points") {
  SplitMix64 rng(31415);
  for (int i = 0; i < 500; ++i) {
    const double g2 = random_gamma(rng, 0.01, 100.0);
    const double g1 = g2 * rng.uniform(1.0, 100.0);
    const double alpha = rng.next_double();
    const RatePair r = noma_two_user(g1, g2, alpha);
    CHECK(close(r2_on_noma_boundary(g1, g2, r.r1), r.r2, 1e-12));
  }
}

TEST_CASE("NOMA dominates OMA") {
  const RegionBoundary n = noma_boundary(200.0, 2.0, 257);
  const RegionBoundary o = oma_boundary(200.0, 2.0, 257);
  CHECK(dominates(n, o, 1e-9).holds);
  // The converse fails, with a witness strictly inside the NOMA region.
  const DominanceResult converse = dominates(o, n, 1e-9);
  CHECK(!converse.holds);
  REQUIRE(converse.witness.has_value());
  CHECK(boundary_r2_at(o, converse.witness->r1) < converse.witness->r2);
}

TEST_CASE("dominance over random channels") {
  SplitMix64 rng(5050);
  for (int i = 0; i < 500; ++i) {
    const double g2 = random_gamma(rng, 0.01, 100.0);
    const double g1 = g2 * rng.uniform(1.0, 100.0);
    CHECK(dominates(noma_boundary(g1, g2, 65), oma_boundary(g1, g2, 65), 1e-9)
              .holds);
  }
}

TEST_CASE("a boundary dominates itself at zero tolerance") {
  const RegionBoundary n = noma_boundary(200.0, 2.0, 101);
  CHECK(dominates(n, n, 0.0).holds);
}

TEST_CASE("equal gains make the regions coincide") {
  const RegionBoundary n = noma_boundary(5.0, 5.0, 101);
  const RegionBoundary o = oma_boundary(5.0, 5.0, 101);
  CHECK(dominates(n, o, 1e-9).holds);
  CHECK(dominates(o, n, 1e-9).holds);
}

TEST_CASE("dominance rejects mismatched channels") {
  const RegionBoundary a = noma_boundary(200.0, 2.0, 11);
  const RegionBoundary b = oma_boundary(100.0, 2.0, 11);
  CHECK_THROWS_AS(dominates(a, b, 1e-9), std::invalid_argument);
}

TEST_CASE("boundary construction rejects invalid polylines") {
  CHECK_THROWS_AS(noma_boundary(2.0, 200.0, 11), std::invalid_argument);
  CHECK_THROWS_AS(noma_boundary(200.0, 2.0, 1), std::invalid_argument);
  // Scrambled ordering.
  CHECK_THROWS_AS(RegionBoundary(Scheme::kNoma, 200.0, 2.0,
                                 {{0.0, 0.0, shannon_rate(2.0)},
                                  {0.5, 3.0, 0.4},
                                  {0.4, 2.0, 0.3},
                                  {1.0, shannon_rate(200.0), 0.0}}),
                  std::invalid_argument);
  // Wrong endpoint.
  CHECK_THROWS_AS(RegionBoundary(Scheme::kNoma, 200.0, 2.0,
                                 {{0.0, 0.0, 0.5}, {1.0, 3.0, 0.0}}),
                  std::invalid_argument);
}

TEST_CASE("CSV serialization") {
  const std::vector<RegionBoundary> bs = {noma_boundary(200.0, 2.0, 3),
                                          oma_boundary(200.0, 2.0, 3)};
  std::ostringstream out;
  write_region_csv(out, bs);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "scheme,param,r1,r2");
  std::getline(in, line);
  CHECK(line == "NOMA,0,0,0.792481250361");
  int rows = 1;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 6);
  CHECK(out.str().find("OMA,0.5,1.91276292279,0.39624062518") !=
        std::string::npos);
}

TEST_SUITE_END();
