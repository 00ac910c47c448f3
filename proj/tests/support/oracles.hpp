// SPDX-License-Identifier: Apache-2.0
//
// Reference implementations used only by tests. Deliberately independent of
// the library under test: different algebraic routes, std-only.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

namespace oracles {

/// K-user superposition-coding rates via the cumulative-power ratio
///   R_u = 0.5 * log2((1 + gamma_u * S_k) / (1 + gamma_u * S_{k-1})),
/// where S_k is the power fraction of the k strongest users. Algebraically
/// equal to the per-user SINR form but computed on a different path.
inline std::vector<double> k_user_rates(const std::vector<double>& gammas,
                                        const std::vector<double>& alphas) {
  const std::size_t k = gammas.size();
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (gammas[a] != gammas[b]) return gammas[a] > gammas[b];
    return a < b;
  });
  std::vector<double> rates(k, 0.0);
  double cumulative = 0.0;
  for (std::size_t user : order) {
    const double before = cumulative;
    cumulative += alphas[user];
    rates[user] = 0.5 * std::log2((1.0 + gammas[user] * cumulative) /
                                  (1.0 + gammas[user] * before));
  }
  return rates;
}

/// Golden-section maximizer of a unimodal function on [lo, hi].
inline double golden_section_max(const std::function<double(double)>& f,
                                 double lo, double hi, double tol = 1e-10) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - phi * (b - a);
  double d = a + phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace oracles
