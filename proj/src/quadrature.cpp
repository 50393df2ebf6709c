// Copyright 2026 The kerrwig Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kerrwig/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "kerrwig/errors.hpp"

namespace kerrwig {

namespace {

GaussLegendreRule build_rule(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev estimate, refined by Newton on P_n.
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[n - 1 - i] = rule.weights[i];
  }
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussLegendreRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

cplx integrate_plane(const std::function<cplx(cplx)>& f, double half_width,
                     double tol, int max_nodes) {
  cplx prev(0.0);
  bool have_prev = false;
  double last_diff = 0.0;
  for (int n = 32; n <= max_nodes; n *= 2) {
    const GaussLegendreRule& rule = gauss_legendre(n);
    cplx sum(0.0);
    for (int i = 0; i < n; ++i) {
      const double x = half_width * rule.nodes[i];
      cplx row(0.0);
      for (int j = 0; j < n; ++j) {
        const double y = half_width * rule.nodes[j];
        row += rule.weights[j] * f(cplx(x, y));
      }
      sum += rule.weights[i] * row;
    }
    sum *= half_width * half_width;
    if (have_prev) {
      last_diff = std::abs(sum - prev);
      if (last_diff <= tol * (std::abs(sum) + 1.0)) return sum;
    }
    prev = sum;
    have_prev = true;
  }
  throw ConvergenceError("integrate_plane: node doubling did not converge",
                         std::abs(prev), last_diff);
}

}  // namespace kerrwig
