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

#include "kerrwig/hermite.hpp"

#include <cassert>
#include <cmath>
#include <limits>

#include "kerrwig/errors.hpp"

namespace kerrwig {

namespace {

constexpr double kOverflowGuard = 1e290;

// Fills row m of the unscaled table from row m-1:
//   H_{m,n} = x H_{m-1,n} ... no: columns advance with y.
// We fill row-by-row in n using H_{m,n} = y H_{m,n-1} - m H_{m-1,n-1},
// with the seed column H_{m,0} = x^m.
void fill_unscaled(std::vector<cplx>& v, int order, cplx x, cplx y) {
  const std::size_t s = static_cast<std::size_t>(order) + 1;
  v.assign(s * s, cplx(0.0));
  v[0] = 1.0;
  for (int m = 1; m <= order; ++m) v[m * s] = x * v[(m - 1) * s];
  for (int n = 1; n <= order; ++n) {
    v[n] = y * v[n - 1];
    for (int m = 1; m <= order; ++m) {
      v[m * s + n] =
          y * v[m * s + n - 1] - static_cast<double>(m) * v[(m - 1) * s + n - 1];
    }
  }
}

void fill_scaled(std::vector<cplx>& v, int order, cplx x, cplx y) {
  const std::size_t s = static_cast<std::size_t>(order) + 1;
  v.assign(s * s, cplx(0.0));
  v[0] = 1.0;
  for (int m = 1; m <= order; ++m)
    v[m * s] = x * v[(m - 1) * s] / std::sqrt(static_cast<double>(m));
  for (int n = 1; n <= order; ++n) {
    const double rn = std::sqrt(static_cast<double>(n));
    v[n] = y * v[n - 1] / rn;
    for (int m = 1; m <= order; ++m) {
      v[m * s + n] = (y * v[m * s + n - 1] -
                      std::sqrt(static_cast<double>(m)) * v[(m - 1) * s + n - 1]) /
                     rn;
    }
  }
}

}  // namespace

HermiteTable::HermiteTable(int max_order, cplx x, cplx y, bool scaled)
    : order_(max_order),
      stride_(static_cast<std::size_t>(max_order) + 1),
      scaled_(scaled),
      x_(x),
      y_(y) {
  assert(max_order >= 0);
  if (scaled)
    fill_scaled(values_, order_, x, y);
  else
    fill_unscaled(values_, order_, x, y);
}

cplx hermite2(int m, int n, cplx x, cplx y) {
  assert(m >= 0 && n >= 0);
  // Two rolling rows keep the evaluation O(m n) in time, O(n) in space.
  std::vector<cplx> prev(n + 1), cur(n + 1);
  prev[0] = 1.0;
  for (int j = 1; j <= n; ++j) prev[j] = y * prev[j - 1];
  for (int i = 1; i <= m; ++i) {
    cur[0] = x * prev[0];
    for (int j = 1; j <= n; ++j)
      cur[j] = y * cur[j - 1] - static_cast<double>(i) * prev[j - 1];
    for (int j = 0; j <= n; ++j) {
      if (std::abs(cur[j].real()) > kOverflowGuard ||
          std::abs(cur[j].imag()) > kOverflowGuard) {
        throw OverflowError(
            "hermite2: intermediate exceeds representable range at order (" +
            std::to_string(i) + "," + std::to_string(j) +
            "); use hermite2_scaled");
      }
    }
    std::swap(prev, cur);
  }
  return prev[n];
}

cplx hermite2_scaled(int m, int n, cplx x, cplx y) {
  assert(m >= 0 && n >= 0);
  std::vector<cplx> prev(n + 1), cur(n + 1);
  prev[0] = 1.0;
  for (int j = 1; j <= n; ++j)
    prev[j] = y * prev[j - 1] / std::sqrt(static_cast<double>(j));
  for (int i = 1; i <= m; ++i) {
    const double ri = std::sqrt(static_cast<double>(i));
    // h_{i,j} = (x h_{i-1,j} - sqrt(j) h_{i-1,j-1}) / sqrt(i)
    cur[0] = x * prev[0] / ri;
    for (int j = 1; j <= n; ++j)
      cur[j] =
          (x * prev[j] - std::sqrt(static_cast<double>(j)) * prev[j - 1]) / ri;
    std::swap(prev, cur);
  }
  return prev[n];
}

cplx laguerre(int n, cplx u) {
  assert(n >= 0);
  if (n == 0) return 1.0;
  cplx lkm1 = 1.0;
  cplx lk = 1.0 - u;
  for (int k = 1; k < n; ++k) {
    cplx lkp1 = ((2.0 * k + 1.0 - u) * lk - static_cast<double>(k) * lkm1) /
                (k + 1.0);
    lkm1 = lk;
    lk = lkp1;
  }
  return lk;
}

cplx hermite_diagonal_sum(cplx z, int m, int n, cplx x, cplx y) {
  assert(m >= 0 && n >= 0);
  const cplx zp1 = z + 1.0;
  if (zp1.real() <= 0.0) {
    throw DomainError("hermite_diagonal_sum: Re(z+1) <= 0 violates the "
                      "principal-branch precondition");
  }
  const cplx root = std::sqrt(zp1);
  const cplx h = hermite2(m, n, x / root, y / root);
  return std::exp(z * x * y / zp1) *
         std::pow(zp1, -0.5 * static_cast<double>(m + n + 2)) * h;
}

cplx hermite_bilinear_sum(cplx s, cplx t, cplx x, cplx y, cplx a, cplx b) {
  const cplx st = s * t;
  if (std::abs(st) >= 1.0) {
    throw DomainError("hermite_bilinear_sum: |s t| >= 1 outside the domain "
                      "of convergence");
  }
  const cplx denom = 1.0 - st;
  return std::exp((s * x * a + t * y * b - (x * y + a * b) * st) / denom) /
         denom;
}

}  // namespace kerrwig
