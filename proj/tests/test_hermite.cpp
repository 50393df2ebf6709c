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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "kerrwig/errors.hpp"
#include "kerrwig/hermite.hpp"

using kerrwig::cplx;

namespace {

// Explicit double sum H_{m,n} = sum_k (-1)^k m! n! / (k! (m-k)! (n-k)!)
// x^{m-k} y^{n-k}, usable as an independent oracle at small orders.
cplx hermite_expansion(int m, int n, cplx x, cplx y) {
  auto fact = [](int v) {
    double r = 1.0;
    for (int k = 2; k <= v; ++k) r *= k;
    return r;
  };
  cplx sum = 0.0;
  for (int k = 0; k <= std::min(m, n); ++k) {
    const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sgn * fact(m) * fact(n) / (fact(k) * fact(m - k) * fact(n - k)) *
           std::pow(x, m - k) * std::pow(y, n - k);
  }
  return sum;
}

std::vector<std::pair<cplx, cplx>> random_pairs(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<std::pair<cplx, cplx>> out;
  for (int k = 0; k < count; ++k)
    out.emplace_back(cplx(u(rng), u(rng)), cplx(u(rng), u(rng)));
  return out;
}

}  // namespace

TEST_CASE("low-order closed forms") {
  const cplx x(1.3, -0.4), y(-0.7, 2.1);
  CHECK(std::abs(kerrwig::hermite2(0, 0, x, y) - 1.0) < 1e-15);
  CHECK(std::abs(kerrwig::hermite2(1, 0, x, y) - x) < 1e-15);
  CHECK(std::abs(kerrwig::hermite2(0, 1, x, y) - y) < 1e-15);
  CHECK(std::abs(kerrwig::hermite2(1, 1, x, y) - (x * y - 1.0)) < 1e-14);
  CHECK(std::abs(kerrwig::hermite2(2, 2, x, y) -
                 (x * x * y * y - 4.0 * x * y + 2.0)) < 1e-12);
}

TEST_CASE("diagonal equals Laguerre") {
  const cplx x(0.9, 0.3), y(1.1, -0.6);
  double fact = 1.0;
  for (int s = 0; s <= 8; ++s) {
    if (s > 0) fact *= s;
    const double sgn = (s % 2 == 0) ? 1.0 : -1.0;
    const cplx lhs = kerrwig::hermite2(s, s, x, y);
    const cplx rhs = sgn * fact * kerrwig::laguerre(s, x * y);
    CHECK(std::abs(lhs - rhs) < 1e-11 * (std::abs(rhs) + 1.0));
  }
}

TEST_CASE("recurrence agrees with explicit expansion") {
  for (const auto& [x, y] : random_pairs(20, 7)) {
    for (int m = 0; m <= 6; ++m) {
      for (int n = 0; n <= 6; ++n) {
        const cplx a = kerrwig::hermite2(m, n, x, y);
        const cplx b = hermite_expansion(m, n, x, y);
        CHECK(std::abs(a - b) <= 1e-12 * (std::abs(b) + 1.0));
      }
    }
  }
}

TEST_CASE("conjugation and exchange symmetries") {
  for (const auto& [x, y] : random_pairs(10, 11)) {
    for (int m = 0; m <= 5; ++m) {
      for (int n = 0; n <= 5; ++n) {
        const cplx h = kerrwig::hermite2(m, n, x, y);
        const cplx hc =
            kerrwig::hermite2(m, n, std::conj(x), std::conj(y));
        const cplx hx = kerrwig::hermite2(n, m, y, x);
        CHECK(std::abs(std::conj(h) - hc) <= 1e-13 * (std::abs(h) + 1.0));
        CHECK(std::abs(h - hx) <= 1e-13 * (std::abs(h) + 1.0));
      }
    }
  }
}

TEST_CASE("scaled variant matches unscaled and survives large orders") {
  const cplx x(1.1, 0.2), y(0.8, -0.5);
  double lognm = 0.0;
  for (int m = 0; m <= 12; ++m) {
    for (int n = 0; n <= 12; ++n) {
      lognm = 0.5 * (std::lgamma(m + 1.0) + std::lgamma(n + 1.0));
      const cplx scaled = kerrwig::hermite2_scaled(m, n, x, y);
      const cplx full = kerrwig::hermite2(m, n, x, y);
      CHECK(std::abs(scaled * std::exp(lognm) - full) <=
            1e-11 * (std::abs(full) + 1.0));
    }
  }
  // h_{40,40}(2,2) = H_{40,40}/40! = L_40(4); the unscaled path would carry
  // intermediates of order 40!.
  const cplx h = kerrwig::hermite2_scaled(40, 40, 2.0, 2.0);
  CHECK(std::isfinite(h.real()));
  // Frozen 30-digit evaluation of L_40(4); the recurrence loses ~1e-8 to the
  // alternating cancellation inherent at this order.
  CHECK(std::abs(h - 0.988546314494106973) < 1e-7);
  CHECK_THROWS_AS((void)kerrwig::hermite2(200, 200, 2.0, 2.0),
                  kerrwig::OverflowError);
}

TEST_CASE("Laguerre recurrence") {
  CHECK(std::abs(kerrwig::laguerre(0, cplx(2.5, 0.0)) - 1.0) < 1e-15);
  CHECK(std::abs(kerrwig::laguerre(1, cplx(2.5, 0.0)) - (1.0 - 2.5)) < 1e-15);
  CHECK(std::abs(kerrwig::laguerre(2, cplx(4.0, 0.0)) - 1.0) < 1e-13);
  for (int n = 0; n <= 12; ++n) {
    const double u = 0.37 * n + 0.21;
    CHECK(std::abs(kerrwig::laguerre(n, cplx(u, 0.0)) -
                   std::assoc_laguerre(n, 0, u)) < 1e-11);
  }
}

TEST_CASE("diagonal sum closed form vs truncated series") {
  const cplx x(1.0, 0.0), y(1.0, 0.0);
  CHECK(std::abs(kerrwig::hermite_diagonal_sum(0.0, 2, 3, x, y) -
                 kerrwig::hermite2(2, 3, x, y)) < 1e-13);

  auto series = [](cplx z, int m, int n, cplx x_, cplx y_) {
    cplx sum = 0.0, zp = 1.0;
    double fact = 1.0;
    for (int l = 0; l <= 60; ++l) {
      if (l > 0) {
        zp *= z;
        fact *= l;
      }
      sum += zp / fact * kerrwig::hermite2(m + l, n + l, x_, y_);
    }
    return sum;
  };
  const cplx a = kerrwig::hermite_diagonal_sum(0.3, 1, 1, x, y);
  const cplx b = series(0.3, 1, 1, x, y);
  CHECK(std::abs(a - b) < 1e-12 * (std::abs(b) + 1.0));

  const cplx z(0.1, 0.05), xc(1.0, 1.0), yc(1.0, -1.0);
  const cplx a2 = kerrwig::hermite_diagonal_sum(z, 2, 0, xc, yc);
  const cplx b2 = series(z, 2, 0, xc, yc);
  CHECK(std::abs(a2 - b2) < 1e-12 * (std::abs(b2) + 1.0));

  CHECK_THROWS_AS(
      (void)kerrwig::hermite_diagonal_sum(cplx(-3.0, 0.0), 0, 0, x, y),
      kerrwig::DomainError);
}

TEST_CASE("bilinear sum closed form vs truncated series") {
  const cplx x(1.0, 0.0), y(1.0, 0.0), a(1.0, 0.0), b(1.0, 0.0);
  CHECK(std::abs(kerrwig::hermite_bilinear_sum(0.0, 0.0, x, y, a, b) - 1.0) <
        1e-14);
  CHECK(std::abs(kerrwig::hermite_bilinear_sum(0.5, 0.0, x, y, a, b) -
                 std::exp(0.5 * x * a)) < 1e-13);

  cplx sum = 0.0;
  for (int m = 0; m <= 40; ++m) {
    for (int n = 0; n <= 40; ++n) {
      sum += std::pow(0.2, m) * std::pow(0.3, n) /
             (std::tgamma(m + 1.0) * std::tgamma(n + 1.0)) *
             kerrwig::hermite2(m, n, x, y) * kerrwig::hermite2(m, n, a, b);
    }
  }
  const cplx closed = kerrwig::hermite_bilinear_sum(0.2, 0.3, x, y, a, b);
  CHECK(std::abs(closed - sum) < 1e-12 * (std::abs(sum) + 1.0));

  CHECK_THROWS_AS(
      (void)kerrwig::hermite_bilinear_sum(1.0, 1.0, x, y, a, b),
      kerrwig::DomainError);
}

TEST_CASE("table matches scalar evaluation and recurrence invariants") {
  const cplx x(0.6, 1.2), y(-0.9, 0.4);
  kerrwig::HermiteTable unscaled(8, x, y, /*scaled=*/false);
  kerrwig::HermiteTable scaled(8, x, y, /*scaled=*/true);
  CHECK(std::abs(unscaled(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(scaled(0, 0) - 1.0) < 1e-15);
  for (int m = 0; m <= 8; ++m) {
    for (int n = 0; n <= 8; ++n) {
      CHECK(std::abs(unscaled(m, n) - kerrwig::hermite2(m, n, x, y)) <
            1e-11 * (std::abs(unscaled(m, n)) + 1.0));
      CHECK(std::abs(scaled(m, n) - kerrwig::hermite2_scaled(m, n, x, y)) <
            1e-12 * (std::abs(scaled(m, n)) + 1.0));
    }
  }
  // H_{m+1,n} = x H_{m,n} - n H_{m,n-1}.
  for (int m = 0; m < 8; ++m) {
    for (int n = 0; n <= 8; ++n) {
      const cplx lhs = unscaled(m + 1, n);
      const cplx rhs =
          x * unscaled(m, n) -
          (n > 0 ? static_cast<double>(n) * unscaled(m, n - 1) : cplx(0.0));
      CHECK(std::abs(lhs - rhs) < 1e-10 * (std::abs(lhs) + 1.0));
    }
  }
}
