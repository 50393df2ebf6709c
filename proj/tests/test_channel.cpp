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
#include <sstream>

#include "doctest.h"
#include "kerrwig/channel.hpp"
#include "kerrwig/errors.hpp"

using kerrwig::ChannelParams;
using kerrwig::cplx;
using kerrwig::DensityMatrix;

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

double binom(int n, int k) {
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                             std::lgamma(n - k + 1.0)));
}

DensityMatrix random_mixed(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = cplx(g(rng), g(rng));
  Eigen::MatrixXcd rho = a * a.adjoint();
  rho /= rho.trace();
  rho = 0.5 * (rho + rho.adjoint().eval());
  return DensityMatrix(std::move(rho));
}

}  // namespace

TEST_CASE("damping coefficient") {
  // Diagonal case: gamma (1 - e^{-2 gamma t}) / gamma, chi drops out.
  for (double chi : {0.0, 0.7, -3.0}) {
    const cplx lam = kerrwig::lambda_coeff(4, 4, {chi, 0.5, 1.0});
    CHECK(std::abs(lam - (1.0 - std::exp(-1.0))) < 1e-14);
  }
  CHECK(std::abs(kerrwig::lambda_coeff(3, 1, {1.0, 0.0, 2.0})) == 0.0);
  CHECK(std::abs(kerrwig::lambda_coeff(5, 5, {0.0, 0.0, 2.0})) == 0.0);
  // Frozen high-precision value of 0.2 (1-e^{-(0.2+1i)})/(0.2+1i).
  const cplx reg = kerrwig::lambda_coeff(1, 0, {1.0, 0.2, 0.5});
  CHECK(std::abs(reg - cplx(0.153935721217384945, -0.0807404330018845855)) <
        1e-15);
}

TEST_CASE("lambda table invariants") {
  const ChannelParams p{0.9, 0.35, 1.7};
  kerrwig::LambdaTable table(12, p);
  const double diag = 1.0 - std::exp(-2.0 * p.gamma * p.t);
  for (int m = 0; m < 12; ++m) {
    CHECK(std::abs(table(m, m) - diag) < 1e-14);
    for (int n = 0; n < 12; ++n) {
      CHECK(std::abs(table(m, n) - std::conj(table(n, m))) < 1e-15);
      CHECK((table(m, n) + 1.0).real() > 0.0);
    }
  }
}

TEST_CASE("vacuum is a fixed point") {
  const auto rho = kerrwig::evolve_density(DensityMatrix::vacuum(8),
                                           {2.0, 0.7, 1.3});
  CHECK(std::abs(rho(0, 0) - 1.0) < 1e-14);
  CHECK((rho.data() - DensityMatrix::vacuum(8).data()).cwiseAbs().maxCoeff() <
        1e-14);
}

TEST_CASE("number state decays to a binomial diagonal") {
  const ChannelParams p{7.0, 0.5, 0.5};
  const auto rho = kerrwig::evolve_density(DensityMatrix::fock(3, 10), p);
  const double q = std::exp(-2.0 * p.gamma * p.t);
  for (int m = 0; m <= 3; ++m) {
    const double expect = binom(3, m) * std::pow(q, m) * std::pow(1.0 - q, 3 - m);
    CHECK(std::abs(rho(m, m) - expect) < 1e-13);
  }
  for (int m = 0; m < 10; ++m)
    for (int n = 0; n < 10; ++n)
      if (m != n) CHECK(std::abs(rho(m, n)) < 1e-14);
}

TEST_CASE("lossless Kerr revival of a coherent state") {
  const auto rho0 = DensityMatrix::coherent(cplx(1.2, 0.4));
  const auto rho = kerrwig::evolve_density(rho0, {1.0, 0.0, kTwoPi});
  CHECK((rho.data() - rho0.data()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("Kraus sandwich reproduces the closed form") {
  const int n = 8;
  const ChannelParams p{0.8, 0.3, 0.4};
  const auto rho0 = random_mixed(n, 42);
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n);
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        const auto [M, Mdag] = kerrwig::kraus_pair(m, k, l, p, n);
        sum += M * rho0.data() * Mdag;
      }
  const auto direct = kerrwig::evolve_density(rho0, p);
  CHECK((sum - direct.data()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("pure loss is a semigroup") {
  const auto rho0 = random_mixed(10, 3);
  const auto one = kerrwig::evolve_density(
      kerrwig::evolve_density(rho0, {0.0, 0.4, 0.3}), {0.0, 0.4, 0.5});
  const auto two = kerrwig::evolve_density(rho0, {0.0, 0.4, 0.8});
  CHECK((one.data() - two.data()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("Kerr phases are periodic in chi t") {
  const auto rho0 = random_mixed(9, 17);
  const auto a = kerrwig::evolve_density(rho0, {2.0, 0.0, 0.37});
  const auto b = kerrwig::evolve_density(rho0, {2.0, 0.0, 0.37 + kTwoPi / 2.0});
  CHECK((a.data() - b.data()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("diagonal is independent of chi") {
  const auto rho0 = random_mixed(12, 29);
  const auto a = kerrwig::evolve_density(rho0, {0.0, 0.25, 0.6});
  const auto b = kerrwig::evolve_density(rho0, {3.0, 0.25, 0.6});
  for (int s = 0; s < 12; ++s) CHECK(std::abs(a(s, s) - b(s, s)) < 1e-12);
}

TEST_CASE("evolution preserves density-matrix structure") {
  const auto rho = kerrwig::evolve_density(random_mixed(20, 5),
                                           {1.0, 0.2, 0.5});
  CHECK(rho.hermiticity_defect() < 1e-12);
  CHECK(std::abs(rho.trace() - 1.0) < 1e-10);
  CHECK(rho.min_eigenvalue() > -1e-9);
}

TEST_CASE("serialization round-trips bit-exactly") {
  const auto rho = kerrwig::evolve_density(DensityMatrix::coherent(cplx(1.0, 0.7)),
                                           {0.9, 0.15, 0.8});
  std::stringstream ss;
  rho.save(ss);
  const auto back = DensityMatrix::load(ss);
  REQUIRE(back.n_cut() == rho.n_cut());
  CHECK((back.data() - rho.data()).cwiseAbs().maxCoeff() == 0.0);
  std::stringstream bad("fock-density v2 N=2");
  CHECK_THROWS_AS((void)DensityMatrix::load(bad), kerrwig::IoError);
}

TEST_CASE("too-small loss cutoff is reported") {
  const auto rho0 = DensityMatrix::coherent(cplx(2.0, 0.0));
  CHECK_THROWS_AS(
      (void)kerrwig::evolve_density(rho0, {0.0, 1.0, 1.0}, /*l_max=*/1,
                                    /*tail_tol=*/1e-12),
      kerrwig::TruncationError);
}

TEST_CASE("normalization defect") {
  // gamma = 0: only l = 0 survives and the Kerr phases cancel exactly.
  CHECK(kerrwig::normalization_defect({1.3, 0.0, 2.0}, 10, 0) < 1e-14);
  CHECK(kerrwig::normalization_defect({3.0, 0.1, 1.0}, 15, 10) < 1e-10);
}
