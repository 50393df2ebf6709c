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
#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "kerrwig/channel.hpp"
#include "kerrwig/errors.hpp"
#include "kerrwig/photon_stats.hpp"

using kerrwig::ChannelParams;
using kerrwig::Coherent;
using kerrwig::cplx;
using kerrwig::DensityMatrix;
using kerrwig::Number;

namespace {

double poisson(double mean, int s) {
  return std::exp(-mean + s * std::log(mean) - std::lgamma(s + 1.0));
}

}  // namespace

TEST_CASE("vacuum survives the loss channel") {
  CHECK(kerrwig::pn_overlap(Coherent{cplx(0.0)}, 0, {0.7, 0.4, 2.0}) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(kerrwig::pn_coherent_closed(cplx(0.0), 0, {0.0, 0.4, 2.0}) == 1.0);
  CHECK(kerrwig::pn_coherent_closed(cplx(0.0), 3, {0.0, 0.4, 2.0}) == 0.0);
}

TEST_CASE("coherent input stays Poisson with a decayed mean") {
  const ChannelParams p{0.0, 0.3, 0.2};
  const cplx z(1.5, 0.0);
  const double mean = std::norm(z) * std::exp(-2.0 * p.gamma * p.t);
  for (int s = 0; s <= 10; ++s) {
    const double quad = kerrwig::pn_overlap(Coherent{z}, s, p, 1e-12);
    CHECK(std::abs(quad - poisson(mean, s)) < 1e-8);
    CHECK(std::abs(kerrwig::pn_coherent_closed(z, s, p) - poisson(mean, s)) <
          1e-14);
  }
}

TEST_CASE("distribution is independent of the Kerr coupling") {
  const cplx z(1.5, 0.0);
  for (int s = 0; s <= 8; ++s) {
    const double a = kerrwig::pn_overlap(Coherent{z}, s, {0.0, 0.3, 0.2});
    const double b = kerrwig::pn_overlap(Coherent{z}, s, {2.0, 0.3, 0.2});
    CHECK(std::abs(a - b) < 1e-12);
  }
  // Density-matrix route: diagonals agree across chi as well.
  const auto rho0 = DensityMatrix::coherent(z);
  const auto da = kerrwig::pn_from_density(
      kerrwig::evolve_density(rho0, {0.0, 0.3, 0.2}));
  const auto db = kerrwig::pn_from_density(
      kerrwig::evolve_density(rho0, {2.0, 0.3, 0.2}));
  for (std::size_t s = 0; s < da.probs.size(); ++s)
    CHECK(std::abs(da.probs[s] - db.probs[s]) < 1e-12);
}

TEST_CASE("density-matrix route: indicators and binomial decay") {
  const auto fock = kerrwig::pn_from_density(DensityMatrix::fock(4, 8));
  for (int s = 0; s < 8; ++s)
    CHECK(fock.probs[s] == doctest::Approx(s == 4 ? 1.0 : 0.0));

  const ChannelParams p{1.3, 0.25, 1.0};
  const auto evolved = kerrwig::pn_from_density(
      kerrwig::evolve_density(DensityMatrix::fock(4, 10), p));
  const double q = std::exp(-2.0 * p.gamma * p.t);
  for (int m = 0; m <= 4; ++m) {
    const double expect = std::exp(std::lgamma(5.0) - std::lgamma(m + 1.0) -
                                   std::lgamma(5.0 - m)) *
                          std::pow(q, m) * std::pow(1.0 - q, 4 - m);
    CHECK(std::abs(evolved.probs[m] - expect) < 1e-12);
  }
  // Overlap route agrees with the density-matrix route.
  for (int s = 0; s <= 4; ++s)
    CHECK(std::abs(kerrwig::pn_overlap(Number{4}, s, p) - evolved.probs[s]) <
          1e-7);
}

TEST_CASE("mean photon number decays exponentially") {
  const ChannelParams p{0.9, 0.35, 0.6};
  const cplx z(1.2, -0.8);
  const auto dist = kerrwig::pn_from_density(
      kerrwig::evolve_density(DensityMatrix::coherent(z), p));
  CHECK(std::abs(dist.mean() -
                 std::norm(z) * std::exp(-2.0 * p.gamma * p.t)) < 1e-7);
  CHECK(std::abs(dist.tail) < 1e-6);
}

TEST_CASE("number-state overlap integral is a Kronecker delta") {
  CHECK(std::abs(kerrwig::f_overlap_check(0, 0, 0) - 0.25) < 1e-8);
  CHECK(std::abs(kerrwig::f_overlap_check(2, 2, 2) - 0.5) < 1e-8);
  CHECK(std::abs(kerrwig::f_overlap_check(1, 2, 2)) < 1e-8);
  CHECK(std::abs(kerrwig::f_overlap_check(3, 3, 2)) < 1e-8);
}

TEST_CASE("CSV serialization") {
  kerrwig::PnDistribution dist;
  dist.probs = {0.5, 0.25, 0.125};
  dist.tail = 0.125;
  const std::string path = "test_pn_out.csv";
  dist.save_csv(path);
  std::ifstream is(path);
  REQUIRE(is.good());
  std::string line;
  std::getline(is, line);
  CHECK(line == "s,p");
  std::getline(is, line);
  CHECK(line == "0,0.5");
  std::getline(is, line);
  std::getline(is, line);
  std::getline(is, line);
  CHECK(line.rfind("# tail=", 0) == 0);
  std::remove(path.c_str());
}
