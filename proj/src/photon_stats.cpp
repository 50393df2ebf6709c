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

#include "kerrwig/photon_stats.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "kerrwig/errors.hpp"
#include "kerrwig/hermite.hpp"
#include "kerrwig/quadrature.hpp"

namespace kerrwig {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double PnDistribution::mean() const {
  double m = 0.0;
  for (std::size_t s = 0; s < probs.size(); ++s) m += s * probs[s];
  return m;
}

void PnDistribution::save_csv(const std::string& path) const {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open for writing: " + path);
  os << "s,p\n";
  char buf[64];
  for (std::size_t s = 0; s < probs.size(); ++s) {
    std::snprintf(buf, sizeof(buf), "%zu,%.17g\n", s, probs[s]);
    os << buf;
  }
  std::snprintf(buf, sizeof(buf), "# tail=%.17g\n", tail);
  os << buf;
  if (!os) throw IoError("write failed: " + path);
}

PnDistribution pn_from_density(const DensityMatrix& rho) {
  PnDistribution out;
  out.probs.resize(rho.n_cut());
  double sum = 0.0;
  for (int s = 0; s < rho.n_cut(); ++s) {
    const cplx d = rho(s, s);
    if (std::abs(d.imag()) > 1e-10)
      throw ValidationError("pn_from_density: diagonal entry " +
                            std::to_string(s) + " has imaginary part");
    out.probs[s] = d.real();
    sum += d.real();
  }
  out.tail = 1.0 - sum;
  return out;
}

double pn_overlap(const InitialState& source, int s,
                  const ChannelParams& params, double tol) {
  params.validate();
  if (s < 0) throw ValidationError("pn_overlap: s must be >= 0");
  const double e2gt = std::exp(2.0 * params.gamma * params.t);
  const double denom = 2.0 * e2gt - 1.0;
  const double sgn = (s % 2 == 0) ? 1.0 : -1.0;
  // Gaussian width grows with gamma t; the prefactor shrinks to match.
  const double half_width =
      support_radius(source) + 6.0 * std::sqrt(std::max(1.0, denom / 2.0));
  auto f = [&](cplx beta) -> cplx {
    const double b2 = std::norm(beta);
    return std::exp(-2.0 * b2 / denom) *
           std::assoc_laguerre(s, 0, 4.0 * e2gt * b2 / denom) *
           initial_wigner(source, beta);
  };
  const cplx integral = integrate_plane(f, half_width, tol);
  const double p = 4.0 * sgn * e2gt / std::pow(denom, s + 1.0) *
                   integral.real();
  return p;
}

double pn_coherent_closed(cplx z, int s, const ChannelParams& params) {
  params.validate();
  const double mean = std::norm(z) * std::exp(-2.0 * params.gamma * params.t);
  // Poisson(mean) in log form.
  if (mean == 0.0) return s == 0 ? 1.0 : 0.0;
  return std::exp(-mean + s * std::log(mean) - std::lgamma(s + 1.0));
}

cplx f_overlap_check(int m, int n, int s, double tol) {
  if (m < 0 || n < 0 || s < 0)
    throw ValidationError("f_overlap_check: indices must be >= 0");
  const double sgn = (s % 2 == 0) ? 1.0 : -1.0;
  auto f = [&](cplx a) -> cplx {
    const double a2 = std::norm(a);
    // e^{-2|a|^2} W_{|s><s|}(a) H_{m,n}(2a*, 2a); the number-state Wigner
    // function carries another e^{-2|a|^2}.
    return std::exp(-4.0 * a2) * sgn / kPi *
           std::assoc_laguerre(s, 0, 4.0 * a2) *
           hermite2(m, n, 2.0 * std::conj(a), 2.0 * a);
  };
  return integrate_plane(f, 4.0, tol);
}

}  // namespace kerrwig
