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

#ifndef KERRWIG_PHOTON_STATS_HPP
#define KERRWIG_PHOTON_STATS_HPP

#include <string>
#include <vector>

#include "kerrwig/wigner.hpp"

namespace kerrwig {

/// Photon-number distribution; probs[s] = p(s), tail = estimated mass beyond
/// the truncation.
struct PnDistribution {
  std::vector<double> probs;
  double tail = 0.0;

  double mean() const;
  /// CSV `s,p` plus trailing comment line `# tail=<value>`.
  void save_csv(const std::string& path) const;
};

/// p(s) = Re(rho_{ss}); throws ValidationError when any diagonal entry has
/// imaginary part above 1e-10.
PnDistribution pn_from_density(const DensityMatrix& rho);

/// Wigner-overlap route: quadrature of
///   p(s) = 4 (-1)^s e^{2 gamma t} / (2 e^{2 gamma t} - 1)^{s+1}
///          int d^2beta exp(-2|beta|^2/(2 e^{2 gamma t}-1))
///          L_s(4 e^{2 gamma t}|beta|^2/(2 e^{2 gamma t}-1)) W(beta,beta*,0)
/// over the initial Wigner function; chi drops out of the formula entirely.
double pn_overlap(const InitialState& source, int s,
                  const ChannelParams& params, double tol = 1e-10);

/// Closed-form fast path for coherent input: Poisson with mean
/// |z|^2 e^{-2 gamma t}.
double pn_coherent_closed(cplx z, int s, const ChannelParams& params);

/// Verification oracle: quadrature of
///   F_{m,n} = int d^2alpha e^{-2|alpha|^2} W_{|s><s|}(alpha) H_{m,n}(2a*,2a),
/// expected (s!/4) delta_{m,s} delta_{n,s}.
cplx f_overlap_check(int m, int n, int s, double tol = 1e-9);

}  // namespace kerrwig

#endif  // KERRWIG_PHOTON_STATS_HPP
