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

#ifndef KERRWIG_ORACLE_HPP
#define KERRWIG_ORACLE_HPP

#include <functional>

#include "kerrwig/channel.hpp"

namespace kerrwig {

// Brute-force verification paths. The integrator deliberately avoids every
// closed-form evolution code path; it shares only elementary functions.

struct IntegratorConfig {
  double dt = 1e-4;    ///< base step
  int n_cut = 32;      ///< truncation dimension
  double tol = 1e-8;   ///< step-halving acceptance threshold

  /// Stability heuristic dt (gamma n_cut + |chi| n_cut^2) < 0.1.
  void validate(const ChannelParams& params) const;
};

/// Classical RK4 on the elementwise master equation
///   drho_{mn}/dt = -i chi (m^2-n^2) rho_{mn}
///                  + gamma (2 sqrt((m+1)(n+1)) rho_{m+1,n+1} - (m+n) rho_{mn}).
/// The run is accepted only when halving dt moves the result by less than
/// cfg.tol in max-norm; the finer result is returned.
DensityMatrix integrate_master_equation(const DensityMatrix& rho0,
                                        const ChannelParams& params,
                                        const IntegratorConfig& cfg);

/// Brute-force tensor quadrature of the moment integral
///   E_{m,n} = 4 int d^2beta/pi W(beta,0) e^{2(Lambda-1)/(Lambda+1)|beta|^2}
///             H_{m,n}(2 beta/sqrt(Lambda+1), 2 beta*/sqrt(Lambda+1)).
cplx quadrature_moment(const std::function<double(cplx)>& initial_wf, int m,
                       int n, const ChannelParams& params, double radius,
                       double tol = 1e-10);

}  // namespace kerrwig

#endif  // KERRWIG_ORACLE_HPP
