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

#ifndef KERRWIG_WIGNER_HPP
#define KERRWIG_WIGNER_HPP

#include <complex>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "kerrwig/channel.hpp"

namespace kerrwig {

// Convention note: the Wigner operator here is (1/pi) D(2 alpha) (-1)^{a^dag a},
// under which the full-plane integral of W is 1/2, not 1.

struct Coherent {
  cplx z;
};

struct Number {
  int s = 0;
};

using InitialState = std::variant<Coherent, Number, DensityMatrix>;

/// Human-readable tag ("coherent z=...", "fock s=...", "matrix N=...").
std::string describe(const InitialState& source);

/// Radius beyond which the initial Wigner function is negligible; used to
/// size quadrature windows.
double support_radius(const InitialState& source);

/// Wigner function of the source at t = 0.
double initial_wigner(const InitialState& source, cplx beta);

/// Displacement matrix element <n|D(beta)|m>, associated-Laguerre closed form
/// with log-factorial stabilization.
cplx displacement_element(int n, int m, cplx beta);

/// Displaced-parity evaluation (1/pi) sum_{m,n} rho_{mn} (-1)^m <n|D(2 alpha)|m>.
double wigner_from_density(const DensityMatrix& rho, cplx alpha);

/// Series coefficient
///   C_{m,n} = e^{-i chi t (m^2-n^2) - gamma t (m+n)} e^{-2|alpha|^2}
///             H_{m,n}(2 alpha*, 2 alpha) / (m! n! (Lambda+1)^{(m+n+2)/2}).
cplx c_coeff(int m, int n, cplx alpha, const ChannelParams& params);

/// Initial-state moment E_{m,n}: closed form for Coherent and Number sources,
/// tensor quadrature of the defining integral for Matrix sources.
cplx e_moment(int m, int n, const InitialState& source,
              const ChannelParams& params, double quad_tol = 1e-10);

/// Evolved Wigner function as the double series sum_{m,n} C_{m,n} E_{m,n},
/// summed over anti-diagonals m+n = k with compensated accumulation.
double evolve_wigner(const InitialState& source, cplx alpha,
                     const ChannelParams& params, double tol = 1e-10);

/// Direct summation of the coherent-state evolution series
///   W = (e^{-2|alpha|^2}/pi) sum z^m z*^n/(m!n!) e^{-i chi t(m^2-n^2)
///       - gamma t(m+n)} e^{(Lambda-1)|z|^2} H_{m,n}(2 alpha*, 2 alpha),
/// an independent organization of the same evolution used for cross-checks.
double wigner_coherent_evolved(cplx z, cplx alpha, const ChannelParams& params,
                               double tol = 1e-10);

/// Pure-loss (chi = 0) Gaussian-kernel propagation
///   W(alpha,t) = (2/T) int d^2beta/pi e^{-(2/T)|alpha - beta e^{-gamma t}|^2}
///                W(beta,0),   T = 1 - e^{-2 gamma t},
/// by quadrature over the supplied initial Wigner function. t = 0 returns
/// w0(alpha) directly.
double damping_kernel(const std::function<double(cplx)>& w0, cplx alpha,
                      const ChannelParams& params, double radius,
                      double tol = 1e-9);

struct Window {
  double re_min = -4.0, re_max = 4.0;
  double im_min = -4.0, im_max = 4.0;
};

/// Rectangular phase-space grid of evolved Wigner values.
class WignerGrid {
 public:
  WignerGrid(Window window, int n_re, int n_im, ChannelParams params,
             std::string source_desc);

  double& at(int i, int j) { return values_[static_cast<std::size_t>(i) * n_im_ + j]; }
  double at(int i, int j) const {
    return values_[static_cast<std::size_t>(i) * n_im_ + j];
  }
  double re(int i) const;
  double im(int j) const;
  int n_re() const { return n_re_; }
  int n_im() const { return n_im_; }
  const Window& window() const { return window_; }
  const ChannelParams& params() const { return params_; }
  int max_order_used = 0;

  double min_value() const;
  /// Trapezoidal integral over the window; approx 1/2 under this convention
  /// when the window holds all significant support.
  double integral() const;

  /// CSV `re_alpha,im_alpha,w` at 17 significant digits plus a `.meta`
  /// sidecar with params, source, window, resolution and convention note.
  void save_csv(const std::string& path) const;

 private:
  Window window_;
  int n_re_, n_im_;
  ChannelParams params_;
  std::string source_desc_;
  std::vector<double> values_;
};

/// Fills a grid by evaluating evolve_wigner at every point; points are
/// independent and computed in parallel.
WignerGrid wigner_grid(const InitialState& source, const ChannelParams& params,
                       Window window, int n_re, int n_im, double tol = 1e-9);

}  // namespace kerrwig

#endif  // KERRWIG_WIGNER_HPP
