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

#include "kerrwig/oracle.hpp"

#include <cmath>

#include "kerrwig/errors.hpp"
#include "kerrwig/hermite.hpp"
#include "kerrwig/quadrature.hpp"

namespace kerrwig {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Elementwise Lindblad right-hand side on the truncated space.
Eigen::MatrixXcd rhs(const Eigen::MatrixXcd& rho, double chi, double gamma) {
  const int n = static_cast<int>(rho.rows());
  Eigen::MatrixXcd d(n, n);
  for (int m = 0; m < n; ++m) {
    for (int k = 0; k < n; ++k) {
      cplx v = cplx(0.0, -chi * (static_cast<double>(m) * m -
                                 static_cast<double>(k) * k)) *
               rho(m, k);
      v -= gamma * static_cast<double>(m + k) * rho(m, k);
      if (m + 1 < n && k + 1 < n)
        v += 2.0 * gamma * std::sqrt((m + 1.0) * (k + 1.0)) *
             rho(m + 1, k + 1);
      d(m, k) = v;
    }
  }
  return d;
}

Eigen::MatrixXcd rk4_run(Eigen::MatrixXcd rho, double chi, double gamma,
                         double t_final, double dt) {
  const long steps = std::max(1L, std::lround(std::ceil(t_final / dt)));
  const double h = t_final / static_cast<double>(steps);
  for (long s = 0; s < steps; ++s) {
    const Eigen::MatrixXcd k1 = rhs(rho, chi, gamma);
    const Eigen::MatrixXcd k2 = rhs(rho + 0.5 * h * k1, chi, gamma);
    const Eigen::MatrixXcd k3 = rhs(rho + 0.5 * h * k2, chi, gamma);
    const Eigen::MatrixXcd k4 = rhs(rho + h * k3, chi, gamma);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return rho;
}

}  // namespace

void IntegratorConfig::validate(const ChannelParams& params) const {
  if (dt <= 0.0) throw ValidationError("IntegratorConfig: dt must be > 0");
  if (n_cut < 1) throw ValidationError("IntegratorConfig: n_cut < 1");
  const double stiffness =
      dt * (params.gamma * n_cut +
            std::abs(params.chi) * static_cast<double>(n_cut) * n_cut);
  if (stiffness >= 0.1)
    throw ValidationError(
        "IntegratorConfig: dt (gamma n + |chi| n^2) = " +
        std::to_string(stiffness) + " violates the stability heuristic");
}

DensityMatrix integrate_master_equation(const DensityMatrix& rho0,
                                        const ChannelParams& params,
                                        const IntegratorConfig& cfg) {
  params.validate();
  cfg.validate(params);
  rho0.validate(1e-6);
  if (params.t == 0.0) return rho0;
  const Eigen::MatrixXcd coarse =
      rk4_run(rho0.data(), params.chi, params.gamma, params.t, cfg.dt);
  const Eigen::MatrixXcd fine =
      rk4_run(rho0.data(), params.chi, params.gamma, params.t, 0.5 * cfg.dt);
  const double diff = (coarse - fine).cwiseAbs().maxCoeff();
  if (diff >= cfg.tol)
    throw ConvergenceError(
        "integrate_master_equation: halving dt moved the result by " +
            std::to_string(diff),
        fine.cwiseAbs().maxCoeff(), diff);
  return DensityMatrix(fine);
}

cplx quadrature_moment(const std::function<double(cplx)>& initial_wf, int m,
                       int n, const ChannelParams& params, double radius,
                       double tol) {
  params.validate();
  const cplx lam = lambda_coeff(m, n, params);
  if ((lam + 1.0).real() <= 0.0)
    throw DomainError("quadrature_moment: Re(Lambda+1) <= 0, branch unsafe");
  const cplx root = std::sqrt(lam + 1.0);
  const cplx decay = 2.0 * (lam - 1.0) / (lam + 1.0);
  // initial_wf carries e^{-2|beta|^2}; combined Gaussian rate 2 - Re(decay).
  const double rate = 2.0 - decay.real();
  if (rate <= 0.1)
    throw DomainError("quadrature_moment: integrand does not decay");
  const double half_width = radius + 6.0 / std::sqrt(0.5 * rate);
  auto f = [&](cplx beta) -> cplx {
    return initial_wf(beta) * std::exp(decay * std::norm(beta)) *
           hermite2(m, n, 2.0 * beta / root, 2.0 * std::conj(beta) / root);
  };
  return 4.0 / kPi * integrate_plane(f, half_width, tol);
}

}  // namespace kerrwig
