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

#include "kerrwig/channel.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <istream>
#include <ostream>
#include <sstream>

#include "kerrwig/errors.hpp"

namespace kerrwig {

void ChannelParams::validate() const {
  if (!(gamma >= 0.0) || !std::isfinite(gamma))
    throw ValidationError("ChannelParams: gamma must be >= 0");
  if (!(t >= 0.0) || !std::isfinite(t))
    throw ValidationError("ChannelParams: t must be >= 0");
  if (!std::isfinite(chi)) throw ValidationError("ChannelParams: chi not finite");
}

cplx lambda_coeff(int m, int n, const ChannelParams& params) {
  if (params.gamma == 0.0) return cplx(0.0);
  const cplx d(params.gamma, params.chi * static_cast<double>(m - n));
  return params.gamma * (1.0 - std::exp(-2.0 * params.t * d)) / d;
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(Eigen::MatrixXcd data) : data_(std::move(data)) {
  if (data_.rows() != data_.cols() || data_.rows() < 1)
    throw ValidationError("DensityMatrix: matrix must be square and non-empty");
}

DensityMatrix DensityMatrix::vacuum(int n_cut) {
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(n_cut, n_cut);
  d(0, 0) = 1.0;
  return DensityMatrix(std::move(d));
}

DensityMatrix DensityMatrix::fock(int s, int n_cut) {
  if (s < 0) throw ValidationError("fock: s must be >= 0");
  if (n_cut <= 0) n_cut = std::max(32, s + 1);
  if (s >= n_cut) throw ValidationError("fock: s >= n_cut");
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(n_cut, n_cut);
  d(s, s) = 1.0;
  return DensityMatrix(std::move(d));
}

DensityMatrix DensityMatrix::coherent(cplx z, int n_cut, double tail_tol) {
  const double nbar = std::norm(z);
  if (n_cut <= 0) {
    n_cut = 32;
    // Raise the truncation until the Poisson tail drops below tail_tol.
    while (true) {
      double tail = 1.0, term = std::exp(-nbar);
      for (int k = 0; k < n_cut; ++k) {
        tail -= term;
        term *= nbar / (k + 1.0);
      }
      if (tail < tail_tol || n_cut > 4096) break;
      n_cut += 16;
    }
  }
  Eigen::VectorXcd amp(n_cut);
  // c_k = e^{-|z|^2/2} z^k / sqrt(k!), built multiplicatively.
  amp(0) = std::exp(-0.5 * nbar);
  for (int k = 1; k < n_cut; ++k)
    amp(k) = amp(k - 1) * z / std::sqrt(static_cast<double>(k));
  Eigen::MatrixXcd d = amp * amp.adjoint();
  return DensityMatrix(std::move(d));
}

double DensityMatrix::hermiticity_defect() const {
  return (data_ - data_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::MatrixXcd sym = 0.5 * (data_ + data_.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sym,
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

void DensityMatrix::validate(double trunc_tail) const {
  if (hermiticity_defect() > 1e-12)
    throw ValidationError("DensityMatrix: Hermiticity defect above 1e-12");
  const double tr = trace();
  if (tr < 1.0 - trunc_tail - 1e-12 || tr > 1.0 + 1e-12)
    throw ValidationError("DensityMatrix: trace " + std::to_string(tr) +
                          " outside [1-tail, 1]");
  if (min_eigenvalue() < -1e-10)
    throw ValidationError("DensityMatrix: not positive semidefinite");
}

void DensityMatrix::save(std::ostream& os) const {
  const int n = n_cut();
  os << "fock-density v1 N=" << n << "\n";
  char buf[128];
  for (int m = 0; m < n; ++m) {
    for (int k = 0; k < n; ++k) {
      std::snprintf(buf, sizeof(buf), "%d %d %.17g %.17g\n", m, k,
                    data_(m, k).real(), data_(m, k).imag());
      os << buf;
    }
  }
}

void DensityMatrix::save_file(const std::string& path) const {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open for writing: " + path);
  save(os);
  if (!os) throw IoError("write failed: " + path);
}

DensityMatrix DensityMatrix::load(std::istream& is) {
  std::string tag, ver, nfield;
  is >> tag >> ver >> nfield;
  if (tag != "fock-density" || ver != "v1" || nfield.rfind("N=", 0) != 0)
    throw IoError("not a fock-density v1 stream");
  const int n = std::stoi(nfield.substr(2));
  if (n < 1 || n > 100000) throw IoError("fock-density: bad dimension");
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(n, n);
  for (long k = 0; k < static_cast<long>(n) * n; ++k) {
    int m, j;
    double re, im;
    if (!(is >> m >> j >> re >> im))
      throw IoError("fock-density: truncated entry list");
    if (m < 0 || m >= n || j < 0 || j >= n)
      throw IoError("fock-density: index out of range");
    d(m, j) = cplx(re, im);
  }
  return DensityMatrix(std::move(d));
}

DensityMatrix DensityMatrix::load_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open for reading: " + path);
  return load(is);
}

// ---------------------------------------------------------------------------
// LambdaTable

LambdaTable::LambdaTable(int n_cut, const ChannelParams& params)
    : params_(params), values_(n_cut, n_cut) {
  params.validate();
  for (int m = 0; m < n_cut; ++m) {
    for (int n = 0; n < n_cut; ++n) {
      const cplx v = lambda_coeff(m, n, params);
      if ((v + 1.0).real() <= 0.0)
        throw DomainError("LambdaTable: Re(Lambda+1) <= 0, branch unsafe");
      values_(m, n) = v;
    }
  }
}

// ---------------------------------------------------------------------------
// evolve_density

DensityMatrix evolve_density(const DensityMatrix& rho0,
                             const ChannelParams& params, int l_max,
                             double tail_tol) {
  params.validate();
  rho0.validate(1e-6);
  const int n = rho0.n_cut();
  const double ct = params.chi * params.t;
  const double gt = params.gamma * params.t;
  if (l_max < 0) l_max = n - 1;

  const double rho_max = rho0.data().cwiseAbs().maxCoeff();
  double tail_bound = 0.0;

  Eigen::MatrixXcd out(n, n);
  for (int m = 0; m < n; ++m) {
    for (int k = m; k < n; ++k) {
      const cplx lam = lambda_coeff(m, k, params);
      const double llam = std::abs(lam) > 0.0
                              ? std::log(std::abs(lam))
                              : -std::numeric_limits<double>::infinity();
      const double alam = std::arg(lam);
      const int l_nat = n - 1 - k;  // rho0 entries vanish beyond this
      const int l_hi = std::min(l_max, l_nat);
      cplx acc(0.0);
      const double base = std::lgamma(m + 1.0) + std::lgamma(k + 1.0);
      for (int l = 0; l <= l_hi; ++l) {
        double logw;
        if (l == 0) {
          logw = 0.0;
        } else {
          if (!std::isfinite(llam)) break;  // Lambda == 0: only l = 0 survives
          logw = l * llam - std::lgamma(l + 1.0) +
                 0.5 * (std::lgamma(m + l + 1.0) + std::lgamma(k + l + 1.0) -
                        base);
        }
        acc += std::exp(logw) * std::polar(1.0, l * alam) * rho0(m + l, k + l);
      }
      // First omitted term bounds the truncation tail of the l-sum.
      if (l_hi < l_nat && std::isfinite(llam)) {
        const int l = l_hi + 1;
        const double logw =
            l * llam - std::lgamma(l + 1.0) +
            0.5 * (std::lgamma(m + l + 1.0) + std::lgamma(k + l + 1.0) - base);
        tail_bound = std::max(tail_bound, 2.0 * std::exp(logw) * rho_max);
      }
      const cplx phase =
          std::polar(1.0, -ct * static_cast<double>(m * m - k * k)) *
          std::exp(-gt * static_cast<double>(m + k));
      out(m, k) = phase * acc;
      if (k != m) out(k, m) = std::conj(out(m, k));
    }
  }
  if (tail_bound > tail_tol)
    throw TruncationError(
        "evolve_density: l_max too small, estimated l-sum tail " +
            std::to_string(tail_bound),
        tail_bound);
  return DensityMatrix(std::move(out));
}

// ---------------------------------------------------------------------------
// Generalized Kraus operators

std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> kraus_pair(
    int m, int n, int l, const ChannelParams& params, int n_cut) {
  if (m < 0 || n < 0 || l < 0 || m >= n_cut || n >= n_cut || l >= n_cut)
    throw ValidationError("kraus_pair: index beyond n_cut");
  params.validate();
  const cplx lam = lambda_coeff(m, n, params);
  // Same principal root on both sides so the product restores Lambda^l.
  const cplx root = std::sqrt(lam);
  const double inv_sqrt_lfac = std::exp(-0.5 * std::lgamma(l + 1.0));
  const cplx cm = std::pow(root, l) * inv_sqrt_lfac *
                  std::polar(1.0, -params.chi * params.t * m * m) *
                  std::exp(-params.gamma * params.t * m);
  const cplx dn = std::pow(root, l) * inv_sqrt_lfac *
                  std::polar(1.0, params.chi * params.t * n * n) *
                  std::exp(-params.gamma * params.t * n);
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n_cut, n_cut);
  Eigen::MatrixXcd Mdag = Eigen::MatrixXcd::Zero(n_cut, n_cut);
  // |m><m| a^l has a single entry at (m, m+l); a^{dag l}|n><n| at (n+l, n).
  if (m + l < n_cut)
    M(m, m + l) = cm * std::exp(0.5 * (std::lgamma(m + l + 1.0) -
                                       std::lgamma(m + 1.0)));
  if (n + l < n_cut)
    Mdag(n + l, n) = dn * std::exp(0.5 * (std::lgamma(n + l + 1.0) -
                                          std::lgamma(n + 1.0)));
  return {std::move(M), std::move(Mdag)};
}

double normalization_defect(const ChannelParams& params, int n_cut,
                            int l_max) {
  if (n_cut < 1) throw ValidationError("normalization_defect: n_cut < 1");
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n_cut, n_cut);
  for (int m = 0; m < n_cut; ++m) {
    for (int n = 0; n < n_cut; ++n) {
      for (int l = 0; l <= std::min(l_max, n_cut - 1); ++l) {
        auto [M, Mdag] = kraus_pair(m, n, l, params, n_cut);
        sum.noalias() += Mdag * M;
      }
    }
  }
  const int d = std::max(1, n_cut - l_max);
  Eigen::MatrixXcd block = sum.topLeftCorner(d, d) -
                           Eigen::MatrixXcd::Identity(d, d);
  return block.cwiseAbs().maxCoeff();
}

}  // namespace kerrwig
