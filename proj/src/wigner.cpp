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

#include "kerrwig/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <unordered_map>

#include "kerrwig/errors.hpp"
#include "kerrwig/hermite.hpp"
#include "kerrwig/quadrature.hpp"

namespace kerrwig {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kOrderCap = 400;
constexpr double kImTol = 1e-9;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Neumaier-compensated accumulator.
struct Kahan {
  double sum = 0.0, comp = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

double checked_real(cplx w, const char* what) {
  if (std::abs(w.imag()) > kImTol)
    throw ValidationError(std::string(what) +
                          ": imaginary residual above 1e-9: " +
                          std::to_string(w.imag()));
  return w.real();
}

// Sums term(m,n) over anti-diagonals m+n = 0,1,...; stops when the last three
// anti-diagonal block sums are each below tol relative to the partial sum.
struct SeriesSum {
  cplx value;
  int k_used;
};

template <typename Term>
SeriesSum sum_antidiagonals(Term&& term, double tol, int k_cap) {
  Kahan re, im;
  double b1 = 1e308, b2 = 1e308, b3 = 1e308;
  for (int k = 0; k <= k_cap; ++k) {
    cplx block(0.0);
    for (int m = 0; m <= k; ++m) block += term(m, k - m);
    re.add(block.real());
    im.add(block.imag());
    b1 = b2;
    b2 = b3;
    b3 = std::abs(block);
    const double scale =
        tol * (std::abs(cplx(re.value(), im.value())) + 1e-300);
    if (k >= 2 && b1 < scale && b2 < scale && b3 < scale)
      return {cplx(re.value(), im.value()), k};
  }
  throw ConvergenceError(
      "wigner series: anti-diagonal sum did not converge within order cap",
      re.value(), b3);
}

}  // namespace

std::string describe(const InitialState& source) {
  return std::visit(
      overloaded{
          [](const Coherent& c) {
            char buf[80];
            std::snprintf(buf, sizeof(buf), "coherent z=%.17g%+.17gi",
                          c.z.real(), c.z.imag());
            return std::string(buf);
          },
          [](const Number& n) { return "fock s=" + std::to_string(n.s); },
          [](const DensityMatrix& d) {
            return "matrix N=" + std::to_string(d.n_cut());
          }},
      source);
}

double support_radius(const InitialState& source) {
  return std::visit(
      overloaded{[](const Coherent& c) { return std::abs(c.z) + 1.0; },
                 [](const Number& n) { return std::sqrt(n.s + 1.0) + 1.0; },
                 [](const DensityMatrix& d) {
                   return std::sqrt(static_cast<double>(d.n_cut()));
                 }},
      source);
}

double initial_wigner(const InitialState& source, cplx beta) {
  return std::visit(
      overloaded{
          [&](const Coherent& c) {
            return std::exp(-2.0 * std::norm(beta - c.z)) / kPi;
          },
          [&](const Number& n) {
            const double sgn = (n.s % 2 == 0) ? 1.0 : -1.0;
            return sgn / kPi * std::exp(-2.0 * std::norm(beta)) *
                   std::assoc_laguerre(n.s, 0, 4.0 * std::norm(beta));
          },
          [&](const DensityMatrix& d) { return wigner_from_density(d, beta); }},
      source);
}

cplx displacement_element(int n, int m, cplx beta) {
  if (beta == cplx(0.0)) return (n == m) ? 1.0 : 0.0;
  const double a = std::norm(beta);
  const double damp = -0.5 * a;
  if (n >= m) {
    const int d = n - m;
    const double logmag = 0.5 * (std::lgamma(m + 1.0) - std::lgamma(n + 1.0)) +
                          d * std::log(std::abs(beta)) + damp;
    return std::exp(logmag) * std::polar(1.0, d * std::arg(beta)) *
           std::assoc_laguerre(m, d, a);
  }
  const int d = m - n;
  const cplx mb = -std::conj(beta);
  const double logmag = 0.5 * (std::lgamma(n + 1.0) - std::lgamma(m + 1.0)) +
                        d * std::log(std::abs(mb)) + damp;
  return std::exp(logmag) * std::polar(1.0, d * std::arg(mb)) *
         std::assoc_laguerre(n, d, a);
}

double wigner_from_density(const DensityMatrix& rho, cplx alpha) {
  if (rho.hermiticity_defect() > 1e-10)
    throw ValidationError("wigner_from_density: input not Hermitian");
  const cplx beta = 2.0 * alpha;
  const int nc = rho.n_cut();
  Kahan re, im;
  for (int m = 0; m < nc; ++m) {
    const double parity = (m % 2 == 0) ? 1.0 : -1.0;
    for (int n = 0; n < nc; ++n) {
      const cplx v = rho(m, n) * parity * displacement_element(n, m, beta);
      re.add(v.real());
      im.add(v.imag());
    }
  }
  return checked_real(cplx(re.value(), im.value()), "wigner_from_density") /
         kPi;
}

cplx c_coeff(int m, int n, cplx alpha, const ChannelParams& params) {
  params.validate();
  const cplx lam = lambda_coeff(m, n, params);
  if ((lam + 1.0).real() <= 0.0)
    throw DomainError("c_coeff: Re(Lambda+1) <= 0, branch unsafe");
  const cplx h = hermite2_scaled(m, n, 2.0 * std::conj(alpha), 2.0 * alpha);
  const cplx w =
      cplx(-2.0 * std::norm(alpha) -
               0.5 * (std::lgamma(m + 1.0) + std::lgamma(n + 1.0)) -
               params.gamma * params.t * (m + n),
           -params.chi * params.t * static_cast<double>(m) * m +
               params.chi * params.t * static_cast<double>(n) * n) -
      0.5 * (m + n + 2.0) * std::log(lam + 1.0);
  return h * std::exp(w);
}

namespace {

cplx e_moment_coherent(int m, int n, cplx z, cplx lam) {
  const double p = 0.5 * (m + n + 2.0);
  cplx zp(1.0);
  for (int i = 0; i < m; ++i) zp *= z;
  for (int i = 0; i < n; ++i) zp *= std::conj(z);
  return std::pow(lam + 1.0, p) * std::exp((lam - 1.0) * std::norm(z)) * zp /
         kPi;
}

double e_moment_number(int m, int n, int s, double T) {
  if (m != n || m > s) return 0.0;
  const double comb =
      std::exp(std::lgamma(s + 1.0) - std::lgamma(s - m + 1.0));
  return comb * std::pow(T, s - m) * std::pow(T + 1.0, m + 1.0) / kPi;
}

cplx e_moment_matrix(int m, int n, const DensityMatrix& rho, cplx lam,
                     double radius, double quad_tol) {
  if ((lam + 1.0).real() <= 0.0)
    throw DomainError("e_moment: Re(Lambda+1) <= 0, branch unsafe");
  const cplx root = std::sqrt(lam + 1.0);
  const cplx decay = 2.0 * (lam - 1.0) / (lam + 1.0);
  // The Wigner factor contributes e^{-2|beta|^2} of its own, so the combined
  // Gaussian rate is 2 - Re(decay).
  const double rate = 2.0 - decay.real();
  if (rate <= 0.1)
    throw DomainError("e_moment: integrand does not decay for this Lambda");
  const double half_width = radius + 6.0 / std::sqrt(0.5 * rate);
  auto f = [&](cplx beta) -> cplx {
    return wigner_from_density(rho, beta) *
           std::exp(decay * std::norm(beta)) *
           hermite2(m, n, 2.0 * beta / root, 2.0 * std::conj(beta) / root);
  };
  return 4.0 / kPi * integrate_plane(f, half_width, quad_tol);
}

}  // namespace

cplx e_moment(int m, int n, const InitialState& source,
              const ChannelParams& params, double quad_tol) {
  params.validate();
  const cplx lam = lambda_coeff(m, n, params);
  return std::visit(
      overloaded{
          [&](const Coherent& c) { return e_moment_coherent(m, n, c.z, lam); },
          [&](const Number& s) {
            return cplx(e_moment_number(m, n, s.s, lam.real()));
          },
          [&](const DensityMatrix& d) {
            return e_moment_matrix(m, n, d, lam,
                                   support_radius(InitialState(d)), quad_tol);
          }},
      source);
}

namespace detail {

struct PointResult {
  double value;
  int order;
};

// Coherent-source series: C_{m,n} E_{m,n} combined in log form so the
// (Lambda+1)^{(m+n+2)/2} factors cancel analytically.
PointResult evolve_coherent(cplx z, cplx alpha, const ChannelParams& params,
                            double tol) {
  const double a2 = std::norm(alpha);
  if (z == cplx(0.0)) return {std::exp(-2.0 * a2) / kPi, 0};
  const double nbar = std::norm(z);
  const cplx logz = std::log(z);
  const double gt = params.gamma * params.t;
  const double ct = params.chi * params.t;

  int order = std::min(
      kOrderCap,
      std::max(24, static_cast<int>(4.0 * nbar + 12.0 * std::sqrt(nbar + 1.0) +
                                    16.0)));
  while (true) {
    HermiteTable h(order, 2.0 * std::conj(alpha), 2.0 * alpha, true);
    // Lambda depends on m-n only.
    std::vector<cplx> lam(2 * order + 1);
    for (int d = -order; d <= order; ++d)
      lam[d + order] = lambda_coeff(d > 0 ? d : 0, d > 0 ? 0 : -d, params);
    std::vector<double> lgam(order + 1);
    for (int i = 0; i <= order; ++i) lgam[i] = std::lgamma(i + 1.0);

    auto term = [&](int m, int n) -> cplx {
      const cplx l = lam[m - n + order];
      const cplx w = cplx(-2.0 * a2 - nbar, 0.0) + l * nbar +
                     static_cast<double>(m) * logz +
                     static_cast<double>(n) * std::conj(logz) +
                     cplx(-gt * (m + n),
                          -ct * (static_cast<double>(m) * m -
                                 static_cast<double>(n) * n)) -
                     0.5 * (lgam[m] + lgam[n]);
      return h(m, n) * std::exp(w) / kPi;
    };
    try {
      SeriesSum s = sum_antidiagonals(term, tol, order);
      return {checked_real(s.value, "evolve_wigner"), s.k_used};
    } catch (const ConvergenceError&) {
      if (order >= kOrderCap) throw;
      order = std::min(kOrderCap, 2 * order);
    }
  }
}

PointResult evolve_number(int s, cplx alpha, const ChannelParams& params) {
  // E_{m,n} is diagonal and vanishes beyond m = s: the series is finite.
  Kahan re, im;
  InitialState src = Number{s};
  for (int m = 0; m <= s; ++m) {
    const cplx v = c_coeff(m, m, alpha, params) * e_moment(m, m, src, params);
    re.add(v.real());
    im.add(v.imag());
  }
  return {checked_real(cplx(re.value(), im.value()), "evolve_wigner"), s};
}

PointResult evolve_matrix(const DensityMatrix& rho, cplx alpha,
                          const ChannelParams& params, double tol) {
  InitialState src = rho;
  std::unordered_map<long, cplx> cache;
  auto moment = [&](int m, int n) {
    const long key = static_cast<long>(m) * 100000 + n;
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, e_moment(m, n, src, params, tol * 0.1)).first;
    return it->second;
  };
  auto term = [&](int m, int n) -> cplx {
    return c_coeff(m, n, alpha, params) * moment(m, n);
  };
  SeriesSum s = sum_antidiagonals(term, tol, 80);
  return {checked_real(s.value, "evolve_wigner"), s.k_used};
}

PointResult evolve_point(const InitialState& source, cplx alpha,
                         const ChannelParams& params, double tol) {
  params.validate();
  if (tol <= 0.0) throw ValidationError("evolve_wigner: tol must be > 0");
  if (params.t == 0.0) return {initial_wigner(source, alpha), 0};
  return std::visit(
      overloaded{[&](const Coherent& c) {
                   return evolve_coherent(c.z, alpha, params, tol);
                 },
                 [&](const Number& n) {
                   return evolve_number(n.s, alpha, params);
                 },
                 [&](const DensityMatrix& d) {
                   return evolve_matrix(d, alpha, params, tol);
                 }},
      source);
}

}  // namespace detail

double evolve_wigner(const InitialState& source, cplx alpha,
                     const ChannelParams& params, double tol) {
  return detail::evolve_point(source, alpha, params, tol).value;
}

double wigner_coherent_evolved(cplx z, cplx alpha, const ChannelParams& params,
                               double tol) {
  params.validate();
  if (tol <= 0.0)
    throw ValidationError("wigner_coherent_evolved: tol must be > 0");
  const double a2 = std::norm(alpha);
  if (z == cplx(0.0)) return std::exp(-2.0 * a2) / kPi;
  const double nbar = std::norm(z);
  const double gt = params.gamma * params.t;
  const double ct = params.chi * params.t;

  // Rectangular truncation grown until the value is stable: the term weights
  // are Poisson-like in each index.
  int order = std::max(
      16, static_cast<int>(nbar + 6.0 * std::sqrt(nbar + 1.0) + 10.0));
  double prev = 0.0;
  bool have_prev = false;
  while (order <= kOrderCap) {
    HermiteTable h(order, 2.0 * std::conj(alpha), 2.0 * alpha, true);
    std::vector<cplx> zpow(order + 1);
    zpow[0] = 1.0;
    for (int k = 1; k <= order; ++k)
      zpow[k] = zpow[k - 1] * z / std::sqrt(static_cast<double>(k));
    std::vector<cplx> lam(2 * order + 1);
    for (int d = -order; d <= order; ++d)
      lam[d + order] = lambda_coeff(d > 0 ? d : 0, d > 0 ? 0 : -d, params);

    Kahan re, im;
    for (int m = 0; m <= order; ++m) {
      for (int n = 0; n <= order; ++n) {
        const cplx l = lam[m - n + order];
        const cplx v =
            zpow[m] * std::conj(zpow[n]) * h(m, n) *
            std::exp((l - 1.0) * nbar +
                     cplx(-gt * (m + n),
                          -ct * (static_cast<double>(m) * m -
                                 static_cast<double>(n) * n)));
        re.add(v.real());
        im.add(v.imag());
      }
    }
    // Scale before the realness check: the raw sum is ~e^{2|alpha|^2} W pi,
    // so its rounding-level imaginary part is only meaningful in W units.
    const double w = checked_real(cplx(re.value(), im.value()) *
                                      (std::exp(-2.0 * a2) / kPi),
                                  "wigner_coherent_evolved");
    if (have_prev && std::abs(w - prev) <= tol * (std::abs(w) + 1e-300))
      return w;
    prev = w;
    have_prev = true;
    order += 8;
  }
  throw ConvergenceError(
      "wigner_coherent_evolved: truncation growth did not converge", prev,
      std::abs(prev));
}

double damping_kernel(const std::function<double(cplx)>& w0, cplx alpha,
                      const ChannelParams& params, double radius, double tol) {
  params.validate();
  if (params.chi != 0.0)
    throw ValidationError("damping_kernel: requires chi == 0");
  const double gt = params.gamma * params.t;
  const double T = 1.0 - std::exp(-2.0 * gt);
  if (T == 0.0) return w0(alpha);  // delta-kernel limit
  const double decay = (2.0 / T) * std::exp(-2.0 * gt);
  const double center = std::abs(alpha) * std::exp(gt);
  const double half_width =
      std::max(radius + 4.5, center + 6.0 / std::sqrt(decay));
  auto f = [&](cplx beta) -> cplx {
    return std::exp(-(2.0 / T) * std::norm(alpha - beta * std::exp(-gt))) *
           w0(beta);
  };
  const cplx val =
      (2.0 / T) / kPi * integrate_plane(f, half_width, tol * 0.1);
  return checked_real(val, "damping_kernel");
}

// ---------------------------------------------------------------------------
// WignerGrid

WignerGrid::WignerGrid(Window window, int n_re, int n_im, ChannelParams params,
                       std::string source_desc)
    : window_(window),
      n_re_(n_re),
      n_im_(n_im),
      params_(params),
      source_desc_(std::move(source_desc)),
      values_(static_cast<std::size_t>(n_re) * n_im, 0.0) {
  if (n_re < 2 || n_im < 2)
    throw ValidationError("WignerGrid: resolution must be >= 2 per axis");
  if (window.re_max <= window.re_min || window.im_max <= window.im_min)
    throw ValidationError("WignerGrid: empty window");
}

double WignerGrid::re(int i) const {
  return window_.re_min +
         (window_.re_max - window_.re_min) * i / (n_re_ - 1.0);
}

double WignerGrid::im(int j) const {
  return window_.im_min +
         (window_.im_max - window_.im_min) * j / (n_im_ - 1.0);
}

double WignerGrid::min_value() const {
  return *std::min_element(values_.begin(), values_.end());
}

double WignerGrid::integral() const {
  const double dre = (window_.re_max - window_.re_min) / (n_re_ - 1.0);
  const double dim = (window_.im_max - window_.im_min) / (n_im_ - 1.0);
  Kahan acc;
  for (int i = 0; i < n_re_; ++i) {
    const double wi = (i == 0 || i == n_re_ - 1) ? 0.5 : 1.0;
    for (int j = 0; j < n_im_; ++j) {
      const double wj = (j == 0 || j == n_im_ - 1) ? 0.5 : 1.0;
      acc.add(wi * wj * at(i, j));
    }
  }
  return acc.value() * dre * dim;
}

void WignerGrid::save_csv(const std::string& path) const {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open for writing: " + path);
  os << "re_alpha,im_alpha,w\n";
  char buf[128];
  for (int i = 0; i < n_re_; ++i) {
    for (int j = 0; j < n_im_; ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", re(i), im(j),
                    at(i, j));
      os << buf;
    }
  }
  if (!os) throw IoError("write failed: " + path);

  std::ofstream meta(path + ".meta");
  if (!meta) throw IoError("cannot open for writing: " + path + ".meta");
  meta << "source=" << source_desc_ << "\n";
  meta << "chi=" << params_.chi << "\n";
  meta << "gamma=" << params_.gamma << "\n";
  meta << "t=" << params_.t << "\n";
  meta << "re_min=" << window_.re_min << "\nre_max=" << window_.re_max << "\n";
  meta << "im_min=" << window_.im_min << "\nim_max=" << window_.im_max << "\n";
  meta << "n_re=" << n_re_ << "\nn_im=" << n_im_ << "\n";
  meta << "max_series_order=" << max_order_used << "\n";
  meta << "integral_convention=half\n";
}

WignerGrid wigner_grid(const InitialState& source, const ChannelParams& params,
                       Window window, int n_re, int n_im, double tol) {
  WignerGrid grid(window, n_re, n_im, params, describe(source));
  const long total = static_cast<long>(n_re) * n_im;
  int max_order = 0;
  std::string error_msg;
  bool failed = false;
#pragma omp parallel for schedule(dynamic, 64) reduction(max : max_order)
  for (long idx = 0; idx < total; ++idx) {
    const int i = static_cast<int>(idx / n_im);
    const int j = static_cast<int>(idx % n_im);
    try {
      const cplx alpha(grid.re(i), grid.im(j));
      auto r = detail::evolve_point(source, alpha, params, tol);
      grid.at(i, j) = r.value;
      max_order = std::max(max_order, r.order);
    } catch (const std::exception& e) {
#pragma omp critical
      {
        failed = true;
        error_msg = "grid point (" + std::to_string(grid.re(i)) + "," +
                    std::to_string(grid.im(j)) + "): " + e.what();
      }
    }
  }
  if (failed) throw ConvergenceError(error_msg, 0.0, 0.0);
  grid.max_order_used = max_order;
  return grid;
}

}  // namespace kerrwig
