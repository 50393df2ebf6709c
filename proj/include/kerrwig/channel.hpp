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

#ifndef KERRWIG_CHANNEL_HPP
#define KERRWIG_CHANNEL_HPP

#include <Eigen/Dense>
#include <complex>
#include <iosfwd>
#include <string>
#include <utility>

namespace kerrwig {

using cplx = std::complex<double>;

/// Physical triple defining the Kerr+loss channel. Only the dimensionless
/// products chi*t and gamma*t matter for the evolution.
struct ChannelParams {
  double chi = 0.0;    ///< Kerr coupling, inverse time.
  double gamma = 0.0;  ///< decay rate, inverse time, >= 0.
  double t = 0.0;      ///< evolution time, >= 0.

  void validate() const;
};

/// Complex damping coefficient
///   Lambda_{m,n} = gamma (1 - e^{-2t(gamma + i chi (m-n))}) / (gamma + i chi (m-n)).
/// The degenerate case gamma = 0 returns the continuity limit 0.
cplx lambda_coeff(int m, int n, const ChannelParams& params);

/// Truncated Fock-basis density matrix, entry (m,n) = <m|rho|n>.
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd data);

  static DensityMatrix vacuum(int n_cut);
  /// Fock projector |s><s|.
  static DensityMatrix fock(int s, int n_cut = 0);
  /// Coherent projector |z><z|. When n_cut == 0 the truncation is raised
  /// until the Poisson tail beyond it is below tail_tol.
  static DensityMatrix coherent(cplx z, int n_cut = 0, double tail_tol = 1e-12);

  int n_cut() const { return static_cast<int>(data_.rows()); }
  const Eigen::MatrixXcd& data() const { return data_; }
  cplx operator()(int m, int n) const { return data_(m, n); }

  double trace() const { return data_.trace().real(); }
  double hermiticity_defect() const;
  double min_eigenvalue() const;

  /// Hermiticity / trace / positivity checks per the stated tolerances.
  /// trunc_tail is the declared mass allowed to sit beyond the truncation.
  void validate(double trunc_tail = 1e-9) const;

  /// Text format `fock-density v1 N=<n>` + N^2 lines `m n re im`,
  /// round-trip exact at 17 significant digits.
  void save(std::ostream& os) const;
  void save_file(const std::string& path) const;
  static DensityMatrix load(std::istream& is);
  static DensityMatrix load_file(const std::string& path);

 private:
  Eigen::MatrixXcd data_;
};

/// Cached Lambda_{m,n} for m,n < n_cut. Immutable once built.
class LambdaTable {
 public:
  LambdaTable(int n_cut, const ChannelParams& params);

  cplx operator()(int m, int n) const { return values_(m, n); }
  int n_cut() const { return static_cast<int>(values_.rows()); }
  const ChannelParams& params() const { return params_; }

 private:
  ChannelParams params_;
  Eigen::MatrixXcd values_;
};

/// Closed-form channel action,
///   rho(t)_{mn} = e^{-i chi t (m^2-n^2) - gamma t (m+n)}
///                 * sum_l Lambda^l/l! sqrt((m+l)!(n+l)!/(m!n!)) rho0_{m+l,n+l}.
/// l_max < 0 selects the natural cutoff n_cut-1, which makes the sum exact on
/// the truncated space. A smaller l_max throws TruncationError when the
/// estimated tail exceeds tail_tol.
DensityMatrix evolve_density(const DensityMatrix& rho0,
                             const ChannelParams& params, int l_max = -1,
                             double tail_tol = 1e-12);

/// Matrix representations of the generalized Kraus pair (M_{m,n,l}, Mdag_{m,n,l})
/// with M = sqrt(Lambda^l/l!) e^{-i chi t m^2 - gamma t m} |m><m| a^l and Mdag
/// chosen so that sum_{m,n,l} M rho Mdag reproduces evolve_density term by term.
std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> kraus_pair(
    int m, int n, int l, const ChannelParams& params, int n_cut);

/// Max-norm of (sum_{m,n,l} Mdag M - I) restricted to the leading sub-block of
/// dimension n_cut - l_max, the region insulated from truncation.
double normalization_defect(const ChannelParams& params, int n_cut, int l_max);

}  // namespace kerrwig

#endif  // KERRWIG_CHANNEL_HPP
