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

#ifndef KERRWIG_QUADRATURE_HPP
#define KERRWIG_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <vector>

namespace kerrwig {

using cplx = std::complex<double>;

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Returns the n-point rule, computed once by Newton iteration on the
/// Legendre recurrence and cached for reuse. Thread-safe.
const GaussLegendreRule& gauss_legendre(int n);

/// Tensor Gauss-Legendre integral of f(beta) d^2beta over the square
/// [-half_width, half_width]^2 in the complex beta plane. Nodes per axis are
/// doubled until two successive estimates agree to tol; throws
/// ConvergenceError when max_nodes is reached first.
cplx integrate_plane(const std::function<cplx(cplx)>& f, double half_width,
                     double tol, int max_nodes = 4096);

}  // namespace kerrwig

#endif  // KERRWIG_QUADRATURE_HPP
