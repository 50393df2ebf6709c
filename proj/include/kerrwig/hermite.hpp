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

#ifndef KERRWIG_HERMITE_HPP
#define KERRWIG_HERMITE_HPP

#include <complex>
#include <vector>

namespace kerrwig {

using cplx = std::complex<double>;

/// Two-variable Hermite polynomial H_{m,n}(x,y), defined by the generating
/// function exp(-t t' + x t + y t'). Evaluated by the two-index recurrence
///   H_{m,n} = y H_{m,n-1} - m H_{m-1,n-1},  H_{m,0} = x^m.
/// Throws OverflowError when intermediates leave the representable range;
/// use hermite2_scaled for large orders.
cplx hermite2(int m, int n, cplx x, cplx y);

/// Factorial-normalized variant h_{m,n} = H_{m,n}(x,y) / sqrt(m! n!).
/// All intermediates stay bounded for orders well beyond where the unscaled
/// recurrence overflows.
cplx hermite2_scaled(int m, int n, cplx x, cplx y);

/// Laguerre polynomial L_n(u) by the standard three-term recurrence.
/// Diagonal relation: L_n(xy) = (-1)^n / n! * H_{n,n}(x,y).
cplx laguerre(int n, cplx u);

/// Closed form of the diagonal sum  sum_l z^l/l! H_{m+l,n+l}(x,y)
///   = exp(z x y/(z+1)) / (z+1)^{(m+n+2)/2} * H_{m,n}(x/sqrt(z+1), y/sqrt(z+1)).
/// Requires Re(z+1) > 0 (principal branch of the square root); throws
/// DomainError otherwise.
cplx hermite_diagonal_sum(cplx z, int m, int n, cplx x, cplx y);

/// Closed form of the bilinear sum
///   sum_{m,n} s^m t^n/(m! n!) H_{m,n}(x,y) H_{m,n}(a,b)
///   = 1/(1-st) * exp[(s x a + t y b - (x y + a b) s t)/(1 - s t)].
/// Requires |s t| < 1; throws DomainError otherwise.
cplx hermite_bilinear_sum(cplx s, cplx t, cplx x, cplx y, cplx a, cplx b);

/// Dense table of H_{m,n}(x,y) for all 0 <= m,n <= max_order, filled once by
/// recurrence and immutable afterwards. Scaled tables hold H_{m,n}/sqrt(m!n!).
class HermiteTable {
 public:
  HermiteTable(int max_order, cplx x, cplx y, bool scaled = true);

  cplx operator()(int m, int n) const {
    return values_[static_cast<std::size_t>(m) * stride_ + n];
  }

  int max_order() const { return order_; }
  bool scaled() const { return scaled_; }
  cplx x() const { return x_; }
  cplx y() const { return y_; }

 private:
  int order_;
  std::size_t stride_;
  bool scaled_;
  cplx x_, y_;
  std::vector<cplx> values_;
};

}  // namespace kerrwig

#endif  // KERRWIG_HERMITE_HPP
