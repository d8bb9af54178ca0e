#pragma once

#include <string>
#include <vector>

#include "twocyc/quadext.hpp"
#include "twocyc/series.hpp"
#include "twocyc/stability.hpp"

namespace twocyc {

// Verdict record for a cyclicity bound at a parameter point. Lower-bound
// certificates require, all verified in exact arithmetic: V_3 = ... =
// V_{2m-1} = 0, V_{2m+1} != 0 at the point, and a nonzero determinant of the
// gradient matrix.
struct Certificate {
  enum class Kind { lower_bound, upper_bound, weak_point_order };

  Kind kind = Kind::weak_point_order;
  int degree = 0;
  std::vector<QuadExt> point;  // (a2, ..., ad)
  int order = -1;              // weak-point order m-1
  int witness_index = 0;       // 2m+1
  QuadExt witness_value;       // V_{2m+1}(point)

  // matrix[i][j] = d V_{2j+3} / d a_{i+2} at the point (columns are the
  // gradient vectors), empty for order 0.
  std::vector<std::vector<QuadExt>> matrix;
  QuadExt determinant = QuadExt(1);

  std::string proposition;  // which result backs the verdict
  std::string verdict;
  bool certified = false;
};

// Exact partial derivatives with respect to the first nvars ring variables.
std::vector<MultiPoly> gradient(const MultiPoly& p, int nvars);

QuadExt determinant(std::vector<std::vector<QuadExt>> m);

// Gradient-independence certificate at a weak point: order detection, the
// (m-1)x(m-1) matrix of reduced constants, and its exact determinant.
Certificate certify_lower(const std::vector<QuadExt>& point, int d,
                          const GroebnerOptions& opts = {});

// d = 2n, a* = (0,...,0,1): weak point of order d-2 with W_{4n-1}(a*) = -2n;
// the 2n-2 gradient vectors of W_{2k+1} have a single nonzero entry each
// (-2 at position 2k for k < n, -2(k+1) at position 2(k-n)+1 for k >= n).
Certificate even_construction(int n);

// d = 4m+3, f = -x + x^{2m+2} - (m+1) x^{4m+3}: weak point of order d-2,
// f(f(x)) = x + (m+1)(5m+4)(4m+3)/3 x^{8m+5} + O(x^{8m+6}).
Certificate odd_4m3_construction(int m);

// Truncation h_d of the involution g(-g^{-1}(x)) for g = x + sum b_j x^j:
// h_d = -x + sum_{j=2}^d B_j(b) x^j over the ring b2..bd, padded with zero
// coefficients up to `order` (so h_d composes as the polynomial it is).
TruncSeries involution_truncate(int d, int order = -1);

struct RationalFunction {
  MultiPoly num, den;
};

// W_11 of the h_9 family is linear in b7; isolating it yields b7 as a ratio
// of polynomials in b2..b6, b8. Substituting back makes W_11 vanish.
struct SolveB7Result {
  MultiPoly w11;        // W_11(b) for the h_9 family
  MultiPoly b7_coeff;   // dW_11/db7 (free of b7)
  MultiPoly remainder;  // W_11 - b7_coeff * b7
  RationalFunction b7;  // num/den with den integer-primitive, positive lead
};
SolveB7Result solve_b7();

}  // namespace twocyc
