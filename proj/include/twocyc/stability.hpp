#pragma once

#include <map>
#include <vector>

#include "twocyc/groebner.hpp"
#include "twocyc/quadext.hpp"
#include "twocyc/series.hpp"

namespace twocyc {

// The family f_a(x) = -x + a_2 x^2 + ... + a_d x^d over the ring a2..ad.
struct MapFamily {
  int degree;
  RingPtr ring;
  TruncSeries series;  // truncated at the requested order (at most d^2)

  static MapFamily make(int d, int order);
};

// Stability constants W_j (coefficients of x^j in f(f(x)) - x) and their
// grevlex normal forms V_k with respect to the ideal of all previous W's.
struct ConstantsTable {
  int degree = 0;
  RingPtr ring;
  std::map<int, MultiPoly> W;              // j -> W_j, 3 <= j
  std::map<int, MultiPoly> V;              // odd k -> V_k
  std::map<int, GroebnerBasis> basis_below;  // k -> basis of <W_3 .. W_{k-1}>

  const MultiPoly& w(int j) const;
  const MultiPoly& v(int k) const;
};

// W_j for 3 <= j <= jmax (jmax defaults to d^2, the complete expansion).
ConstantsTable stability_constants(int d, int jmax = -1);

// Fills V_k for odd k <= kmax, reducing each W_k by the basis of
// <W_3, ..., W_{k-1}> (both parities, as in the definition).
void reduce_constants(ConstantsTable& table, int kmax,
                      const GroebnerOptions& opts = {});

ConstantsTable constants_table(int d, int kmax, const GroebnerOptions& opts = {});

// True iff every monomial of p has weighted degree j-1 under weights
// (1, 2, ..., d-1) on (a2, ..., ad).
bool quasi_weight_check(const MultiPoly& p, int j);

struct WeakPointResult {
  bool all_vanish = false;  // involution candidate: no conclusion drawn
  int first_nonzero_k = 0;  // odd index of the first nonvanishing constant
  int order = -1;           // weak-point order m-1 where 2m+1 = first_nonzero_k
  QuadExt value;            // V_{first_nonzero_k}(point)
};

// Evaluates V_3, V_5, ... at the point (a2, ..., ad) until one is nonzero.
// Constants are scanned up to k <= d^2.
WeakPointResult weak_point_order(const std::vector<QuadExt>& point, int d,
                                 const GroebnerOptions& opts = {});

}  // namespace twocyc
