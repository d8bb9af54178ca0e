#pragma once

#include <vector>

#include "twocyc/multipoly.hpp"

namespace twocyc {

// Truncated power series c_1 x + c_2 x^2 + ... + c_N x^N with MultiPoly
// coefficients. There is no constant term: every series here fixes 0.
class TruncSeries {
 public:
  TruncSeries(RingPtr ring, int order);

  const RingPtr& ring() const { return ring_; }
  int order() const { return order_; }

  // j in [1, order]
  const MultiPoly& coeff(int j) const;
  void set_coeff(int j, MultiPoly c);

  TruncSeries truncated(int new_order) const;

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator-() const;
  TruncSeries operator*(const TruncSeries& o) const;  // truncated product
  TruncSeries scale(const Rat& c) const;

  bool operator==(const TruncSeries& o) const;

  std::string str() const;  // "x + (poly)*x^3 + ..."

 private:
  RingPtr ring_;
  int order_;
  std::vector<MultiPoly> coeff_;  // coeff_[j-1] is the x^j coefficient
};

// Taylor coefficients of outer(inner(x)) through x^N. Inner powers are
// computed incrementally and truncated after every multiplication.
TruncSeries series_compose(const TruncSeries& outer, const TruncSeries& inner,
                           int order);

// Compositional inverse of g = x + sum_{j>=2} g_j x^j, solved coefficient by
// coefficient; g(reverse(g)) = x through x^N.
TruncSeries series_reverse(const TruncSeries& g, int order);

}  // namespace twocyc
