#include "twocyc/series.hpp"

#include <stdexcept>

#include "twocyc/textio.hpp"

namespace twocyc {

TruncSeries::TruncSeries(RingPtr ring, int order)
    : ring_(std::move(ring)), order_(order) {
  if (order_ < 1) throw std::invalid_argument("series order must be >= 1");
  coeff_.assign(static_cast<size_t>(order_), MultiPoly::zero(ring_));
}

const MultiPoly& TruncSeries::coeff(int j) const {
  if (j < 1 || j > order_) throw std::out_of_range("series coefficient index");
  return coeff_[static_cast<size_t>(j - 1)];
}

void TruncSeries::set_coeff(int j, MultiPoly c) {
  if (j < 1 || j > order_) throw std::out_of_range("series coefficient index");
  require_same_ring(ring_, c.ring());
  coeff_[static_cast<size_t>(j - 1)] = std::move(c);
}

TruncSeries TruncSeries::truncated(int new_order) const {
  if (new_order > order_) throw std::invalid_argument("cannot extend truncation");
  TruncSeries r(ring_, new_order);
  for (int j = 1; j <= new_order; ++j) r.set_coeff(j, coeff(j));
  return r;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  require_same_ring(ring_, o.ring_);
  const int n = std::min(order_, o.order_);
  TruncSeries r(ring_, n);
  for (int j = 1; j <= n; ++j) r.set_coeff(j, coeff(j) + o.coeff(j));
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  return *this + (-o);
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r(ring_, order_);
  for (int j = 1; j <= order_; ++j) r.set_coeff(j, -coeff(j));
  return r;
}

TruncSeries TruncSeries::scale(const Rat& c) const {
  TruncSeries r(ring_, order_);
  for (int j = 1; j <= order_; ++j) r.set_coeff(j, coeff(j).scale(c));
  return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  require_same_ring(ring_, o.ring_);
  const int n = std::min(order_, o.order_);
  TruncSeries r(ring_, n);
  for (int i = 1; i <= n; ++i) {
    if (coeff_[static_cast<size_t>(i - 1)].is_zero()) continue;
    for (int j = 1; i + j <= n; ++j) {
      if (o.coeff_[static_cast<size_t>(j - 1)].is_zero()) continue;
      r.coeff_[static_cast<size_t>(i + j - 1)] +=
          coeff_[static_cast<size_t>(i - 1)] * o.coeff_[static_cast<size_t>(j - 1)];
    }
  }
  return r;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
  if (!same_ring(ring_, o.ring_) || order_ != o.order_) return false;
  for (int j = 1; j <= order_; ++j)
    if (coeff(j) != o.coeff(j)) return false;
  return true;
}

std::string TruncSeries::str() const {
  std::string out;
  for (int j = 1; j <= order_; ++j) {
    const MultiPoly& c = coeff(j);
    if (c.is_zero()) continue;
    const std::string xj = j == 1 ? "x" : "x^" + std::to_string(j);
    if (c.is_constant() && c.constant_term() == 1) {
      out += out.empty() ? xj : " + " + xj;
    } else if (c.is_constant() && c.constant_term() == -1) {
      out += out.empty() ? "-" + xj : " - " + xj;
    } else {
      const std::string body = "(" + twocyc::to_string(c) + ")*" + xj;
      out += out.empty() ? body : " + " + body;
    }
  }
  return out.empty() ? "0" : out;
}

TruncSeries series_compose(const TruncSeries& outer, const TruncSeries& inner,
                           int order) {
  require_same_ring(outer.ring(), inner.ring());
  if (order > outer.order() || order > inner.order())
    throw std::invalid_argument("composition order exceeds input truncation");
  TruncSeries acc(outer.ring(), order);
  TruncSeries power = inner.truncated(order);
  for (int j = 1; j <= order; ++j) {
    const MultiPoly& cj = outer.coeff(j);
    if (!cj.is_zero())
      for (int k = j; k <= order; ++k) acc.set_coeff(k, acc.coeff(k) + cj * power.coeff(k));
    if (j < order) power = power * inner.truncated(order);
  }
  return acc;
}

TruncSeries series_reverse(const TruncSeries& g, int order) {
  if (order > g.order())
    throw std::invalid_argument("reversion order exceeds input truncation");
  const MultiPoly lead = g.coeff(1);
  if (!(lead.is_constant() && lead.constant_term() == 1))
    throw std::invalid_argument("series reversion requires leading coefficient 1");

  const RingPtr& ring = g.ring();
  TruncSeries h(ring, order);
  h.set_coeff(1, MultiPoly::constant(ring, Rat(1)));

  // powers[j] tracks h^j truncated at the coefficients known so far; the
  // x^k coefficient of h^j with j >= 2 only involves h_1..h_{k-1}.
  std::vector<TruncSeries> powers;
  powers.reserve(static_cast<size_t>(order) + 1);
  powers.push_back(TruncSeries(ring, order));  // unused h^0 slot
  powers.push_back(h);

  for (int k = 2; k <= order; ++k) {
    // refresh powers up to k using coefficients h_1..h_{k-1}
    for (int j = 2; j <= k; ++j) {
      if (static_cast<int>(powers.size()) <= j) powers.push_back(powers[static_cast<size_t>(j - 1)] * h);
    }
    MultiPoly rhs = MultiPoly::zero(ring);
    for (int j = 2; j <= k; ++j) {
      const MultiPoly& gj = g.coeff(j);
      if (gj.is_zero()) continue;
      rhs += gj * powers[static_cast<size_t>(j)].coeff(k);
    }
    h.set_coeff(k, -rhs);
    // powers were built from the old h; rebuild lazily next round
    powers.erase(powers.begin() + 2, powers.end());
    powers[1] = h;
  }
  return h;
}

}  // namespace twocyc
