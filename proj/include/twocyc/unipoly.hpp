#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "twocyc/multipoly.hpp"
#include "twocyc/rational.hpp"

namespace twocyc {

inline bool coeff_is_zero(const Rat& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const MultiPoly& c) { return c.is_zero(); }
inline Rat coeff_divexact(const Rat& a, const Rat& b) { return a / b; }
MultiPoly coeff_divexact(const MultiPoly& a, const MultiPoly& b);

// Dense univariate polynomial; coefficients ascending, no trailing zeros.
// The zero polynomial has an empty coefficient vector (degree -1).
template <class C>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly constant(C v) { return UniPoly(std::vector<C>{std::move(v)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<C>& coeffs() const { return c_; }
  const C& operator[](size_t i) const { return c_[i]; }
  const C& lead() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  UniPoly operator+(const UniPoly& o) const {
    std::vector<C> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
      if (i < c_.size() && i < o.c_.size())
        r[i] = c_[i] + o.c_[i];
      else if (i < c_.size())
        r[i] = c_[i];
      else
        r[i] = o.c_[i];
    }
    return UniPoly(std::move(r));
  }
  UniPoly operator-() const {
    std::vector<C> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return UniPoly(std::move(r));
  }
  UniPoly operator-(const UniPoly& o) const { return *this + (-o); }
  UniPoly operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<C> r(c_.size() + o.c_.size() - 1, c_[0] - c_[0]);  // zeros of C
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return UniPoly(std::move(r));
  }
  UniPoly scale(const C& s) const {
    std::vector<C> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return UniPoly(std::move(r));
  }
  UniPoly shift_up(int k) const {  // multiply by x^k
    if (is_zero()) return UniPoly();
    std::vector<C> r;
    r.reserve(c_.size() + static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) r.push_back(c_[0] - c_[0]);
    for (const C& v : c_) r.push_back(v);
    return UniPoly(std::move(r));
  }

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  template <class V>
  V eval(const V& x) const {
    if (is_zero()) return V(0);
    V acc = V(c_.back());
    for (size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + V(c_[i]);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<C> c_;
};

using RatPoly = UniPoly<Rat>;

RatPoly unipoly_from_string(const std::string& text);  // "c0 c1 ..." or "x^2 - 2"
std::string unipoly_to_string(const RatPoly& p);

RatPoly derivative(const RatPoly& p);
// Quotient and remainder over the rational field.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly divexact(const RatPoly& a, const RatPoly& b);
// Monic gcd.
RatPoly gcd(RatPoly a, RatPoly b);
RatPoly squarefree_part(const RatPoly& p);
RatPoly compose(const RatPoly& outer, const RatPoly& inner);

long double eval_ld(const RatPoly& p, long double x);

// Exact count of distinct real roots (whole line / open interval). Non
// squarefree input is replaced by its squarefree part.
int sturm_count(const RatPoly& p);
int sturm_count(const RatPoly& p, const Rat& lo, const Rat& hi);

// Upper bound on root magnitudes (Cauchy bound).
Rat cauchy_root_bound(const RatPoly& p);

struct RootInterval {
  Rat lo, hi;  // lo == hi marks an exact rational root
};

// Disjoint intervals, one distinct real root each, refined until
// hi - lo <= width (degenerate intervals are exact roots).
std::vector<RootInterval> isolate_roots(const RatPoly& p, const Rat& width);

// Resultant via the subresultant polynomial remainder sequence; works over
// Rat and over MultiPoly coefficients (exact division only).
template <class C>
C resultant(UniPoly<C> a, UniPoly<C> b);

namespace detail {

template <class C>
C ring_pow(const C& base, int n, const C& one) {
  C acc = one;
  for (int i = 0; i < n; ++i) acc = acc * base;
  return acc;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a == q*b + r with
// deg r < deg b.
template <class C>
UniPoly<C> pseudo_rem(const UniPoly<C>& a, const UniPoly<C>& b) {
  UniPoly<C> r = a;
  const C& lb = b.lead();
  int e = a.degree() - b.degree() + 1;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const UniPoly<C> sub = b.shift_up(r.degree() - b.degree()).scale(r.lead());
    r = r.scale(lb) - sub;
    --e;
  }
  UniPoly<C> out = r;
  for (int i = 0; i < e; ++i) out = out.scale(lb);
  return out;
}

}  // namespace detail

template <class C>
C resultant(UniPoly<C> a, UniPoly<C> b) {
  if (a.is_zero() || b.is_zero())
    throw std::invalid_argument("resultant of the zero polynomial");
  const C one = coeff_divexact(a.lead(), a.lead());
  bool negate = false;
  if (a.degree() < b.degree()) {
    if ((a.degree() & 1) && (b.degree() & 1)) negate = true;
    std::swap(a, b);
  }
  if (b.degree() == 0) {
    C r = detail::ring_pow(b.lead(), a.degree(), one);
    return negate ? -r : r;
  }

  C g = one, h = one;
  for (;;) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) negate = !negate;
    UniPoly<C> r = detail::pseudo_rem(a, b);
    a = b;
    if (r.is_zero()) return one - one;  // common factor of positive degree
    // divide r by g*h^delta, exactly
    const C divisor = g * detail::ring_pow(h, delta, one);
    std::vector<C> rc = r.coeffs();
    for (C& v : rc) v = coeff_divexact(v, divisor);
    b = UniPoly<C>(std::move(rc));
    g = a.lead();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = coeff_divexact(detail::ring_pow(g, delta, one),
                         detail::ring_pow(h, delta - 1, one));
    }
    if (b.degree() == 0) {
      const int da = a.degree();
      C num = detail::ring_pow(b.lead(), da, one);
      C res = da <= 1 ? num : coeff_divexact(num, detail::ring_pow(h, da - 1, one));
      return negate ? -res : res;
    }
  }
}

}  // namespace twocyc
