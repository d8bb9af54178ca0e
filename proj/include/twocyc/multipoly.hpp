#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twocyc/rational.hpp"
#include "twocyc/ring.hpp"

namespace twocyc {

struct Term {
  Monomial mon;
  Rat coeff;
};

// Multivariate polynomial over Rat. Terms are kept sorted in descending
// grevlex order with no zero coefficients, so equal polynomials have equal
// term vectors.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MultiPoly zero(RingPtr ring) { return MultiPoly(std::move(ring)); }
  static MultiPoly constant(RingPtr ring, Rat c);
  static MultiPoly variable(RingPtr ring, int index);
  static MultiPoly from_term(RingPtr ring, Monomial m, Rat c);
  static MultiPoly from_terms(RingPtr ring, std::vector<Term> terms);
  // Caller guarantees strict descending grevlex order and nonzero coefficients.
  static MultiPoly from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  size_t term_count() const { return terms_.size(); }

  const Term& leading() const;
  const Monomial& leading_monomial() const { return leading().mon; }
  const Rat& leading_coeff() const { return leading().coeff; }
  uint32_t total_degree() const;

  Rat coeff_of(const Monomial& m) const;
  Rat constant_term() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }

  MultiPoly scale(const Rat& c) const;
  MultiPoly mul_term(const Rat& c, const Monomial& m) const;
  MultiPoly pow(unsigned n) const;

  // p - c * m * g in one sorted merge; the workhorse of division.
  static MultiPoly axpy(const MultiPoly& p, const Rat& c, const Monomial& m,
                        const MultiPoly& g);

  MultiPoly derivative(int var_index) const;

  // Image in a ring whose variable list starts with this ring's variables.
  MultiPoly extend_to(const RingPtr& bigger) const;
  // Set all variables with index >= keep_vars to zero and restrict to the
  // smaller ring.
  MultiPoly restrict_to(const RingPtr& smaller) const;

  template <class Value>
  Value evaluate(const std::vector<Value>& point) const;

  // Content (gcd of coefficients as a positive rational) and the integer
  // normalization used for Groebner generators: content 1, positive leading
  // coefficient.
  Rat content() const;
  MultiPoly normalized_integer() const;

  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }
  std::size_t hash() const;

  // Kernel variants; operator* dispatches on size. Both produce identical
  // output for identical input.
  static MultiPoly mul_serial(const MultiPoly& a, const MultiPoly& b);
  static MultiPoly mul_parallel(const MultiPoly& a, const MultiPoly& b);

 private:
  void sort_and_compress(std::vector<Term>&& raw);

  RingPtr ring_;
  std::vector<Term> terms_;
};

template <class Value>
Value MultiPoly::evaluate(const std::vector<Value>& point) const {
  if (static_cast<int>(point.size()) != (ring_ ? ring_->size() : 0))
    throw std::invalid_argument("evaluation point has wrong dimension");
  Value acc = Value(0);
  for (const Term& t : terms_) {
    Value term = Value(t.coeff);
    for (int i = 0; i < t.mon.nvars(); ++i)
      for (uint32_t k = 0; k < t.mon.exp(i); ++k) term = term * point[static_cast<size_t>(i)];
    acc = acc + term;
  }
  return acc;
}

}  // namespace twocyc
