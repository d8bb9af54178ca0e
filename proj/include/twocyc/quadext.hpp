#pragma once

#include <string>

#include "twocyc/rational.hpp"

namespace twocyc {

// Element p + q*sqrt(D) of a real quadratic extension of the rationals.
// D == 0 marks a purely rational value; mixing two different nonzero
// discriminants throws. Sign queries are exact.
class QuadExt {
 public:
  QuadExt() : p_(0), q_(0), disc_(0) {}
  QuadExt(Rat value) : p_(std::move(value)), q_(0), disc_(0) {}  // NOLINT: implicit by design
  QuadExt(int value) : p_(value), q_(0), disc_(0) {}             // NOLINT
  QuadExt(Rat p, Rat q, Int D);

  const Rat& rational_part() const { return p_; }
  const Rat& radical_part() const { return q_; }
  const Int& discriminant() const { return disc_; }

  bool is_rational() const { return sgn(q_) == 0; }
  bool is_zero() const { return sgn(p_) == 0 && sgn(q_) == 0; }
  int sign() const;

  QuadExt operator+(const QuadExt& o) const;
  QuadExt operator-(const QuadExt& o) const;
  QuadExt operator*(const QuadExt& o) const;
  QuadExt operator/(const QuadExt& o) const;
  QuadExt operator-() const;
  QuadExt inverse() const;
  QuadExt conjugate() const { return QuadExt(p_, -q_, disc_); }

  bool operator==(const QuadExt& o) const;
  bool operator!=(const QuadExt& o) const { return !(*this == o); }

  long double to_long_double() const;

 private:
  static Int unify(const QuadExt& a, const QuadExt& b);
  void normalize();

  Rat p_, q_;
  Int disc_;
};

}  // namespace twocyc
