#include "twocyc/quadext.hpp"

#include <cmath>
#include <stdexcept>

namespace twocyc {

QuadExt::QuadExt(Rat p, Rat q, Int D)
    : p_(std::move(p)), q_(std::move(q)), disc_(std::move(D)) {
  if (sgn(q_) != 0) {
    if (sgn(disc_) <= 0) throw std::invalid_argument("discriminant must be positive");
    if (mpz_perfect_square_p(disc_.get_mpz_t()))
      throw std::invalid_argument("discriminant must not be a perfect square");
  }
  normalize();
}

void QuadExt::normalize() {
  if (sgn(q_) == 0) disc_ = 0;
}

Int QuadExt::unify(const QuadExt& a, const QuadExt& b) {
  if (sgn(a.disc_) == 0) return b.disc_;
  if (sgn(b.disc_) == 0) return a.disc_;
  if (a.disc_ != b.disc_)
    throw std::invalid_argument("mixed quadratic discriminants");
  return a.disc_;
}

int QuadExt::sign() const {
  const int sp = sgn(p_), sq = sgn(q_);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Opposite signs: compare p^2 against q^2 D; the larger magnitude wins.
  const Rat lhs = p_ * p_;
  const Rat rhs = q_ * q_ * Rat(disc_);
  const int c = cmp(lhs, rhs);
  if (c == 0) return 0;  // cannot happen for squarefree D, kept for safety
  return c > 0 ? sp : sq;
}

QuadExt QuadExt::operator+(const QuadExt& o) const {
  return QuadExt(p_ + o.p_, q_ + o.q_, unify(*this, o));
}

QuadExt QuadExt::operator-(const QuadExt& o) const {
  return QuadExt(p_ - o.p_, q_ - o.q_, unify(*this, o));
}

QuadExt QuadExt::operator*(const QuadExt& o) const {
  const Int d = unify(*this, o);
  return QuadExt(p_ * o.p_ + q_ * o.q_ * Rat(d), p_ * o.q_ + q_ * o.p_, d);
}

QuadExt QuadExt::operator-() const { return QuadExt(-p_, -q_, disc_); }

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_rational()) return QuadExt(Rat(1) / p_);
  const Rat norm = p_ * p_ - q_ * q_ * Rat(disc_);
  return QuadExt(p_ / norm, -q_ / norm, disc_);
}

QuadExt QuadExt::operator/(const QuadExt& o) const { return *this * o.inverse(); }

bool QuadExt::operator==(const QuadExt& o) const {
  if (p_ != o.p_ || q_ != o.q_) return false;
  if (sgn(q_) == 0) return true;
  return disc_ == o.disc_;
}

long double QuadExt::to_long_double() const {
  long double v = twocyc::to_long_double(p_);
  if (sgn(q_) != 0)
    v += twocyc::to_long_double(q_) * std::sqrt(twocyc::to_long_double(Rat(disc_)));
  return v;
}

}  // namespace twocyc
