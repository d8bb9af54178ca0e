#include "twocyc/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace twocyc {

Rat rat_from_string(const std::string& s) {
  std::string t;
  t.reserve(s.size());
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  Rat q;
  if (q.set_str(t, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

long double to_long_double(const Int& z) {
  const size_t limbs = mpz_size(z.get_mpz_t());
  long double acc = 0.0L;
  for (size_t i = limbs; i-- > 0;) {
    acc = acc * 18446744073709551616.0L  // 2^64
          + static_cast<long double>(mpz_getlimbn(z.get_mpz_t(), i));
  }
  return sgn(z) < 0 ? -acc : acc;
}

long double to_long_double(const Rat& q) {
  Int num = q.get_num();
  Int den = q.get_den();
  // Keep both operands inside the long double exponent range; the shared
  // shift cancels in the quotient.
  const long nb = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
  const long db = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  const long limit = 15000;
  if (nb > limit || db > limit) {
    const long shift = std::max(nb, db) - limit;
    const long ns = std::min(shift, std::max(0L, nb - 80));
    const long ds = std::min(shift, std::max(0L, db - 80));
    const long common = std::min(ns, ds);
    mpz_tdiv_q_2exp(num.get_mpz_t(), num.get_mpz_t(), common);
    mpz_tdiv_q_2exp(den.get_mpz_t(), den.get_mpz_t(), common);
    if (static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) > limit) return sgn(q) * HUGE_VALL;
    if (static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) > limit) return 0.0L;
  }
  return to_long_double(num) / to_long_double(den);
}

Rat rat_from_long_double(long double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite value");
  if (v == 0.0L) return Rat(0);
  int e = 0;
  long double m = std::frexp(v, &e);  // v = m * 2^e, |m| in [0.5, 1)
  // x86 long double has a 64-bit mantissa; two 32-bit extractions keep this
  // exact on any platform with mantissa <= 64 bits.
  Int mant(0);
  for (int round = 0; round < 2 && m != 0.0L; ++round) {
    m = std::ldexp(m, 32);
    const long double ip = std::trunc(m);
    m -= ip;
    mant <<= 32;
    mant += static_cast<long>(ip);
    e -= 32;
  }
  Rat r(mant);
  if (e > 0)
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
  else if (e < 0)
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
  return r;
}

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_value(const Rat& q) {
  std::size_t h = 0xcbf29ce484222325ULL;
  const mpz_srcptr n = q.get_num().get_mpz_t();
  const mpz_srcptr d = q.get_den().get_mpz_t();
  h = hash_combine(h, static_cast<std::size_t>(mpz_sgn(n)));
  for (size_t i = 0; i < mpz_size(n); ++i)
    h = hash_combine(h, static_cast<std::size_t>(mpz_getlimbn(n, i)));
  for (size_t i = 0; i < mpz_size(d); ++i)
    h = hash_combine(h, static_cast<std::size_t>(mpz_getlimbn(d, i)));
  return h;
}

}  // namespace twocyc
