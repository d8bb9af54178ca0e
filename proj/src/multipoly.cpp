#include "twocyc/multipoly.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace twocyc {

namespace {

// Threshold (product of term counts) above which multiplication is split
// across threads.
constexpr size_t kParallelWork = 64 * 1024;

using Accum = std::unordered_map<Monomial, Rat, MonomialHash>;

void accumulate_product(const std::vector<Term>& a, size_t lo, size_t hi,
                        const std::vector<Term>& b, Accum& acc) {
  for (size_t i = lo; i < hi; ++i) {
    for (const Term& tb : b) {
      const Monomial m = a[i].mon * tb.mon;
      auto [it, fresh] = acc.try_emplace(m, a[i].coeff);
      if (fresh)
        it->second *= tb.coeff;
      else
        it->second += a[i].coeff * tb.coeff;
    }
  }
}

std::vector<Term> collect(Accum&& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) out.push_back(Term{m, std::move(c)});
  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) {
    return grevlex_cmp(x.mon, y.mon) > 0;
  });
  return out;
}

}  // namespace

MultiPoly MultiPoly::constant(RingPtr ring, Rat c) {
  MultiPoly p(std::move(ring));
  if (sgn(c) != 0)
    p.terms_.push_back(Term{Monomial(p.ring_ ? p.ring_->size() : 0), std::move(c)});
  return p;
}

MultiPoly MultiPoly::variable(RingPtr ring, int index) {
  if (!ring || index < 0 || index >= ring->size())
    throw std::invalid_argument("variable index out of range");
  Monomial m(ring->size());
  m.set_exp(index, 1);
  return from_term(std::move(ring), m, Rat(1));
}

MultiPoly MultiPoly::from_term(RingPtr ring, Monomial m, Rat c) {
  MultiPoly p(std::move(ring));
  if (m.nvars() != (p.ring_ ? p.ring_->size() : 0))
    throw std::invalid_argument("monomial does not fit ring");
  if (sgn(c) != 0) p.terms_.push_back(Term{m, std::move(c)});
  return p;
}

MultiPoly MultiPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
  MultiPoly p(std::move(ring));
  p.sort_and_compress(std::move(terms));
  return p;
}

MultiPoly MultiPoly::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  MultiPoly p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

void MultiPoly::sort_and_compress(std::vector<Term>&& raw) {
  std::sort(raw.begin(), raw.end(), [](const Term& x, const Term& y) {
    return grevlex_cmp(x.mon, y.mon) > 0;
  });
  terms_.clear();
  for (auto& t : raw) {
    if (!terms_.empty() && terms_.back().mon == t.mon)
      terms_.back().coeff += t.coeff;
    else
      terms_.push_back(std::move(t));
    if (!terms_.empty() && sgn(terms_.back().coeff) == 0) terms_.pop_back();
  }
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one());
}

const Term& MultiPoly::leading() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.front();
}

uint32_t MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().mon.degree();
}

Rat MultiPoly::coeff_of(const Monomial& m) const {
  // Terms are sorted descending; binary search.
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return grevlex_cmp(t.mon, key) > 0; });
  if (it != terms_.end() && it->mon == m) return it->coeff;
  return Rat(0);
}

Rat MultiPoly::constant_term() const {
  if (terms_.empty()) return Rat(0);
  const Term& last = terms_.back();
  return last.mon.is_one() ? last.coeff : Rat(0);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  require_same_ring(ring_, o.ring_);
  MultiPoly r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const int c = grevlex_cmp(terms_[i].mon, o.terms_[j].mon);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rat s = terms_[i].coeff + o.terms_[j].coeff;
      if (sgn(s) != 0) r.terms_.push_back(Term{terms_[i].mon, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back(Term{t.mon, -t.coeff});
  return r;
}

MultiPoly MultiPoly::scale(const Rat& c) const {
  if (sgn(c) == 0) return MultiPoly(ring_);
  MultiPoly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back(Term{t.mon, t.coeff * c});
  return r;
}

MultiPoly MultiPoly::mul_term(const Rat& c, const Monomial& m) const {
  if (sgn(c) == 0) return MultiPoly(ring_);
  MultiPoly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back(Term{t.mon * m, t.coeff * c});
  return r;
}

MultiPoly MultiPoly::mul_serial(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a.ring_, b.ring_);
  Accum acc;
  acc.reserve(a.terms_.size() + b.terms_.size());
  accumulate_product(a.terms_, 0, a.terms_.size(), b.terms_, acc);
  MultiPoly r(a.ring_);
  r.terms_ = collect(std::move(acc));
  return r;
}

MultiPoly MultiPoly::mul_parallel(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a.ring_, b.ring_);
  const int threads = omp_get_max_threads();
  const size_t n = a.terms_.size();
  const int chunks = std::max(1, std::min<int>(threads, static_cast<int>(n)));
  std::vector<Accum> parts(static_cast<size_t>(chunks));

#pragma omp parallel for schedule(static) num_threads(chunks)
  for (int k = 0; k < chunks; ++k) {
    const size_t lo = n * static_cast<size_t>(k) / static_cast<size_t>(chunks);
    const size_t hi = n * static_cast<size_t>(k + 1) / static_cast<size_t>(chunks);
    accumulate_product(a.terms_, lo, hi, b.terms_, parts[static_cast<size_t>(k)]);
  }

  // Merge in fixed chunk order; exact addition makes the result independent
  // of the split.
  Accum total = std::move(parts[0]);
  for (size_t k = 1; k < parts.size(); ++k) {
    for (auto& [m, c] : parts[k]) {
      auto [it, fresh] = total.try_emplace(m, c);
      if (!fresh) it->second += c;
    }
  }
  MultiPoly r(a.ring_);
  r.terms_ = collect(std::move(total));
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (is_zero() || o.is_zero()) {
    require_same_ring(ring_, o.ring_);
    return MultiPoly(ring_);
  }
  const size_t work = terms_.size() * o.terms_.size();
  if (work >= kParallelWork && omp_get_max_threads() > 1)
    return mul_parallel(*this, o);
  return mul_serial(*this, o);
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly base = *this;
  MultiPoly result = MultiPoly::constant(ring_, Rat(1));
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::axpy(const MultiPoly& p, const Rat& c, const Monomial& m,
                          const MultiPoly& g) {
  require_same_ring(p.ring_, g.ring_);
  MultiPoly r(p.ring_);
  r.terms_.reserve(p.terms_.size() + g.terms_.size());
  size_t i = 0, j = 0;
  while (i < p.terms_.size() && j < g.terms_.size()) {
    const Monomial gm = g.terms_[j].mon * m;
    const int cmp = grevlex_cmp(p.terms_[i].mon, gm);
    if (cmp > 0) {
      r.terms_.push_back(p.terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back(Term{gm, -c * g.terms_[j].coeff});
      ++j;
    } else {
      Rat s = p.terms_[i].coeff - c * g.terms_[j].coeff;
      if (sgn(s) != 0) r.terms_.push_back(Term{p.terms_[i].mon, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < p.terms_.size(); ++i) r.terms_.push_back(p.terms_[i]);
  for (; j < g.terms_.size(); ++j)
    r.terms_.push_back(Term{g.terms_[j].mon * m, -c * g.terms_[j].coeff});
  return r;
}

MultiPoly MultiPoly::derivative(int var_index) const {
  if (!ring_ || var_index < 0 || var_index >= ring_->size())
    throw std::invalid_argument("derivative variable out of range");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    const uint32_t e = t.mon.exp(var_index);
    if (e == 0) continue;
    Monomial m = t.mon;
    m.set_exp(var_index, e - 1);
    out.push_back(Term{m, t.coeff * Rat(e)});
  }
  MultiPoly r(ring_);
  r.sort_and_compress(std::move(out));
  return r;
}

MultiPoly MultiPoly::extend_to(const RingPtr& bigger) const {
  if (!bigger || bigger->size() < (ring_ ? ring_->size() : 0))
    throw std::invalid_argument("target ring too small");
  const int nsmall = ring_ ? ring_->size() : 0;
  for (int i = 0; i < nsmall; ++i)
    if (bigger->var(i) != ring_->var(i))
      throw std::invalid_argument("target ring is not an extension");
  MultiPoly r(bigger);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    Monomial m(bigger->size());
    for (int i = 0; i < nsmall; ++i) m.set_exp(i, t.mon.exp(i));
    r.terms_.push_back(Term{m, t.coeff});
  }
  // Appending zero exponents preserves grevlex order: the trailing positions
  // tie, and the scan falls through to the original comparison.
  return r;
}

MultiPoly MultiPoly::restrict_to(const RingPtr& smaller) const {
  const int nsmall = smaller ? smaller->size() : 0;
  if (!ring_ || nsmall > ring_->size())
    throw std::invalid_argument("target ring too large");
  for (int i = 0; i < nsmall; ++i)
    if (smaller->var(i) != ring_->var(i))
      throw std::invalid_argument("target ring is not a prefix");
  std::vector<Term> out;
  for (const Term& t : terms_) {
    bool drop = false;
    for (int i = nsmall; i < ring_->size() && !drop; ++i)
      if (t.mon.exp(i) != 0) drop = true;
    if (drop) continue;
    Monomial m(nsmall);
    for (int i = 0; i < nsmall; ++i) m.set_exp(i, t.mon.exp(i));
    out.push_back(Term{m, t.coeff});
  }
  MultiPoly r(smaller);
  r.sort_and_compress(std::move(out));
  return r;
}

Rat MultiPoly::content() const {
  Int num(0), den(1);
  for (const Term& t : terms_) {
    Int n = t.coeff.get_num();
    mpz_abs(n.get_mpz_t(), n.get_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den().get_mpz_t());
  }
  if (sgn(num) == 0) return Rat(0);
  Rat c(num, den);
  c.canonicalize();
  return c;
}

MultiPoly MultiPoly::normalized_integer() const {
  if (terms_.empty()) return *this;
  Rat c = content();
  if (sgn(leading_coeff()) < 0) c = -c;
  MultiPoly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back(Term{t.mon, t.coeff / c});
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mon == o.terms_[i].mon) || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

std::size_t MultiPoly::hash() const {
  std::size_t h = 0x9dc5bb21u;
  for (const Term& t : terms_) {
    h = hash_combine(h, t.mon.hash());
    h = hash_combine(h, hash_value(t.coeff));
  }
  return h;
}

}  // namespace twocyc
