#include "twocyc/ring.hpp"

#include <algorithm>
#include <stdexcept>

#include "twocyc/rational.hpp"

namespace twocyc {

Ring::Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {
  if (static_cast<int>(vars_.size()) > kMaxVars)
    throw std::invalid_argument("ring exceeds " + std::to_string(kMaxVars) +
                                " variables");
}

RingPtr Ring::coefficients(int d, const std::string& prefix) {
  std::vector<std::string> vars;
  for (int j = 2; j <= d; ++j) vars.push_back(prefix + std::to_string(j));
  return std::make_shared<Ring>(std::move(vars));
}

int Ring::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return -1;
  return static_cast<int>(it - vars_.begin());
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same(*b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw std::invalid_argument("ring mismatch");
}

Monomial::Monomial(int nvars) : nvars_(static_cast<int16_t>(nvars)) {
  if (nvars < 0 || nvars > Ring::kMaxVars)
    throw std::invalid_argument("bad variable count");
}

Monomial::Monomial(std::initializer_list<uint32_t> exps)
    : Monomial(from_exponents(std::vector<uint32_t>(exps))) {}

Monomial Monomial::from_exponents(const std::vector<uint32_t>& exps) {
  Monomial m(static_cast<int>(exps.size()));
  for (size_t i = 0; i < exps.size(); ++i) {
    m.e_[i] = exps[i];
    m.deg_ += exps[i];
  }
  return m;
}

void Monomial::set_exp(int i, uint32_t v) {
  deg_ -= e_[static_cast<size_t>(i)];
  e_[static_cast<size_t>(i)] = v;
  deg_ += v;
}

uint64_t Monomial::weighted_degree() const {
  uint64_t w = 0;
  for (int i = 0; i < nvars_; ++i)
    w += static_cast<uint64_t>(e_[static_cast<size_t>(i)]) *
         static_cast<uint64_t>(i + 1);
  return w;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (int i = 0; i < nvars_; ++i) r.e_[static_cast<size_t>(i)] += o.e_[static_cast<size_t>(i)];
  r.deg_ += o.deg_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg_ > o.deg_) return false;
  for (int i = 0; i < nvars_; ++i)
    if (e_[static_cast<size_t>(i)] > o.e_[static_cast<size_t>(i)]) return false;
  return true;
}

Monomial Monomial::divide(const Monomial& o) const {
  Monomial r(*this);
  for (int i = 0; i < nvars_; ++i) r.e_[static_cast<size_t>(i)] -= o.e_[static_cast<size_t>(i)];
  r.deg_ -= o.deg_;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  for (int i = 0; i < a.nvars_; ++i) {
    const uint32_t v = std::max(a.e_[static_cast<size_t>(i)], b.e_[static_cast<size_t>(i)]);
    r.e_[static_cast<size_t>(i)] = v;
    r.deg_ += v;
  }
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (int i = 0; i < nvars_; ++i)
    if (e_[static_cast<size_t>(i)] && o.e_[static_cast<size_t>(i)]) return false;
  return true;
}

bool Monomial::operator==(const Monomial& o) const {
  if (nvars_ != o.nvars_ || deg_ != o.deg_) return false;
  for (int i = 0; i < nvars_; ++i)
    if (e_[static_cast<size_t>(i)] != o.e_[static_cast<size_t>(i)]) return false;
  return true;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x811c9dc5u;
  for (int i = 0; i < nvars_; ++i) h = hash_combine(h, e_[static_cast<size_t>(i)]);
  return h;
}

int grevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = a.nvars(); i-- > 0;) {
    const uint32_t ea = a.exp(i), eb = b.exp(i);
    if (ea != eb) return ea > eb ? -1 : 1;
  }
  return 0;
}

}  // namespace twocyc
