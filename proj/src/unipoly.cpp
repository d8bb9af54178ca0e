#include "twocyc/unipoly.hpp"

#include <sstream>

#include "twocyc/textio.hpp"

namespace twocyc {

MultiPoly coeff_divexact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  MultiPoly r = a;
  std::vector<Term> quotient;
  while (!r.is_zero()) {
    const Term& lt = r.leading();
    if (!b.leading_monomial().divides(lt.mon))
      throw std::domain_error("inexact polynomial division");
    const Rat c = lt.coeff / b.leading_coeff();
    const Monomial m = lt.mon.divide(b.leading_monomial());
    quotient.push_back(Term{m, c});
    r = MultiPoly::axpy(r, c, m, b);
  }
  return MultiPoly::from_terms(a.ring(), std::move(quotient));
}

RatPoly derivative(const RatPoly& p) {
  if (p.degree() < 1) return RatPoly();
  std::vector<Rat> c(static_cast<size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i)
    c[static_cast<size_t>(i - 1)] = p[static_cast<size_t>(i)] * Rat(i);
  return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<Rat> q(static_cast<size_t>(a.degree() - b.degree() + 1), Rat(0));
  RatPoly r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const Rat c = r.lead() / b.lead();
    const int k = r.degree() - b.degree();
    q[static_cast<size_t>(k)] = c;
    r = r - b.shift_up(k).scale(c);
  }
  return {RatPoly(std::move(q)), r};
}

RatPoly divexact(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact univariate division");
  return q;
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scale(Rat(1) / a.lead());  // monic
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.degree() < 1) return p;
  const RatPoly g = gcd(p, derivative(p));
  if (g.degree() < 1) return p;
  return divexact(p, g);
}

RatPoly compose(const RatPoly& outer, const RatPoly& inner) {
  RatPoly acc;
  for (size_t i = outer.coeffs().size(); i-- > 0;)
    acc = acc * inner + RatPoly::constant(outer[i]);
  return acc;
}

long double eval_ld(const RatPoly& p, long double x) {
  long double acc = 0.0L;
  for (size_t i = p.coeffs().size(); i-- > 0;)
    acc = acc * x + to_long_double(p[i]);
  return acc;
}

RatPoly unipoly_from_string(const std::string& text) {
  // symbolic form if an 'x' appears, otherwise whitespace-separated
  // coefficients c0 c1 ... cn
  if (text.find('x') != std::string::npos) {
    const RingPtr ring = std::make_shared<Ring>(std::vector<std::string>{"x"});
    const MultiPoly p = parse_poly(text, ring);
    std::vector<Rat> c(static_cast<size_t>(p.total_degree()) + 1, Rat(0));
    for (const Term& t : p.terms()) c[t.mon.exp(0)] = t.coeff;
    return RatPoly(std::move(c));
  }
  std::istringstream is(text);
  std::vector<Rat> c;
  std::string tok;
  while (is >> tok) {
    if (tok.empty() || tok[0] == '#') break;
    c.push_back(rat_from_string(tok));
  }
  return RatPoly(std::move(c));
}

std::string unipoly_to_string(const RatPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rat& c = p[static_cast<size_t>(i)];
    if (sgn(c) == 0) continue;
    Rat a = abs(c);
    if (out.empty())
      out += sgn(c) < 0 ? "-" : "";
    else
      out += sgn(c) < 0 ? " - " : " + ";
    const bool unit = a == 1 && i > 0;
    if (!unit) out += rat_to_string(a);
    if (i > 0) {
      if (!unit) out += "*";
      out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return out;
}

namespace {

int sign_at(const RatPoly& p, const Rat& x) { return sgn(p.eval(x)); }

// Sign of p at -infinity / +infinity.
int sign_at_neg_inf(const RatPoly& p) {
  if (p.is_zero()) return 0;
  const int s = sgn(p.lead());
  return (p.degree() % 2 == 0) ? s : -s;
}
int sign_at_pos_inf(const RatPoly& p) { return p.is_zero() ? 0 : sgn(p.lead()); }

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
  std::vector<RatPoly> chain;
  chain.push_back(p);
  chain.push_back(derivative(p));
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    RatPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    // scaling by a positive constant preserves all signs
    chain.push_back((-r).scale(Rat(1) / abs(r.lead())));
  }
  return chain;
}

template <class SignF>
int variations(const std::vector<RatPoly>& chain, SignF&& sign_of) {
  int var = 0, prev = 0;
  for (const RatPoly& q : chain) {
    const int s = sign_of(q);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

// Remove the factor (x - r)^k exactly.
RatPoly deflate_at(RatPoly p, const Rat& r) {
  const RatPoly lin({-r, Rat(1)});
  while (!p.is_zero() && sgn(p.eval(r)) == 0) p = divexact(p, lin);
  return p;
}

}  // namespace

int sturm_count(const RatPoly& p) {
  if (p.degree() < 1) return 0;
  const RatPoly sf = squarefree_part(p);
  const auto chain = sturm_chain(sf);
  return variations(chain, sign_at_neg_inf) - variations(chain, sign_at_pos_inf);
}

int sturm_count(const RatPoly& p, const Rat& lo, const Rat& hi) {
  if (cmp(lo, hi) >= 0) return 0;
  if (p.degree() < 1) return 0;
  RatPoly sf = squarefree_part(p);
  // The open interval excludes endpoint roots; deflating them keeps the
  // interior count and makes the classical variation formula applicable.
  sf = deflate_at(std::move(sf), lo);
  sf = deflate_at(std::move(sf), hi);
  if (sf.degree() < 1) return 0;
  const auto chain = sturm_chain(sf);
  const int vlo = variations(chain, [&](const RatPoly& q) { return sign_at(q, lo); });
  const int vhi = variations(chain, [&](const RatPoly& q) { return sign_at(q, hi); });
  return vlo - vhi;
}

Rat cauchy_root_bound(const RatPoly& p) {
  if (p.degree() < 1) return Rat(1);
  Rat m(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rat a = abs(p[static_cast<size_t>(i)]);
    if (cmp(a, m) > 0) m = a;
  }
  return Rat(1) + m / abs(p.lead());
}

namespace {

void isolate_rec(const RatPoly& sf, const Rat& lo, const Rat& hi, int count,
                 std::vector<RootInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back(RootInterval{lo, hi});
    return;
  }
  const Rat mid = (lo + hi) / 2;
  if (sgn(sf.eval(mid)) == 0) {
    out.push_back(RootInterval{mid, mid});
    const RatPoly rest = deflate_at(sf, mid);
    isolate_rec(rest, lo, mid, sturm_count(rest, lo, mid), out);
    isolate_rec(rest, mid, hi, sturm_count(rest, mid, hi), out);
    return;
  }
  isolate_rec(sf, lo, mid, sturm_count(sf, lo, mid), out);
  isolate_rec(sf, mid, hi, sturm_count(sf, mid, hi), out);
}

}  // namespace

std::vector<RootInterval> isolate_roots(const RatPoly& p, const Rat& width) {
  std::vector<RootInterval> out;
  if (p.is_zero()) throw std::invalid_argument("cannot isolate roots of the zero polynomial");
  if (p.degree() < 1) return out;
  const RatPoly sf = squarefree_part(p);
  const Rat bound = cauchy_root_bound(sf);
  const Rat neg_bound = -bound;
  RatPoly body = deflate_at(sf, neg_bound);
  body = deflate_at(std::move(body), bound);
  if (sgn(sf.eval(neg_bound)) == 0) out.push_back(RootInterval{neg_bound, neg_bound});
  if (sgn(sf.eval(bound)) == 0) out.push_back(RootInterval{bound, bound});
  isolate_rec(body, neg_bound, bound, sturm_count(body, neg_bound, bound), out);

  // Refine: inside an isolating interval the squarefree part changes sign.
  for (RootInterval& iv : out) {
    if (iv.lo == iv.hi) continue;
    Rat lo = iv.lo, hi = iv.hi;
    int slo = sign_at(sf, lo);
    while (cmp(hi - lo, width) > 0) {
      const Rat mid = (lo + hi) / 2;
      const int smid = sign_at(sf, mid);
      if (smid == 0) {
        lo = hi = mid;
        break;
      }
      if (smid == slo)
        lo = mid;
      else
        hi = mid;
    }
    iv.lo = lo;
    iv.hi = hi;
  }
  std::sort(out.begin(), out.end(),
            [](const RootInterval& a, const RootInterval& b) { return cmp(a.lo, b.lo) < 0; });
  return out;
}

}  // namespace twocyc
