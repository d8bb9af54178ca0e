#include "twocyc/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace twocyc {

namespace {

using Clock = std::chrono::steady_clock;

struct Pair {
  Monomial lcm;
  size_t i, j;  // i < j
};

struct PairLess {
  bool operator()(const Pair& a, const Pair& b) const {
    const int c = grevlex_cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

MultiPoly reduce_full(const MultiPoly& p, const std::vector<MultiPoly>& basis) {
  MultiPoly work = p;
  std::vector<Term> remainder;
  while (!work.is_zero()) {
    const Term& lt = work.leading();
    const MultiPoly* reducer = nullptr;
    for (const MultiPoly& g : basis) {
      if (!g.is_zero() && g.leading_monomial().divides(lt.mon)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      remainder.push_back(lt);
      std::vector<Term> rest(work.terms().begin() + 1, work.terms().end());
      work = MultiPoly::from_sorted_terms(work.ring(), std::move(rest));
    } else {
      const Rat factor = lt.coeff / reducer->leading_coeff();
      const Monomial shift = lt.mon.divide(reducer->leading_monomial());
      work = MultiPoly::axpy(work, factor, shift, *reducer);
    }
  }
  return MultiPoly::from_sorted_terms(p.ring(), std::move(remainder));
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const Monomial& lcm) {
  const Monomial mf = lcm.divide(f.leading_monomial());
  const Monomial mg = lcm.divide(g.leading_monomial());
  const MultiPoly left = f.mul_term(Rat(1) / f.leading_coeff(), mf);
  return MultiPoly::axpy(left, Rat(1) / g.leading_coeff(), mg, g);
}

class Buchberger {
 public:
  Buchberger(RingPtr ring, const GroebnerOptions& opts)
      : ring_(std::move(ring)), deadline_(Clock::now() + opts.budget) {}

  void add_generator(const MultiPoly& f) {
    const MultiPoly r = reduce_full(f, basis_);
    if (!r.is_zero()) install(r.normalized_integer());
  }

  void run() {
    while (!pairs_.empty()) {
      check_budget();
      const Pair pr = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      const MultiPoly s = s_polynomial(basis_[pr.i], basis_[pr.j], pr.lcm);
      const MultiPoly r = reduce_full(s, basis_);
      if (!r.is_zero()) install(r.normalized_integer());
    }
  }

  std::vector<MultiPoly> reduced_basis() {
    // Minimalize: keep elements whose leading monomial no other kept leading
    // monomial divides.
    std::vector<size_t> order(basis_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      const int c = grevlex_cmp(basis_[a].leading_monomial(), basis_[b].leading_monomial());
      if (c != 0) return c < 0;
      return a < b;
    });
    std::vector<MultiPoly> minimal;
    for (size_t idx : order) {
      const Monomial& lm = basis_[idx].leading_monomial();
      bool divisible = false;
      for (const MultiPoly& kept : minimal)
        if (kept.leading_monomial().divides(lm)) {
          divisible = true;
          break;
        }
      if (!divisible) minimal.push_back(basis_[idx]);
    }
    // Tail-reduce each element against the others.
    std::vector<MultiPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<MultiPoly> others;
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      reduced.push_back(reduce_full(minimal[i], others).normalized_integer());
    }
    std::sort(reduced.begin(), reduced.end(), [](const MultiPoly& a, const MultiPoly& b) {
      return grevlex_cmp(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return reduced;
  }

 private:
  void check_budget() {
    if (Clock::now() > deadline_)
      throw BudgetExceeded("Groebner budget exceeded", basis_.size(), pairs_.size());
  }

  // Gebauer-Moeller update: install a new basis element and refresh the pair
  // set, discarding pairs whose S-polynomials are known to reduce to zero.
  void install(MultiPoly h) {
    const size_t t = basis_.size();
    const Monomial& lmh = h.leading_monomial();

    std::vector<Monomial> lcm_with(t);
    for (size_t i = 0; i < t; ++i)
      lcm_with[i] = Monomial::lcm(basis_[i].leading_monomial(), lmh);

    // Old-pair (chain) criterion.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& pr = *it;
      if (lmh.divides(pr.lcm) && !(lcm_with[pr.i] == pr.lcm) && !(lcm_with[pr.j] == pr.lcm))
        it = pairs_.erase(it);
      else
        ++it;
    }

    // New pairs: group by lcm, keep one representative per class unless some
    // member of the class has a coprime leading-monomial pair; drop classes
    // whose lcm another new lcm properly divides.
    std::map<Monomial, std::vector<size_t>, GrevlexLess> classes;
    for (size_t i = 0; i < t; ++i) classes[lcm_with[i]].push_back(i);
    for (const auto& [lcm, members] : classes) {
      bool coprime_member = false;
      for (size_t i : members)
        if (basis_[i].leading_monomial().coprime(lmh)) {
          coprime_member = true;
          break;
        }
      if (coprime_member) continue;
      bool dominated = false;
      for (const auto& [other, members2] : classes) {
        if (other == lcm) continue;
        if (other.divides(lcm)) {
          dominated = true;
          break;
        }
      }
      if (dominated) continue;
      pairs_.insert(Pair{lcm, members.front(), t});
    }

    basis_.push_back(std::move(h));
  }

  RingPtr ring_;
  Clock::time_point deadline_;
  std::vector<MultiPoly> basis_;
  std::set<Pair, PairLess> pairs_;
};

}  // namespace

GroebnerBasis GroebnerBasis::compute(std::vector<MultiPoly> gens,
                                     const GroebnerOptions& opts) {
  GroebnerBasis out;
  RingPtr ring;
  for (const MultiPoly& g : gens) {
    if (!ring) ring = g.ring();
    require_same_ring(ring, g.ring());
  }
  out.ring_ = ring;
  out.source_ = gens;
  if (!ring) return out;

  Buchberger engine(ring, opts);
  for (const MultiPoly& g : gens)
    if (!g.is_zero()) engine.add_generator(g);
  engine.run();
  out.gens_ = engine.reduced_basis();
  return out;
}

GroebnerBasis GroebnerBasis::extended_with(std::vector<MultiPoly> extra,
                                           const GroebnerOptions& opts) const {
  std::vector<MultiPoly> gens = gens_;
  std::vector<MultiPoly> source = source_;
  for (MultiPoly& e : extra) {
    require_same_ring(ring_, e.ring());
    source.push_back(e);
    gens.push_back(std::move(e));
  }
  GroebnerBasis out = compute(std::move(gens), opts);
  out.source_ = std::move(source);
  return out;
}

GroebnerBasis GroebnerBasis::with_source_appended(MultiPoly gen) const {
  GroebnerBasis out = *this;
  out.source_.push_back(std::move(gen));
  return out;
}

MultiPoly GroebnerBasis::normal_form(const MultiPoly& p) const {
  if (gens_.empty()) return p;
  require_same_ring(ring_, p.ring());
  return reduce_full(p, gens_);
}

bool GroebnerBasis::buchberger_criterion_holds(const GroebnerOptions& opts) const {
  const auto deadline = Clock::now() + opts.budget;
  for (size_t i = 0; i < gens_.size(); ++i) {
    for (size_t j = i + 1; j < gens_.size(); ++j) {
      if (Clock::now() > deadline)
        throw BudgetExceeded("criterion recheck budget exceeded", gens_.size(), 0);
      const Monomial lcm =
          Monomial::lcm(gens_[i].leading_monomial(), gens_[j].leading_monomial());
      const MultiPoly s = s_polynomial(gens_[i], gens_[j], lcm);
      if (!reduce_full(s, gens_).is_zero()) return false;
    }
  }
  return true;
}

bool GroebnerBasis::operator==(const GroebnerBasis& o) const {
  return same_ring(ring_, o.ring_) && gens_ == o.gens_;
}

bool ideal_member(const MultiPoly& p, const GroebnerBasis& gb) {
  return gb.contains(p);
}

bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (!same_ring(a.ring(), b.ring())) return false;
  // Reduced bases are canonical, so equality of generators decides quickly;
  // fall back to mutual membership for robustness.
  if (a.generators() == b.generators()) return true;
  for (const MultiPoly& g : a.generators())
    if (!b.contains(g)) return false;
  for (const MultiPoly& g : b.generators())
    if (!a.contains(g)) return false;
  return true;
}

std::optional<int> power_member(const MultiPoly& p, const GroebnerBasis& gb,
                                int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  MultiPoly reduced = gb.normal_form(p);
  if (reduced.is_zero()) return 1;
  MultiPoly acc = reduced;
  for (int n = 2; n <= n_max; ++n) {
    acc = gb.normal_form(acc * p);
    if (acc.is_zero()) return n;
  }
  return std::nullopt;
}

}  // namespace twocyc
