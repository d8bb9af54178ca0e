#include "twocyc/stability.hpp"

#include <stdexcept>

namespace twocyc {

MapFamily MapFamily::make(int d, int order) {
  if (d < 2) throw std::invalid_argument("family degree must be >= 2");
  if (order < d) order = d;
  RingPtr ring = Ring::coefficients(d);
  TruncSeries f(ring, order);
  f.set_coeff(1, MultiPoly::constant(ring, Rat(-1)));
  for (int j = 2; j <= d; ++j) f.set_coeff(j, MultiPoly::variable(ring, j - 2));
  return MapFamily{d, ring, std::move(f)};
}

const MultiPoly& ConstantsTable::w(int j) const {
  auto it = W.find(j);
  if (it == W.end()) throw std::out_of_range("W_" + std::to_string(j) + " not computed");
  return it->second;
}

const MultiPoly& ConstantsTable::v(int k) const {
  auto it = V.find(k);
  if (it == V.end()) throw std::out_of_range("V_" + std::to_string(k) + " not computed");
  return it->second;
}

ConstantsTable stability_constants(int d, int jmax) {
  if (d < 2) throw std::invalid_argument("family degree must be >= 2");
  if (jmax < 0) jmax = d * d;
  if (jmax > d * d) jmax = d * d;  // all higher coefficients vanish identically
  const int order = std::max(jmax, 3);

  MapFamily fam = MapFamily::make(d, order);
  const TruncSeries ff = series_compose(fam.series, fam.series, order);

  ConstantsTable table;
  table.degree = d;
  table.ring = fam.ring;
  for (int j = 3; j <= jmax; ++j) table.W.emplace(j, ff.coeff(j));
  return table;
}

void reduce_constants(ConstantsTable& table, int kmax, const GroebnerOptions& opts) {
  if (table.W.empty()) throw std::invalid_argument("W table is empty");
  const int jmax = table.W.rbegin()->first;
  if (kmax > jmax)
    throw std::invalid_argument("kmax exceeds computed W table");

  GroebnerBasis basis;  // basis of <W_3, ..., W_{k-1}>, grown incrementally
  bool basis_started = false;
  for (int k = 3; k <= kmax; ++k) {
    const MultiPoly& wk = table.w(k);
    if (k % 2 == 1 && !table.V.count(k)) {
      table.basis_below.emplace(k, basis);
      table.V.emplace(k, basis_started ? basis.normal_form(wk) : wk);
    }
    if (k < kmax) {
      if (!basis_started) {
        basis = GroebnerBasis::compute({wk}, opts);
        basis_started = true;
      } else if (!basis.contains(wk)) {
        basis = basis.extended_with({wk}, opts);
      } else {
        basis = basis.with_source_appended(wk);
      }
    }
  }
}

ConstantsTable constants_table(int d, int kmax, const GroebnerOptions& opts) {
  ConstantsTable table = stability_constants(d, std::max(kmax, 3));
  reduce_constants(table, std::min(kmax, d * d), opts);
  return table;
}

bool quasi_weight_check(const MultiPoly& p, int j) {
  if (p.is_zero()) return true;
  const uint64_t target = static_cast<uint64_t>(j) - 1;
  for (const Term& t : p.terms())
    if (t.mon.weighted_degree() != target) return false;
  return true;
}

WeakPointResult weak_point_order(const std::vector<QuadExt>& point, int d,
                                 const GroebnerOptions&) {
  if (static_cast<int>(point.size()) != d - 1)
    throw std::invalid_argument("point must have d-1 entries (a2..ad)");

  // When W_3(a) = ... = W_{k-1}(a) = 0, every member of <W_3,...,W_{k-1}>
  // vanishes at a, so V_k(a) = W_k(a): scanning the W's gives the reduced
  // constants' values without any basis computation. The table is grown
  // lazily since most points stop early.
  const int jmax = d * d;
  WeakPointResult res;
  int scanned = 2;
  for (int cap = std::min(jmax, 2 * d + 3); scanned < jmax;
       cap = std::min(jmax, 2 * cap)) {
    const ConstantsTable table = stability_constants(d, cap);
    for (int j = scanned + 1; j <= cap; ++j) {
      const QuadExt value = table.w(j).evaluate(point);
      if (!value.is_zero()) {
        if (j % 2 == 0)
          throw std::logic_error("first nonvanishing stability constant has even order");
        res.first_nonzero_k = j;
        res.order = (j - 3) / 2;  // j = 2m+1 -> weak point of order m-1
        res.value = value;
        return res;
      }
    }
    scanned = cap;
  }
  res.all_vanish = true;
  return res;
}

}  // namespace twocyc
