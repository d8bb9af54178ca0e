#include "twocyc/ideal_checks.hpp"

#include <sstream>

namespace twocyc {

namespace {

// Incremental bases of <W_3, ..., W_j> for j = 3 .. d^2.
std::vector<GroebnerBasis> w_ideal_chain(const ConstantsTable& table, int jmax,
                                         const GroebnerOptions& opts) {
  std::vector<GroebnerBasis> chain;  // chain[j-3] = GB(<W3..Wj>)
  GroebnerBasis basis = GroebnerBasis::compute({table.w(3)}, opts);
  chain.push_back(basis);
  for (int j = 4; j <= jmax; ++j) {
    const MultiPoly& wj = table.w(j);
    if (basis.contains(wj))
      basis = basis.with_source_appended(wj);
    else
      basis = basis.extended_with({wj}, opts);
    chain.push_back(basis);
  }
  return chain;
}

}  // namespace

UpperHypothesesResult check_upper_hypotheses(int d, const GroebnerOptions& opts) {
  UpperHypothesesResult res;
  const int jmax = d * d;
  try {
    ConstantsTable table = stability_constants(d);
    reduce_constants(table, jmax % 2 == 1 ? jmax : jmax - 1, opts);

    const auto chain = w_ideal_chain(table, jmax, opts);
    const auto& w_at = [&](int j) -> const GroebnerBasis& { return chain[static_cast<size_t>(j - 3)]; };
    const GroebnerBasis& full = w_at(jmax);

    GroebnerBasis v_basis = GroebnerBasis::compute({table.v(3)}, opts);
    const int m_cap = (jmax - 1) / 2;
    for (int m = 1; m <= m_cap; ++m) {
      // v_basis currently generates <V3, V5, ..., V_{2m+1}>
      if (ideal_equal(v_basis, full)) {
        res.ok = true;
        res.m = m;
        std::ostringstream os;
        os << "<V3,V5,...,V" << 2 * m + 1 << "> = <W3,...,W" << jmax
           << ">; chain verified for k <= " << m - 1;
        res.detail = os.str();
        return res;
      }
      // chain condition at k = m before moving to m+1
      const int k = m;
      if (2 * k + 2 <= jmax) {
        if (!ideal_equal(w_at(2 * k + 1), w_at(2 * k + 2))) {
          res.detail = "ideal <W3..W" + std::to_string(2 * k + 1) +
                       "> != <W3..W" + std::to_string(2 * k + 2) + ">";
          res.verified_through_k = k - 1;
          return res;
        }
        if (!ideal_equal(w_at(2 * k + 1), v_basis)) {
          res.detail = "ideal <W3..W" + std::to_string(2 * k + 1) +
                       "> != <V3,V5,...,V" + std::to_string(2 * k + 1) + ">";
          res.verified_through_k = k - 1;
          return res;
        }
      }
      res.verified_through_k = k;
      if (2 * (m + 1) + 1 <= jmax)
        v_basis = v_basis.extended_with({table.v(2 * (m + 1) + 1)}, opts);
    }
    res.detail = "no m <= " + std::to_string(m_cap) + " closes the chain";
  } catch (const BudgetExceeded& e) {
    res.inconclusive = true;
    res.detail = std::string(e.what()) + " (chain verified through k=" +
                 std::to_string(res.verified_through_k) + ")";
  }
  return res;
}

LradResult check_lrad(int d, int n_max, const GroebnerOptions& opts) {
  LradResult res;
  const int jmax = d * d;
  try {
    ConstantsTable table = stability_constants(d);
    reduce_constants(table, jmax % 2 == 1 ? jmax : jmax - 1, opts);

    GroebnerBasis v_basis;
    const int k_cap = (jmax - 1) / 2;
    for (int k = 1; k <= k_cap; ++k) {
      const MultiPoly& vk = table.v(2 * k + 1);
      v_basis = k == 1 ? GroebnerBasis::compute({vk}, opts)
                       : v_basis.extended_with({vk}, opts);
      std::map<int, int> profile;
      bool all_in = true;
      for (int j = 3; j <= jmax && all_in; ++j) {
        const auto n = power_member(table.w(j), v_basis, n_max);
        if (n)
          profile[j] = *n;
        else
          all_in = false;
      }
      if (all_in) {
        res.ok = true;
        res.ell = k;
        res.exponent_profile = std::move(profile);
        return res;
      }
    }
    res.detail = "no k <= " + std::to_string(k_cap) + " absorbs all W_j^n, n <= " +
                 std::to_string(n_max);
  } catch (const BudgetExceeded& e) {
    res.inconclusive = true;
    res.detail = e.what();
  }
  return res;
}

}  // namespace twocyc
