#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <vector>

#include "twocyc/multipoly.hpp"

namespace twocyc {

struct GroebnerOptions {
  // Wall-clock budget for one basis computation; exceeding it raises
  // BudgetExceeded rather than returning a wrong or partial answer.
  std::chrono::milliseconds budget{std::chrono::minutes(10)};
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string what, size_t basis_size, size_t pairs_left)
      : std::runtime_error(std::move(what)),
        basis_size(basis_size),
        pairs_left(pairs_left) {}
  size_t basis_size;
  size_t pairs_left;
};

// Reduced Groebner basis under grevlex. Buchberger with the Gebauer-Moeller
// pair criteria and normal selection (smallest lcm first); pair selection and
// reduction order are fixed, so identical input yields an identical basis.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;

  static GroebnerBasis compute(std::vector<MultiPoly> gens,
                               const GroebnerOptions& opts = {});

  // Extends an existing basis by additional generators. Produces the same
  // result as recomputing from basis generators + extras.
  GroebnerBasis extended_with(std::vector<MultiPoly> extra,
                              const GroebnerOptions& opts = {}) const;

  // Records an extra source generator already known to lie in the ideal.
  GroebnerBasis with_source_appended(MultiPoly gen) const;

  const RingPtr& ring() const { return ring_; }
  const std::vector<MultiPoly>& generators() const { return gens_; }
  const std::vector<MultiPoly>& source() const { return source_; }
  bool empty() const { return gens_.empty(); }

  // Remainder of multivariate division by the reduced basis; zero iff the
  // polynomial lies in the ideal. Idempotent.
  MultiPoly normal_form(const MultiPoly& p) const;
  bool contains(const MultiPoly& p) const { return normal_form(p).is_zero(); }

  // Re-checks the S-polynomial criterion on the final basis.
  bool buchberger_criterion_holds(const GroebnerOptions& opts = {}) const;

  bool operator==(const GroebnerBasis& o) const;

 private:
  RingPtr ring_;
  std::vector<MultiPoly> gens_;
  std::vector<MultiPoly> source_;
};

bool ideal_member(const MultiPoly& p, const GroebnerBasis& gb);
bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b);

// Smallest n <= n_max with p^n in the ideal, or nullopt. Powers are reduced
// incrementally, so intermediate objects stay at normal-form size.
std::optional<int> power_member(const MultiPoly& p, const GroebnerBasis& gb,
                                int n_max = 4);

}  // namespace twocyc
