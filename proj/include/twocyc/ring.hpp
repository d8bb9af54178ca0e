#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace twocyc {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Ordered list of variable names. The first variable has the highest
// precedence under grevlex; ties between monomials are broken by the
// smallest exponent in the last variables.
class Ring {
 public:
  explicit Ring(std::vector<std::string> vars);

  // Variables a2, a3, ..., ad (empty for d < 2: the constants-only ring).
  static RingPtr coefficients(int d, const std::string& prefix = "a");

  int size() const { return static_cast<int>(vars_.size()); }
  const std::string& var(int i) const { return vars_[static_cast<size_t>(i)]; }
  const std::vector<std::string>& vars() const { return vars_; }
  int index_of(const std::string& name) const;  // -1 when absent

  bool same(const Ring& other) const { return vars_ == other.vars_; }

  static constexpr int kMaxVars = 32;

 private:
  std::vector<std::string> vars_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b);

// Exponent vector with cached total degree. Fixed-capacity storage keeps
// monomials allocation-free inside the Groebner inner loops.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars);
  Monomial(std::initializer_list<uint32_t> exps);
  static Monomial from_exponents(const std::vector<uint32_t>& exps);

  int nvars() const { return nvars_; }
  uint32_t exp(int i) const { return e_[static_cast<size_t>(i)]; }
  void set_exp(int i, uint32_t v);
  uint32_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  // Weighted degree under weights (1, 2, ..., nvars); variable i carries
  // weight i+1, matching weight j-1 for the coefficient a_j.
  uint64_t weighted_degree() const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;      // this | o
  Monomial divide(const Monomial& o) const;   // this / o, assumes o | this
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial& o) const;
  std::size_t hash() const;

 private:
  std::array<uint32_t, Ring::kMaxVars> e_{};
  uint32_t deg_ = 0;
  int16_t nvars_ = 0;
};

// Graded reverse lexicographic comparison: total degree first, ties won by
// the smaller exponent in the last variable where the monomials differ.
// Returns <0, 0, >0 for a < b, a == b, a > b.
int grevlex_cmp(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};
struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_cmp(a, b) < 0;
  }
};
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_cmp(a, b) > 0;
  }
};

}  // namespace twocyc
