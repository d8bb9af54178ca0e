#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "twocyc/stability.hpp"
#include "twocyc/textio.hpp"

using namespace twocyc;

namespace {

std::mt19937 rng(911);

MultiPoly P(const std::string& s, const RingPtr& r) { return parse_poly(s, r); }

MultiPoly random_poly(const RingPtr& r, int nterms, int max_exp = 3) {
  std::vector<Term> terms;
  std::uniform_int_distribution<uint32_t> e(0, static_cast<uint32_t>(max_exp));
  std::uniform_int_distribution<int> c(-9, 9);
  for (int i = 0; i < nterms; ++i) {
    Monomial m(r->size());
    for (int v = 0; v < r->size(); ++v) m.set_exp(v, e(rng));
    terms.push_back(Term{m, Rat(c(rng))});
  }
  return MultiPoly::from_terms(r, std::move(terms));
}

}  // namespace

TEST_CASE("principal monomial ideal") {
  auto r = Ring::coefficients(3);
  const GroebnerBasis gb = GroebnerBasis::compute({P("a2", r)});
  REQUIRE(gb.generators().size() == 1);
  CHECK(gb.generators()[0] == P("a2", r));
  CHECK(gb.contains(P("a2*a3", r)));
  CHECK_FALSE(gb.contains(P("a3", r)));
}

TEST_CASE("hand elimination: <a2^2 - a3, a3> contains a2^2") {
  auto r = Ring::coefficients(3);
  const GroebnerBasis gb = GroebnerBasis::compute({P("a2^2 - a3", r), P("a3", r)});
  CHECK(gb.contains(P("a2^2", r)));
  CHECK(gb.contains(P("a2^2 - a3", r)));
  CHECK_FALSE(gb.contains(P("a2", r)));
}

TEST_CASE("empty input gives the empty basis") {
  const GroebnerBasis gb = GroebnerBasis::compute({});
  CHECK(gb.empty());
  auto r = Ring::coefficients(2);
  const GroebnerBasis gbz = GroebnerBasis::compute({MultiPoly::zero(r)});
  CHECK(gbz.generators().empty());
  CHECK(gbz.normal_form(P("a2", r)) == P("a2", r));
}

TEST_CASE("normal form basics") {
  const ConstantsTable t4 = stability_constants(4, 7);
  const GroebnerBasis gb3 = GroebnerBasis::compute({t4.w(3)});
  // W4 = -1/2 a2 V3 lies in <W3>
  CHECK(gb3.normal_form(t4.w(4)).is_zero());
  // NF(0) = 0
  CHECK(gb3.normal_form(MultiPoly::zero(t4.ring)).is_zero());
  // NF(W5) = V5 at d=4: the -2a5 term is absent from the d=4 ring
  CHECK(gb3.normal_form(t4.w(5)) == P("-6*a4*a2 + 4*a3^2", t4.ring));
}

TEST_CASE("normal form is idempotent and ideal-invariant") {
  auto r = Ring::coefficients(4);
  std::vector<MultiPoly> gens = {P("a2^2 - a3", r), P("a3*a4 - 1", r)};
  const GroebnerBasis gb = GroebnerBasis::compute(gens);
  for (int i = 0; i < 40; ++i) {
    const MultiPoly p = random_poly(r, 5);
    const MultiPoly nf = gb.normal_form(p);
    CHECK(gb.normal_form(nf) == nf);
    const MultiPoly q = random_poly(r, 3);
    for (const MultiPoly& g : gb.generators())
      CHECK(gb.normal_form(p + q * g) == nf);
  }
}

TEST_CASE("buchberger criterion holds on final bases") {
  auto r = Ring::coefficients(4);
  const GroebnerBasis gb =
      GroebnerBasis::compute({P("a2^2 - a3", r), P("a3^2 - a4", r), P("a2*a4 - a3", r)});
  CHECK(gb.buchberger_criterion_holds());

  const ConstantsTable t4 = stability_constants(4, 9);
  const GroebnerBasis gbw =
      GroebnerBasis::compute({t4.w(3), t4.w(4), t4.w(5), t4.w(6), t4.w(7)});
  CHECK(gbw.buchberger_criterion_holds());
}

TEST_CASE("determinism: identical input, identical basis") {
  auto r = Ring::coefficients(5);
  std::vector<MultiPoly> gens;
  for (int i = 0; i < 4; ++i) gens.push_back(random_poly(r, 4));
  const GroebnerBasis a = GroebnerBasis::compute(gens);
  const GroebnerBasis b = GroebnerBasis::compute(gens);
  REQUIRE(a.generators().size() == b.generators().size());
  for (size_t i = 0; i < a.generators().size(); ++i)
    CHECK(a.generators()[i] == b.generators()[i]);
}

TEST_CASE("d=4: W_j lies in <V3, V5, V7> for j = 8..16") {
  ConstantsTable t = constants_table(4, 7);
  const GroebnerBasis gb = GroebnerBasis::compute({t.v(3), t.v(5), t.v(7)});
  for (int j = 8; j <= 16; ++j) CHECK(gb.contains(t.w(j)));
}

TEST_CASE("ideal equality examples") {
  const ConstantsTable t4 = constants_table(4, 5);
  // <W3> vs <V3>: V3 = W3
  CHECK(ideal_equal(GroebnerBasis::compute({t4.w(3)}),
                    GroebnerBasis::compute({t4.v(3)})));
  // <a2> vs <a2^2>
  auto r = Ring::coefficients(2);
  CHECK_FALSE(ideal_equal(GroebnerBasis::compute({P("a2", r)}),
                          GroebnerBasis::compute({P("a2^2", r)})));
  // d=4: <W3, W4, W5> = <V3, V5> (from W4 = -1/2 a2 V3, W5 = V5 + 1/2 a3 V3)
  const GroebnerBasis w345 = GroebnerBasis::compute({t4.w(3), t4.w(4), t4.w(5)});
  const GroebnerBasis v35 = GroebnerBasis::compute({t4.v(3), t4.v(5)});
  CHECK(ideal_equal(w345, v35));

  // equivalence relation on a small corpus
  const GroebnerBasis reordered = GroebnerBasis::compute({t4.w(5), t4.w(3), t4.w(4)});
  CHECK(ideal_equal(w345, w345));
  CHECK(ideal_equal(v35, reordered));
  CHECK((ideal_equal(w345, v35) && ideal_equal(v35, reordered) && ideal_equal(w345, reordered)));
}

TEST_CASE("power membership") {
  auto r = Ring::coefficients(3);
  const GroebnerBasis gb = GroebnerBasis::compute({P("a2^2", r)});
  CHECK(power_member(P("a2^2 + a3*a2^2", r), gb, 4) == 1);  // already inside
  CHECK(power_member(P("a2", r), gb, 4) == 2);
  CHECK(power_member(P("a3", r), gb, 4) == std::nullopt);
  CHECK_THROWS(power_member(P("a3", r), gb, 0));
}

TEST_CASE("d=6: W17 needs its square in <V3..V11>") {
  ConstantsTable t = constants_table(6, 11);
  const GroebnerBasis gb =
      GroebnerBasis::compute({t.v(3), t.v(5), t.v(7), t.v(9), t.v(11)});
  const ConstantsTable t17 = stability_constants(6, 17);
  // W13 is not even in the larger length-13 prefix ideal (paper's d=6 case)
  CHECK_FALSE(gb.contains(t17.w(13)));
  CHECK(power_member(t17.w(13), gb, 4) == 2);
  CHECK(power_member(t17.w(17), gb, 4) == 2);
}

TEST_CASE("basis file round trip") {
  const ConstantsTable t4 = constants_table(4, 7);
  std::vector<MultiPoly> gens = {t4.v(3), t4.v(5), t4.v(7)};
  std::stringstream ss;
  write_basis(ss, t4.ring, gens);
  const BasisFile back = read_basis(ss);
  REQUIRE(back.generators.size() == gens.size());
  CHECK(same_ring(back.ring, t4.ring));
  for (size_t i = 0; i < gens.size(); ++i)
    CHECK(to_string(back.generators[i]) == to_string(gens[i]));
}

TEST_CASE("budget exceeded raises a structured error") {
  auto r = Ring::coefficients(6);
  std::vector<MultiPoly> gens;
  for (int i = 0; i < 6; ++i) gens.push_back(random_poly(r, 8, 4));
  GroebnerOptions opts;
  opts.budget = std::chrono::milliseconds(0);
  CHECK_THROWS_AS((void)GroebnerBasis::compute(gens, opts), BudgetExceeded);
}
