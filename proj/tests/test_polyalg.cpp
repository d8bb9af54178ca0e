#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "twocyc/quadext.hpp"
#include "twocyc/series.hpp"
#include "twocyc/textio.hpp"

using namespace twocyc;

namespace {

RingPtr ring_a(int d) { return Ring::coefficients(d); }

MultiPoly P(const std::string& s, const RingPtr& r) { return parse_poly(s, r); }

std::mt19937 rng(20240817);

Rat random_rat(int span = 20) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, span);
  Rat q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

Monomial random_monomial(int nvars, int max_exp = 4) {
  std::uniform_int_distribution<uint32_t> e(0, static_cast<uint32_t>(max_exp));
  Monomial m(nvars);
  for (int i = 0; i < nvars; ++i) m.set_exp(i, e(rng));
  return m;
}

MultiPoly random_poly(const RingPtr& r, int nterms) {
  std::vector<Term> terms;
  for (int i = 0; i < nterms; ++i) terms.push_back(Term{random_monomial(r->size()), random_rat()});
  return MultiPoly::from_terms(r, std::move(terms));
}

// Reference grevlex on three variables, straight from the definition:
// by total degree, then by smallest exponent in the last variable, breaking
// remaining ties toward the front.
int reference_grevlex3(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = 2; i >= 0; --i) {
    if (a.exp(i) < b.exp(i)) return 1;
    if (a.exp(i) > b.exp(i)) return -1;
  }
  return 0;
}

}  // namespace

TEST_CASE("rationals stay canonical") {
  Rat q(6, -4);
  q.canonicalize();
  CHECK(rat_to_string(q) == "-3/2");
  CHECK(rat_from_string("-3/2") == q);
  CHECK(rat_from_string("242/17") == Rat(242, 17));
  CHECK(rat_to_string(Rat(0)) == "0");
  CHECK_THROWS(rat_from_string("1/0"));
}

TEST_CASE("long double round trips") {
  for (int i = 0; i < 200; ++i) {
    const Rat q = random_rat(1000);
    const long double v = to_long_double(q);
    CHECK(std::fabs(v - to_long_double(rat_from_long_double(v))) == 0.0L);
  }
  CHECK(rat_from_long_double(0.75L) == Rat(3, 4));
}

TEST_CASE("mp_arith examples") {
  auto r = ring_a(4);
  const MultiPoly a2 = P("a2", r);
  CHECK(a2 * a2 == P("a2^2", r));

  // cancellation must delete the zero term
  const MultiPoly sum = P("-2*a2^2 - 2*a3", r) + P("2*a2^2", r);
  CHECK(sum == P("-2*a3", r));
  CHECK(sum.term_count() == 1);

  // pow against brute-force repeated multiplication
  const MultiPoly base = P("a2 + a3", r);
  MultiPoly brute = MultiPoly::constant(r, Rat(1));
  for (int i = 0; i < 3; ++i) brute = brute * base;
  CHECK(base.pow(3) == brute);

  CHECK_THROWS(ring_a(3)->size() == 2 ? void(P("a2", ring_a(3)) + P("a2", ring_a(5))) : void());
}

TEST_CASE("grevlex examples") {
  auto r = ring_a(4);  // a2, a3, a4
  const auto m = [&](std::initializer_list<uint32_t> e) { return Monomial(e); };
  // a2^2 vs a3: degree dominates
  CHECK(grevlex_cmp(m({2, 0, 0}), m({0, 1, 0})) > 0);
  // a2*a4 vs a3^2: tie broken by smaller exponent in a4
  CHECK(grevlex_cmp(m({0, 2, 0}), m({1, 0, 1})) > 0);
  // reflexivity
  CHECK(grevlex_cmp(m({1, 2, 3}), m({1, 2, 3})) == 0);
}

TEST_CASE("grevlex is a total order compatible with multiplication") {
  for (int i = 0; i < 500; ++i) {
    const Monomial a = random_monomial(3), b = random_monomial(3), c = random_monomial(3);
    CHECK(grevlex_cmp(a, b) == reference_grevlex3(a, b));
    CHECK(grevlex_cmp(a, b) == -grevlex_cmp(b, a));
    // multiplication keeps order
    if (grevlex_cmp(a, b) < 0) CHECK(grevlex_cmp(a * c, b * c) < 0);
    // 1 is minimal
    if (a.degree() > 0) CHECK(grevlex_cmp(Monomial(3), a) < 0);
  }
  // transitivity on sorted triples
  for (int i = 0; i < 200; ++i) {
    Monomial x = random_monomial(3), y = random_monomial(3), z = random_monomial(3);
    if (grevlex_cmp(x, y) <= 0 && grevlex_cmp(y, z) <= 0) CHECK(grevlex_cmp(x, z) <= 0);
  }
}

TEST_CASE("series composition: d=2 self-composition") {
  auto r = ring_a(2);
  TruncSeries f(r, 4);
  f.set_coeff(1, MultiPoly::constant(r, Rat(-1)));
  f.set_coeff(2, MultiPoly::variable(r, 0));
  const TruncSeries ff = series_compose(f, f, 4);
  CHECK(ff.coeff(1) == P("1", r));
  CHECK(ff.coeff(2).is_zero());
  CHECK(ff.coeff(3) == P("-2*a2^2", r));
  CHECK(ff.coeff(4) == P("a2^3", r));
}

TEST_CASE("series composition: linear involution") {
  auto r = ring_a(1);
  TruncSeries f(r, 5);
  f.set_coeff(1, MultiPoly::constant(r, Rat(-1)));
  const TruncSeries ff = series_compose(f, f, 5);
  CHECK(ff.coeff(1).constant_term() == 1);
  for (int j = 2; j <= 5; ++j) CHECK(ff.coeff(j).is_zero());
}

TEST_CASE("series composition: -x + x^4 - 2x^7 gives 42 x^13") {
  auto r = ring_a(1);
  TruncSeries f(r, 13);
  f.set_coeff(1, MultiPoly::constant(r, Rat(-1)));
  f.set_coeff(4, MultiPoly::constant(r, Rat(1)));
  f.set_coeff(7, MultiPoly::constant(r, Rat(-2)));
  const TruncSeries ff = series_compose(f, f, 13);
  CHECK(ff.coeff(1).constant_term() == 1);
  for (int j = 2; j <= 12; ++j) CHECK(ff.coeff(j).is_zero());
  CHECK(ff.coeff(13).constant_term() == 42);
}

TEST_CASE("series composition is associative at fixed truncation") {
  auto r = ring_a(1);
  const int N = 7;
  auto random_series = [&](bool unit_lead) {
    TruncSeries s(r, N);
    s.set_coeff(1, MultiPoly::constant(r, unit_lead ? Rat(1) : random_rat() + Rat(21)));
    for (int j = 2; j <= N; ++j) s.set_coeff(j, MultiPoly::constant(r, random_rat()));
    return s;
  };
  for (int i = 0; i < 10; ++i) {
    const TruncSeries f = random_series(false), g = random_series(false), h = random_series(false);
    const TruncSeries left = series_compose(series_compose(f, g, N), h, N);
    const TruncSeries right = series_compose(f, series_compose(g, h, N), N);
    CHECK(left == right);
  }
}

TEST_CASE("series reversion matches the printed expansion") {
  auto r = Ring::coefficients(4, "b");
  TruncSeries g(r, 4);
  g.set_coeff(1, MultiPoly::constant(r, Rat(1)));
  for (int j = 2; j <= 4; ++j) g.set_coeff(j, MultiPoly::variable(r, j - 2));
  const TruncSeries inv = series_reverse(g, 4);
  CHECK(inv.coeff(1) == P("1", r));
  CHECK(inv.coeff(2) == P("-b2", r));
  CHECK(inv.coeff(3) == P("2*b2^2 - b3", r));
  CHECK(inv.coeff(4) == P("-5*b2^3 + 5*b2*b3 - b4", r));
}

TEST_CASE("series reversion: identity and round trip") {
  auto r = ring_a(1);
  TruncSeries id(r, 6);
  id.set_coeff(1, MultiPoly::constant(r, Rat(1)));
  CHECK(series_reverse(id, 6) == id);

  for (int i = 0; i < 10; ++i) {
    TruncSeries g(r, 8);
    g.set_coeff(1, MultiPoly::constant(r, Rat(1)));
    for (int j = 2; j <= 8; ++j) g.set_coeff(j, MultiPoly::constant(r, random_rat()));
    const TruncSeries h = series_reverse(g, 8);
    const TruncSeries round = series_compose(g, h, 8);
    CHECK(round.coeff(1).constant_term() == 1);
    for (int j = 2; j <= 8; ++j) CHECK(round.coeff(j).is_zero());
  }

  TruncSeries bad(r, 3);
  bad.set_coeff(1, MultiPoly::constant(r, Rat(2)));
  CHECK_THROWS(series_reverse(bad, 3));
}

TEST_CASE("quadext arithmetic and equality") {
  const QuadExt a(Rat(9, 2), Rat(1, 2), Int(55));  // (9+sqrt 55)/2
  const QuadExt b = a * a;
  CHECK(b == QuadExt(Rat(34), Rat(9, 2), Int(55)));
  CHECK((a - a).is_zero());
  CHECK(a * a.inverse() == QuadExt(1));
  CHECK_THROWS(QuadExt(Rat(1), Rat(1), Int(55)) + QuadExt(Rat(1), Rat(1), Int(7)));
  CHECK_THROWS(QuadExt(Rat(1), Rat(1), Int(49)));  // perfect square
  // rational values mix with any discriminant
  CHECK(QuadExt(Rat(2)) * QuadExt(Rat(0), Rat(1), Int(55)) ==
        QuadExt(Rat(0), Rat(2), Int(55)));
}

TEST_CASE("quadext sign agrees with floating evaluation") {
  const Int discs[] = {Int(2), Int(3), Int(5), Int(55), Int(137)};
  std::uniform_int_distribution<int> di(0, 4);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const QuadExt x(random_rat(50), random_rat(50), discs[di(rng)]);
    const long double v = x.to_long_double();
    if (std::fabs(v) < 1e-12L) continue;  // too close to call in floating point
    CHECK(x.sign() == (v > 0 ? 1 : -1));
    ++checked;
  }
  CHECK(checked > 900);
}

TEST_CASE("polynomial text round trip") {
  auto r = ring_a(9);
  const char* samples[] = {
      "-2*a2^2 - 2*a3",
      "242/17*a2*a3*a6 - 121/17*a2*a4*a5 - 10*a8*a2 + 358/17*a3*a7 - 10*a4*a6 + 69/17*a5^2 - 2*a9",
      "0",
      "a2",
      "-a2*a3 + 1/2",
  };
  for (const char* s : samples) {
    const MultiPoly p = P(s, r);
    CHECK(P(to_string(p), r) == p);
  }
  for (int i = 0; i < 50; ++i) {
    const MultiPoly p = random_poly(r, 6);
    CHECK(P(to_string(p), r) == p);
  }
  CHECK_THROWS(P("a2 +", r));
  CHECK_THROWS(P("zz", r));
}

TEST_CASE("quadext text round trip") {
  const char* samples[] = {"1", "-1", "(9+sqrt(55))/2", "-(23+3*sqrt(55))/2",
                           "5280 + 736*sqrt(55)", "-3/2"};
  for (const char* s : samples) {
    const QuadExt x = parse_quadext(s);
    CHECK(parse_quadext(to_string(x)) == x);
  }
  CHECK(parse_quadext("(9+sqrt(55))/2") == QuadExt(Rat(9, 2), Rat(1, 2), Int(55)));
  CHECK(parse_quadext("-(23+3*sqrt(55))/2") == QuadExt(Rat(-23, 2), Rat(-3, 2), Int(55)));
}

TEST_CASE("parallel multiply kernel matches serial reference") {
  auto r = ring_a(6);
  for (int i = 0; i < 8; ++i) {
    const MultiPoly a = random_poly(r, 120);
    const MultiPoly b = random_poly(r, 90);
    const MultiPoly serial = MultiPoly::mul_serial(a, b);
    const MultiPoly parallel = MultiPoly::mul_parallel(a, b);
    CHECK(serial == parallel);
    CHECK(a * b == serial);
  }
}

TEST_CASE("ring extension and restriction") {
  auto small = ring_a(4), big = ring_a(7);
  const MultiPoly p = P("3*a2*a3*a4 - 4*a4^2", small);
  const MultiPoly q = p.extend_to(big);
  CHECK(q == P("3*a2*a3*a4 - 4*a4^2", big));
  CHECK(q.restrict_to(small) == p);
  const MultiPoly v7 = P("3*a2*a3*a4 - 8*a6*a2 + 13*a3*a5 - 4*a4^2 - 2*a7", big);
  CHECK(v7.restrict_to(small) == p);
}
