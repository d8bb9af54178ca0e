#include "twocyc/dynamics.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace twocyc {

namespace {
constexpr long double kPi = 3.14159265358979323846264338327950288L;
}

ConcreteMap ConcreteMap::from_coeffs(std::vector<Rat> a) {
  ConcreteMap m;
  m.degree = static_cast<int>(a.size()) + 1;
  m.coeff = std::move(a);
  if (m.degree < 2) throw std::invalid_argument("map needs at least the a2 coefficient");
  return m;
}

RatPoly ConcreteMap::poly() const {
  std::vector<Rat> c(static_cast<size_t>(degree) + 1, Rat(0));
  c[1] = Rat(-1);
  for (int j = 2; j <= degree; ++j) c[static_cast<size_t>(j)] = coeff[static_cast<size_t>(j - 2)];
  return RatPoly(std::move(c));
}

long double ConcreteMap::eval(long double x) const {
  long double acc = 0.0L;
  for (size_t j = coeff.size(); j-- > 0;)
    acc = (acc + to_long_double(coeff[j])) * x;
  return (acc - 1.0L) * x;
}

std::vector<int> scan_signs_serial(const RatPoly& h, const std::vector<long double>& grid) {
  std::vector<int> s(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) {
    const long double v = eval_ld(h, grid[i]);
    s[i] = v > 0 ? 1 : (v < 0 ? -1 : 0);
  }
  return s;
}

std::vector<int> scan_signs_parallel(const RatPoly& h, const std::vector<long double>& grid) {
  std::vector<int> s(grid.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < static_cast<long>(grid.size()); ++i) {
    const long double v = eval_ld(h, grid[static_cast<size_t>(i)]);
    s[static_cast<size_t>(i)] = v > 0 ? 1 : (v < 0 ? -1 : 0);
  }
  return s;
}

namespace {

// Exact sign of a rational polynomial at a rational point.
int exact_sign(const RatPoly& p, const Rat& x) { return sgn(p.eval(x)); }

struct Candidate {
  Rat lo, hi;        // exact bracket with h(lo) h(hi) < 0
  long double mid;   // numeric root estimate
  bool fixed_point;  // bracket contains a root of f(x) - x
};

// Bisect [lo, hi] keeping the exact sign change, until the relative width is
// below 1e-14 (or 60 halvings).
void exact_bisect(const RatPoly& h, Rat& lo, Rat& hi, int slo) {
  for (int it = 0; it < 60; ++it) {
    const Rat mid = (lo + hi) / 2;
    const int sm = exact_sign(h, mid);
    if (sm == 0) {
      lo = hi = mid;
      return;
    }
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
    const long double w = to_long_double(hi - lo);
    const long double scale = std::fabs(to_long_double(lo));
    if (scale > 0 && w / scale < 1e-14L) return;
  }
}

std::vector<Candidate> locate_roots(const RatPoly& h, const RatPoly& fixpoly,
                                    const std::vector<long double>& grid,
                                    const std::vector<int>& signs) {
  std::vector<Candidate> out;
  for (size_t i = 0; i + 1 < grid.size(); ++i) {
    const int s0 = signs[i], s1 = signs[i + 1];
    if (s0 == 0 || s1 == 0 || s0 == s1) continue;
    Rat lo = rat_from_long_double(std::min(grid[i], grid[i + 1]));
    Rat hi = rat_from_long_double(std::max(grid[i], grid[i + 1]));
    int slo = exact_sign(h, lo);
    const int shi = exact_sign(h, hi);
    if (slo == 0 || shi == 0 || slo == shi) continue;  // numeric sign was noise
    exact_bisect(h, lo, hi, slo);
    Candidate c;
    c.lo = lo;
    c.hi = hi;
    c.mid = to_long_double((lo + hi) / 2);
    c.fixed_point = lo == hi ? exact_sign(fixpoly, lo) == 0
                             : sturm_count(fixpoly, lo, hi) > 0;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

OrbitReport count_2periodic(const ConcreteMap& map, long double radius,
                            const ScanOptions& opts) {
  if (!(radius > 0)) throw std::invalid_argument("window radius must be positive");
  OrbitReport rep;
  rep.window = radius;
  rep.tol = opts.tol;
  rep.grid_per_side = opts.grid_per_side;

  const RatPoly f = map.poly();
  const RatPoly ff = compose(f, f);
  RatPoly h = ff - RatPoly({Rat(0), Rat(1)});
  // f(f(x)) - x = W3 x^3 + ...; strip the triple zero at the origin
  for (int k = 0; k < 3; ++k) {
    if (!h.is_zero() && sgn(h[0]) != 0)
      throw std::logic_error("f(f(x)) - x has unexpected low-order terms");
    h = h.is_zero() ? h : divexact(h, RatPoly({Rat(0), Rat(1)}));
  }
  const RatPoly fixpoly = f - RatPoly({Rat(0), Rat(1)});

  if (h.is_zero()) {
    rep.non_isolated = true;  // involution: a continuum of 2-periodic pairs
    return rep;
  }

  // Exact fixed-point inventory on (-radius, radius).
  const Rat rad = rat_from_long_double(radius);
  rep.fixed_point_count = sturm_count(fixpoly, -rad, rad) +
                          (exact_sign(fixpoly, -rad) == 0 ? 1 : 0);
  for (const RootInterval& iv : isolate_roots(fixpoly, rad / 1000000)) {
    const long double x = to_long_double((iv.lo + iv.hi) / 2);
    if (std::fabs(x) < radius || exact_sign(fixpoly, rad) == 0)
      if (x > -radius && x < radius) rep.fixed_points.push_back(x);
  }

  // Log-spaced grid on each side of 0.
  std::vector<long double> grid;
  grid.reserve(2 * static_cast<size_t>(opts.grid_per_side));
  const long double inner = radius * opts.inner_fraction;
  const long double q =
      std::pow(inner / radius, 1.0L / static_cast<long double>(opts.grid_per_side - 1));
  for (int side = 0; side < 2; ++side) {
    long double x = side == 0 ? radius : -radius;
    for (int i = 0; i < opts.grid_per_side; ++i) {
      grid.push_back(x);
      x *= q;
    }
  }
  const std::vector<int> signs =
      opts.parallel ? scan_signs_parallel(h, grid) : scan_signs_serial(h, grid);

  // Brackets are scanned per side (the grid is monotone within a side).
  std::vector<Candidate> cands;
  for (int side = 0; side < 2; ++side) {
    const size_t off = static_cast<size_t>(side) * static_cast<size_t>(opts.grid_per_side);
    std::vector<long double> g(grid.begin() + static_cast<long>(off),
                               grid.begin() + static_cast<long>(off + static_cast<size_t>(opts.grid_per_side)));
    std::vector<int> s(signs.begin() + static_cast<long>(off),
                       signs.begin() + static_cast<long>(off + static_cast<size_t>(opts.grid_per_side)));
    auto part = locate_roots(h, fixpoly, g, s);
    cands.insert(cands.end(), part.begin(), part.end());
  }

  // Pair periodic roots into orbits; each orbit is reported once, from its
  // larger member.
  for (const Candidate& c : cands) {
    if (c.fixed_point) continue;
    const long double x = c.mid;
    const long double y = map.eval(x);
    if (std::fabs(x - y) <= opts.separation * std::max<long double>(1, std::fabs(x)))
      continue;  // numerically indistinguishable from a fixed point; dropped
    if (std::fabs(y) >= radius) {
      ++rep.orbits_partner_outside;
      continue;
    }
    if (y > x) continue;  // partner is the representative
    Orbit orb;
    orb.x = x;
    orb.y = y;
    orb.enclosure_lo = c.lo;
    orb.enclosure_hi = c.hi;
    orb.residual = std::fabs(map.eval(map.eval(x)) - x);
    rep.orbits.push_back(orb);
  }
  return rep;
}

namespace {

// Solve M v = rhs exactly (QuadExt entries, small systems).
std::vector<QuadExt> solve_linear(std::vector<std::vector<QuadExt>> m,
                                  std::vector<QuadExt> rhs) {
  const size_t n = m.size();
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("singular linear system");
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    const QuadExt inv = m[col][col].inverse();
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const QuadExt factor = m[r][col] * inv;
      for (size_t c2 = col; c2 < n; ++c2) m[r][c2] = m[r][c2] - factor * m[col][c2];
      rhs[r] = rhs[r] - factor * rhs[col];
    }
  }
  std::vector<QuadExt> v(n, QuadExt(0));
  for (size_t r = n; r-- > 0;) {
    QuadExt acc = rhs[r];
    for (size_t c2 = r + 1; c2 < n; ++c2) acc = acc - m[r][c2] * v[c2];
    v[r] = acc * m[r][r].inverse();
  }
  return v;
}

Rat quadext_to_rat(const QuadExt& x) {
  if (x.is_rational()) return x.rational_part();
  return rat_from_long_double(x.to_long_double());
}

}  // namespace

StaircaseResult staircase(const Certificate& cert, const StaircaseOptions& opts) {
  StaircaseResult res;
  if (!cert.certified || cert.kind != Certificate::Kind::lower_bound) {
    res.detail = "staircase needs a certified lower-bound certificate";
    return res;
  }
  const int m1 = cert.order;  // number of orbits to realize
  if (m1 == 0) {
    res.ok = true;
    res.detail = "order 0: nothing to realize";
    return res;
  }

  long double x_base = opts.x_base;
  for (int attempt = 0; attempt < opts.attempts; ++attempt, x_base *= 0.1L) {
    res.steps.clear();
    // Orbit scales, largest first.
    std::vector<Rat> root_u(static_cast<size_t>(m1));
    for (int t = 0; t < m1; ++t) {
      const Rat xr = rat_from_long_double(
          x_base * std::pow(opts.ratio, static_cast<long double>(t)));
      root_u[static_cast<size_t>(t)] = xr * xr;
    }

    bool all_steps_ok = true;
    for (int step = 1; step <= m1 && all_steps_ok; ++step) {
      // Target polynomial in u = x^2: witness * u^(m1-step) * prod_{s<step}(u - u_s)
      std::vector<QuadExt> target(static_cast<size_t>(m1), QuadExt(0));
      {
        std::vector<Rat> poly{Rat(1)};  // coefficients of prod (u - u_s), ascending
        for (int s = 0; s < step; ++s) {
          std::vector<Rat> next(poly.size() + 1, Rat(0));
          for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * root_u[static_cast<size_t>(s)];
          }
          poly = std::move(next);
        }
        // coefficient of u^j in witness * u^(m1-step) * poly, for j < m1
        for (size_t i = 0; i < poly.size(); ++i) {
          const size_t j = i + static_cast<size_t>(m1 - step);
          if (j < static_cast<size_t>(m1))
            target[j] = cert.witness_value * QuadExt(poly[i]);
        }
      }

      // Solve J^T da = target where J[i][j] = dV_{2j+3}/da_{i+2}.
      std::vector<std::vector<QuadExt>> jt(static_cast<size_t>(m1),
                                           std::vector<QuadExt>(static_cast<size_t>(m1)));
      for (int i = 0; i < m1; ++i)
        for (int j = 0; j < m1; ++j)
          jt[static_cast<size_t>(j)][static_cast<size_t>(i)] =
              cert.matrix[static_cast<size_t>(i)][static_cast<size_t>(j)];
      const std::vector<QuadExt> da = solve_linear(jt, target);

      std::vector<Rat> params;
      params.reserve(cert.point.size());
      for (size_t i = 0; i < cert.point.size(); ++i) {
        QuadExt v = cert.point[i];
        if (i < da.size()) v = v + da[i];
        params.push_back(quadext_to_rat(v));
      }

      const ConcreteMap map = ConcreteMap::from_coeffs(params);
      ScanOptions scan = opts.scan;
      const OrbitReport rep = count_2periodic(map, 2 * x_base, scan);

      StaircaseStep st;
      st.params = params;
      st.orbit_count = static_cast<int>(rep.orbits.size());
      for (const Orbit& o : rep.orbits) st.orbit_xs.push_back(o.x);
      res.steps.push_back(st);
      if (st.orbit_count != step) all_steps_ok = false;
      if (step == m1 && all_steps_ok) {
        res.ok = true;
        res.final_report = rep;
        std::ostringstream os;
        os << m1 << " orbits realized at scales " << static_cast<double>(x_base) << " down to "
           << static_cast<double>(x_base * std::pow(opts.ratio, static_cast<long double>(m1 - 1)));
        res.detail = os.str();
        return res;
      }
    }
  }
  res.detail = "staircase failed to realize " + std::to_string(m1) +
               " orbits before scale underflow";
  return res;
}

NullVerdict orientation_preserving_null(const std::vector<Rat>& c, long double radius) {
  if (!(radius > 0)) throw std::invalid_argument("window radius must be positive");
  NullVerdict verdict;
  std::vector<Rat> coeffs(c.size() + 2, Rat(0));
  coeffs[1] = Rat(1);
  for (size_t i = 0; i < c.size(); ++i) coeffs[i + 2] = c[i];
  const RatPoly g{std::vector<Rat>(coeffs)};
  const RatPoly gp = derivative(g);

  // Monotonicity window: g'(0) = 1, so shrink the radius below the nearest
  // root of g'.
  Rat r = rat_from_long_double(radius);
  if (gp.degree() >= 1 && sturm_count(gp, -r, r) > 0) {
    Rat nearest = r;
    for (const RootInterval& iv : isolate_roots(gp, r / 1000000)) {
      if (sgn(iv.lo) <= 0 && sgn(iv.hi) >= 0) continue;  // cannot happen: g'(0)=1
      const Rat dist = sgn(iv.hi) < 0 ? -iv.hi : iv.lo;
      if (cmp(dist, nearest) < 0) nearest = dist;
    }
    r = nearest * Rat(9, 10);
  }
  verdict.radius = to_long_double(r);

  const RatPoly identity({Rat(0), Rat(1)});
  const RatPoly gg = compose(g, g) - identity;
  const RatPoly fix = g - identity;
  const auto count_in = [&](const RatPoly& p) {
    const Rat neg = -r;
    return sturm_count(p, neg, r) + (sgn(p.eval(neg)) == 0 ? 1 : 0) +
           (sgn(p.eval(r)) == 0 ? 1 : 0);
  };
  verdict.ff_roots = gg.is_zero() ? -1 : count_in(gg);
  verdict.f_roots = fix.is_zero() ? -1 : count_in(fix);
  verdict.ok = verdict.ff_roots >= 0 && verdict.ff_roots == verdict.f_roots &&
               (gp.degree() < 1 || sturm_count(gp, -r, r) == 0);
  return verdict;
}

long double HalfReturnProbe::delta() const {
  return -static_cast<long double>(sigma) / kPi;
}

long double HalfReturnProbe::gamma() const {
  const long double s2 = static_cast<long double>(sigma) * static_cast<long double>(sigma);
  return -(c + (2.0L * ell + 1.0L) * s2 / 2.0L) / kPi;
}

namespace {

long double polar_rhs(const HalfReturnProbe& p, long double r) {
  const long double r2l = std::pow(r, 2.0L * p.ell);
  return r * r2l * (p.delta() + p.gamma() * r2l);
}

}  // namespace

long double half_return_rk(const HalfReturnProbe& probe, long double x0,
                           long double rtol) {
  // Dormand-Prince 5(4) pair.
  static const long double A[7][6] = {
      {0, 0, 0, 0, 0, 0},
      {1.0L / 5, 0, 0, 0, 0, 0},
      {3.0L / 40, 9.0L / 40, 0, 0, 0, 0},
      {44.0L / 45, -56.0L / 15, 32.0L / 9, 0, 0, 0},
      {19372.0L / 6561, -25360.0L / 2187, 64448.0L / 6561, -212.0L / 729, 0, 0},
      {9017.0L / 3168, -355.0L / 33, 46732.0L / 5247, 49.0L / 176, -5103.0L / 18656, 0},
      {35.0L / 384, 0, 500.0L / 1113, 125.0L / 192, -2187.0L / 6784, 11.0L / 84}};
  static const long double B5[7] = {35.0L / 384, 0, 500.0L / 1113, 125.0L / 192,
                                    -2187.0L / 6784, 11.0L / 84, 0};
  static const long double B4[7] = {5179.0L / 57600,    0,
                                    7571.0L / 16695,    393.0L / 640,
                                    -92097.0L / 339200, 187.0L / 2100,
                                    1.0L / 40};

  if (!(x0 > 0)) throw std::invalid_argument("x0 must be positive");
  long double t = 0.0L, r = x0;
  long double hstep = kPi / 64.0L;
  const long double atol = rtol * x0;
  int guard = 0;
  while (t < kPi) {
    if (++guard > 2000000) throw std::runtime_error("integrator failed to reach theta=pi");
    if (t + hstep > kPi) hstep = kPi - t;
    long double k[7];
    k[0] = polar_rhs(probe, r);
    for (int stage = 1; stage < 7; ++stage) {
      long double acc = 0.0L;
      for (int j = 0; j < stage; ++j) acc += A[stage][j] * k[j];
      k[stage] = polar_rhs(probe, r + hstep * acc);
    }
    long double r5 = r, r4 = r;
    for (int j = 0; j < 7; ++j) {
      r5 += hstep * B5[j] * k[j];
      r4 += hstep * B4[j] * k[j];
    }
    const long double err = std::fabs(r5 - r4);
    const long double tol = atol + rtol * std::fabs(r5);
    if (err <= tol || hstep <= 1e-18L) {
      t += hstep;
      r = r5;
      if (!std::isfinite(static_cast<double>(r)))
        throw std::runtime_error("polar radius blew up before theta=pi");
    }
    const long double factor =
        err > 0 ? 0.9L * std::pow(tol / err, 0.2L) : 5.0L;
    hstep *= std::clamp(factor, 0.2L, 5.0L);
  }
  return -r;
}

long double half_return_closed(const HalfReturnProbe& probe, long double x0) {
  const long double delta = probe.delta();
  const long double gamma = probe.gamma();
  const long double l2 = 2.0L * probe.ell;
  if (delta == 0.0L && gamma == 0.0L) return -x0;
  if (gamma == 0.0L) {
    const long double base = 1.0L - l2 * delta * kPi * std::pow(x0, l2);
    return -x0 * std::pow(base, -1.0L / l2);
  }
  if (delta == 0.0L) {
    const long double base = 1.0L - 2.0L * l2 * gamma * kPi * std::pow(x0, 2.0L * l2);
    return -x0 * std::pow(base, -1.0L / (2.0L * l2));
  }
  // theta(r) = A(r) - A(x0) with A(r) = -(1/2l)(u/delta - (gamma/delta^2)
  // ln|delta u + gamma|), u = r^(-2l); solve theta(r) = pi by Newton.
  const auto antideriv = [&](long double r) {
    const long double u = std::pow(r, -l2);
    return -(u / delta - (gamma / (delta * delta)) * std::log(std::fabs(delta * u + gamma))) / l2;
  };
  const long double target = antideriv(x0) + kPi;
  long double r = x0;
  for (int it = 0; it < 200; ++it) {
    const long double fr = antideriv(r) - target;  // d(antideriv)/dr = 1/rhs
    if (std::fabs(fr) < 1e-20L * kPi && it > 0) break;
    const long double next = r - fr * polar_rhs(probe, r);
    r = (next > 0 && std::isfinite(static_cast<double>(next))) ? next : r / 2;
  }
  return -r;
}

HalfReturnFit half_return_fit(const HalfReturnProbe& probe, long double x_lo,
                              long double x_hi, int npoints) {
  if (npoints < 6) npoints = 6;
  const int l = probe.ell;
  const int powers[5] = {1, 2 * l + 1, 4 * l + 1, 6 * l + 1, 8 * l + 1};
  long double ata[5][5] = {};
  long double atb[5] = {};
  const long double q = std::pow(x_hi / x_lo, 1.0L / (npoints - 1));
  long double x = x_lo;
  for (int i = 0; i < npoints; ++i, x *= q) {
    const long double y = half_return_rk(probe, x);
    long double row[5];
    for (int j = 0; j < 5; ++j) row[j] = std::pow(x, powers[j]);
    const long double w = 1.0L / row[0];  // weight rows evenly in the x term
    for (int j = 0; j < 5; ++j) {
      for (int k2 = 0; k2 < 5; ++k2) ata[j][k2] += w * w * row[j] * row[k2];
      atb[j] += w * w * row[j] * y;
    }
  }
  // 5x5 Gaussian elimination with partial pivoting.
  long double m[5][6];
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) m[i][j] = ata[i][j];
    m[i][5] = atb[i];
  }
  for (int col = 0; col < 5; ++col) {
    int piv = col;
    for (int r2 = col + 1; r2 < 5; ++r2)
      if (std::fabs(m[r2][col]) > std::fabs(m[piv][col])) piv = r2;
    std::swap(m[piv], m[col]);
    for (int r2 = col + 1; r2 < 5; ++r2) {
      const long double f = m[r2][col] / m[col][col];
      for (int c2 = col; c2 < 6; ++c2) m[r2][c2] -= f * m[col][c2];
    }
  }
  long double sol[5];
  for (int r2 = 5; r2-- > 0;) {
    long double acc = m[r2][5];
    for (int c2 = r2 + 1; c2 < 5; ++c2) acc -= m[r2][c2] * sol[c2];
    sol[r2] = acc / m[r2][r2];
  }
  HalfReturnFit fit;
  fit.lin = sol[0];
  fit.sigma_hat = sol[1];
  fit.c_hat = sol[2];
  return fit;
}

}  // namespace twocyc
