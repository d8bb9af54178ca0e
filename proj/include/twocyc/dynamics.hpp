#pragma once

#include <string>
#include <vector>

#include "twocyc/certify.hpp"
#include "twocyc/unipoly.hpp"

namespace twocyc {

// Map f(x) = -x + a2 x^2 + ... + ad x^d with exact rational coefficients,
// evaluated in extended precision on demand.
struct ConcreteMap {
  int degree = 2;
  std::vector<Rat> coeff;  // a2..ad

  static ConcreteMap from_coeffs(std::vector<Rat> a);
  RatPoly poly() const;  // f as an exact polynomial
  long double eval(long double x) const;
};

struct Orbit {
  long double x = 0, y = 0;  // representative point and its image
  Rat enclosure_lo, enclosure_hi;  // exact bracket around x with a sign change
  long double residual = 0;        // |f(f(x)) - x| at the reported x
};

struct OrbitReport {
  std::vector<Orbit> orbits;
  std::vector<long double> fixed_points;  // within the window
  int fixed_point_count = 0;              // exact (Sturm) count in the window
  long double window = 0;                 // radius of the symmetric window
  long double tol = 0;
  bool non_isolated = false;  // f(f(x)) == x identically: involution
  int orbits_partner_outside = 0;  // roots whose partner escapes the window
  int grid_per_side = 0;
};

struct ScanOptions {
  int grid_per_side = 10000;         // log-spaced sample points per sign
  long double inner_fraction = 1e-16L;  // innermost sample = window * fraction
  long double tol = 1e-10L;
  long double separation = 1e-9L;  // orbit points closer than this are suspect
  bool parallel = true;
};

// Signs of h at the grid points; the OpenMP kernel and its serial reference
// produce identical output.
std::vector<int> scan_signs_serial(const RatPoly& h, const std::vector<long double>& grid);
std::vector<int> scan_signs_parallel(const RatPoly& h, const std::vector<long double>& grid);

// Counts isolated 2-periodic orbits {x, y} with both points inside the
// symmetric window (-radius, radius). Roots of h = (f(f(x)) - x)/x^3 are
// located by a log-grid sign scan plus bisection and every reported orbit is
// confirmed by an exact rational sign change of h, with fixed points excluded
// exactly via Sturm counts of f(x) - x over the bracket.
OrbitReport count_2periodic(const ConcreteMap& map, long double radius,
                            const ScanOptions& opts = {});

struct StaircaseStep {
  std::vector<Rat> params;  // a2..ad after this perturbation
  int orbit_count = 0;
  std::vector<long double> orbit_xs;
};

struct StaircaseResult {
  bool ok = false;
  std::vector<StaircaseStep> steps;
  OrbitReport final_report;
  std::string detail;
};

struct StaircaseOptions {
  long double x_base = 1e-1L;  // largest orbit scale
  long double ratio = 1e-1L;   // scale shrink between successive orbits
  int attempts = 3;            // retries with smaller scales
  ScanOptions scan;
};

// Realizes the m-1 orbits promised by a lower-bound certificate: each step
// flips the sign of the highest still-vanishing constant by solving the
// certificate's linearized gradient system, shrinking scales geometrically.
StaircaseResult staircase(const Certificate& cert, const StaircaseOptions& opts = {});

struct NullVerdict {
  bool ok = false;
  long double radius = 0;  // monotonicity window actually used
  int ff_roots = 0;        // roots of g(g(x)) - x in the window (exact)
  int f_roots = 0;         // roots of g(x) - x in the window (exact)
};

// Orientation-preserving maps g(x) = x + c2 x^2 + ...: no 2-periodic orbits
// in a window where g is increasing. Exact: root counts of g(g(x)) - x and
// g(x) - x agree on the window.
NullVerdict orientation_preserving_null(const std::vector<Rat>& c, long double radius);

// Half-return map of the polar family dr/dtheta = delta r^(2l+1) +
// gamma r^(4l+1) with delta = -sigma/pi, gamma = -(c + (2l+1) sigma^2/2)/pi.
struct HalfReturnProbe {
  int ell = 1;
  int sigma = 1;
  long double c = 0;

  long double delta() const;
  long double gamma() const;
};

// Pi_+(x0) = -r(pi; x0) by adaptive embedded Runge-Kutta integration.
long double half_return_rk(const HalfReturnProbe& probe, long double x0,
                           long double rtol = 1e-12L);
// Same value through the separable closed-form antiderivative.
long double half_return_closed(const HalfReturnProbe& probe, long double x0);

struct HalfReturnFit {
  long double lin = 0;        // coefficient of x (expected -1)
  long double sigma_hat = 0;  // coefficient of x^(2l+1)
  long double c_hat = 0;      // coefficient of x^(4l+1)
};

// Least-squares Taylor fit of Pi_+ over a geometric grid of base points.
HalfReturnFit half_return_fit(const HalfReturnProbe& probe, long double x_lo,
                              long double x_hi, int npoints);

}  // namespace twocyc
