#include "twocyc/certify.hpp"

#include <sstream>
#include <stdexcept>

namespace twocyc {

std::vector<MultiPoly> gradient(const MultiPoly& p, int nvars) {
  if (nvars > (p.ring() ? p.ring()->size() : 0))
    throw std::invalid_argument("gradient variable set exceeds ring");
  std::vector<MultiPoly> out;
  out.reserve(static_cast<size_t>(nvars));
  for (int i = 0; i < nvars; ++i) out.push_back(p.derivative(i));
  return out;
}

QuadExt determinant(std::vector<std::vector<QuadExt>> m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant needs a square matrix");
  QuadExt det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return QuadExt(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det = det * m[col][col];
    const QuadExt inv = m[col][col].inverse();
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const QuadExt factor = m[r][col] * inv;
      for (size_t c = col; c < n; ++c)
        m[r][c] = m[r][c] - factor * m[col][c];
    }
  }
  return det;
}

namespace {

std::vector<std::vector<QuadExt>> gradient_matrix(const ConstantsTable& table,
                                                  const std::vector<QuadExt>& point,
                                                  int m) {
  // matrix[i][j] = dV_{2j+3}/da_{i+2}(point), i, j = 0..m-2
  std::vector<std::vector<QuadExt>> mat(
      static_cast<size_t>(m - 1), std::vector<QuadExt>(static_cast<size_t>(m - 1), QuadExt(0)));
  for (int j = 0; j + 1 < m; ++j) {
    const auto grads = gradient(table.v(2 * j + 3), m - 1);
    for (int i = 0; i + 1 < m; ++i)
      mat[static_cast<size_t>(i)][static_cast<size_t>(j)] = grads[static_cast<size_t>(i)].evaluate(point);
  }
  return mat;
}

}  // namespace

Certificate certify_lower(const std::vector<QuadExt>& point, int d,
                          const GroebnerOptions& opts) {
  const WeakPointResult wp = weak_point_order(point, d, opts);
  if (wp.all_vanish)
    throw std::domain_error(
        "all stability constants vanish at the point (trivial involution); "
        "no finite weak-point order to certify");

  Certificate cert;
  cert.degree = d;
  cert.point = point;
  cert.order = wp.order;
  cert.witness_index = wp.first_nonzero_k;
  cert.witness_value = wp.value;

  const int m = wp.order + 1;  // V_3..V_{2m-1} vanish, V_{2m+1} != 0
  if (m >= 2) {
    ConstantsTable table = constants_table(d, 2 * m - 1, opts);
    cert.matrix = gradient_matrix(table, point, m);
    cert.determinant = determinant(cert.matrix);
  }

  std::ostringstream os;
  if (!cert.determinant.is_zero()) {
    cert.kind = Certificate::Kind::lower_bound;
    cert.certified = true;
    cert.proposition = "gradient-independence lower bound";
    os << "cyclicity exactly " << cert.order << " (weak point of order " << cert.order
       << ", independent gradients)";
  } else {
    cert.kind = Certificate::Kind::upper_bound;
    cert.certified = false;
    cert.proposition = "weak-point order upper bound";
    os << "upper bound " << cert.order << " only (gradient matrix is singular)";
  }
  cert.verdict = os.str();
  return cert;
}

Certificate even_construction(int n) {
  if (n < 1) throw std::invalid_argument("even construction needs n >= 1");
  const int d = 2 * n;
  const int top = 4 * n - 1;

  ConstantsTable table = stability_constants(d, top);
  std::vector<QuadExt> point(static_cast<size_t>(d - 1), QuadExt(0));
  point.back() = QuadExt(1);  // a_d = 1

  Certificate cert;
  cert.degree = d;
  cert.point = point;
  cert.order = d - 2;
  cert.witness_index = top;
  cert.witness_value = table.w(top).evaluate(point);
  if (!(cert.witness_value == QuadExt(Rat(-2 * n))))
    throw std::logic_error("W_{4n-1}(0,...,0,1) != -2n");
  for (int j = 3; j < top; ++j)
    if (!table.w(j).evaluate(point).is_zero())
      throw std::logic_error("W_" + std::to_string(j) + " does not vanish at (0,...,0,1)");

  // Gradients of W_{2k+1}, k = 1..2n-2, over a2..a_{2n-1}.
  const int rows = 2 * n - 2;
  cert.matrix.assign(static_cast<size_t>(rows), std::vector<QuadExt>(static_cast<size_t>(rows), QuadExt(0)));
  for (int k = 1; k <= rows; ++k) {
    const auto grads = gradient(table.w(2 * k + 1), rows);
    for (int i = 0; i < rows; ++i) {
      const QuadExt entry = grads[static_cast<size_t>(i)].evaluate(point);
      // expected single nonzero entry per vector
      const int expect_pos = k <= n - 1 ? 2 * k : 2 * (k - n) + 1;  // 1-indexed
      const Rat expect_val = k <= n - 1 ? Rat(-2) : Rat(-2 * (k + 1));
      if (i + 1 == expect_pos) {
        if (!(entry == QuadExt(expect_val)))
          throw std::logic_error("gradient entry mismatch in even construction");
      } else if (!entry.is_zero()) {
        throw std::logic_error("unexpected nonzero gradient entry in even construction");
      }
      cert.matrix[static_cast<size_t>(i)][static_cast<size_t>(k - 1)] = entry;
    }
  }
  cert.determinant = determinant(cert.matrix);
  if (cert.determinant.is_zero())
    throw std::logic_error("even-construction gradient matrix is singular");

  cert.kind = Certificate::Kind::lower_bound;
  cert.certified = true;
  cert.proposition = "gradient-independence lower bound (stability constants)";
  std::ostringstream os;
  os << "d=" << d << ": weak point of order " << cert.order << " at (0,...,0,1), W_" << top
     << " = " << -2 * n << "; cyclicity at least " << cert.order;
  cert.verdict = os.str();
  return cert;
}

Certificate odd_4m3_construction(int m) {
  if (m < 0) throw std::invalid_argument("odd construction needs m >= 0");
  const int d = 4 * m + 3;
  const int top = 8 * m + 5;

  const RingPtr consts = Ring::coefficients(1);  // constants-only ring
  TruncSeries f(consts, top);
  f.set_coeff(1, MultiPoly::constant(consts, Rat(-1)));
  f.set_coeff(2 * m + 2, MultiPoly::constant(consts, Rat(1)));
  f.set_coeff(4 * m + 3, MultiPoly::constant(consts, Rat(-(m + 1))));

  const TruncSeries ff = series_compose(f, f, top);
  if (!(ff.coeff(1).constant_term() == 1))
    throw std::logic_error("f(f(x)) must start with x");
  for (int j = 2; j < top; ++j)
    if (!ff.coeff(j).is_zero())
      throw std::logic_error("unexpected low-order term in f(f(x)) at x^" + std::to_string(j));

  const Rat expected = Rat((m + 1) * (5 * m + 4)) * Rat(4 * m + 3) / 3;
  const Rat lead = ff.coeff(top).constant_term();
  if (lead != expected)
    throw std::logic_error("leading coefficient of f(f(x)) - x mismatch");

  Certificate cert;
  cert.kind = Certificate::Kind::weak_point_order;
  cert.degree = d;
  cert.point.assign(static_cast<size_t>(d - 1), QuadExt(0));
  cert.point[static_cast<size_t>(2 * m)] = QuadExt(1);           // a_{2m+2}
  cert.point[static_cast<size_t>(4 * m + 1)] = QuadExt(Rat(-(m + 1)));  // a_{4m+3}
  cert.order = d - 2;
  cert.witness_index = top;
  cert.witness_value = QuadExt(lead);
  cert.certified = true;
  cert.proposition = "explicit weak point of order d-2 for d = 4m+3";
  std::ostringstream os;
  os << "d=" << d << ": f(f(x)) = x + " << rat_to_string(lead) << "*x^" << top
     << " + O(x^" << top + 1 << "), weak point of order " << cert.order;
  cert.verdict = os.str();
  return cert;
}

TruncSeries involution_truncate(int d, int order) {
  if (d < 2) throw std::invalid_argument("involution degree must be >= 2");
  if (order < d) order = d;
  const RingPtr ring = Ring::coefficients(d, "b");
  TruncSeries g(ring, d);
  g.set_coeff(1, MultiPoly::constant(ring, Rat(1)));
  for (int j = 2; j <= d; ++j) g.set_coeff(j, MultiPoly::variable(ring, j - 2));

  const TruncSeries ginv = series_reverse(g, d);
  const TruncSeries h = series_compose(g, -ginv, d);

  TruncSeries padded(ring, order);
  for (int j = 1; j <= d; ++j) padded.set_coeff(j, h.coeff(j));
  return padded;
}

SolveB7Result solve_b7() {
  const int order = 11;
  const TruncSeries h9 = involution_truncate(9, order);
  const TruncSeries ff = series_compose(h9, h9, order);
  for (int j = 2; j < order; ++j)
    if (!ff.coeff(j).is_zero())
      throw std::logic_error("h9 composed with itself must be x + O(x^11)");

  SolveB7Result res;
  res.w11 = ff.coeff(order);
  const int b7_index = 5;  // ring is b2..b9
  res.b7_coeff = res.w11.derivative(b7_index);
  if (!res.b7_coeff.derivative(b7_index).is_zero())
    throw std::logic_error("W_11 is not linear in b7");
  const MultiPoly b7 = MultiPoly::variable(res.w11.ring(), b7_index);
  res.remainder = res.w11 - res.b7_coeff * b7;

  // b7 = -remainder / coeff, denominator normalized to integer content 1
  // with a positive leading coefficient.
  const MultiPoly den_norm = res.b7_coeff.normalized_integer();
  Rat scale = res.b7_coeff.leading_coeff() / den_norm.leading_coeff();
  res.b7.num = (-res.remainder).scale(Rat(1) / scale);
  res.b7.den = den_norm;
  return res;
}

}  // namespace twocyc
