#include <stdexcept>

#include "eltrans/formal_bundle.hpp"

namespace eltrans {

namespace {

Bivariate on_D(const Bivariate& f) { return f.u_coefficient(0); }

// Largest z-exponent of a column, and the coefficients at that exponent.
struct ColumnLead {
  int degree;
  Rational top;
  Rational bottom;
};

ColumnLead column_lead(const Matrix2<Bivariate>& m, int col) {
  const auto w0 = m(0, col).z_window();
  const auto w1 = m(1, col).z_window();
  if (!w0 && !w1) throw std::domain_error("singular restriction to D: zero column");
  int d = w0 ? w0->hi : w1->hi;
  if (w0 && w1) d = std::max(w0->hi, w1->hi);
  return {d, m(0, col).coeff(d, 0), m(1, col).coeff(d, 0)};
}

Matrix2<Bivariate> adjugate(const Matrix2<Bivariate>& m) {
  Matrix2<Bivariate> a;
  a << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return a;
}

}  // namespace

BirkhoffFactors birkhoff_factor(const Matrix2<Bivariate>& input) {
  Matrix2<Bivariate> m = input.unaryExpr(&on_D);
  Matrix2<Bivariate> right = Matrix2<Bivariate>::Identity();

  // Column reduction: while the leading coefficient matrix is singular,
  // cancel the leading term of the higher column with a z-polynomial
  // multiple of the other. The sum of column degrees strictly drops and
  // is bounded below by the degree of det m.
  ColumnLead c0 = column_lead(m, 0);
  ColumnLead c1 = column_lead(m, 1);
  for (;;) {
    const Rational lead_det = c0.top * c1.bottom - c1.top * c0.bottom;
    if (!lead_det.is_zero()) break;
    // leading columns are parallel: lead(c1) = alpha * lead(c0)
    const Rational alpha = c0.top.is_zero() ? c1.bottom / c0.bottom : c1.top / c0.top;
    Matrix2<Bivariate> step = Matrix2<Bivariate>::Identity();
    if (c1.degree >= c0.degree) {
      step(0, 1) = Bivariate::monomial(c1.degree - c0.degree, 0, -alpha);
    } else {
      step(1, 0) = Bivariate::monomial(c0.degree - c1.degree, 0, -(Rational(1) / alpha));
    }
    m = (m * step).eval();
    right = (right * step).eval();
    c0 = column_lead(m, 0);
    c1 = column_lead(m, 1);
  }

  // m = V diag(z^d0, z^d1) with V polynomial in 1/z and V(infinity) the
  // leading coefficient matrix, hence invertible over C[1/z].
  Matrix2<Bivariate> v = m;
  for (int r = 0; r < 2; ++r) {
    v(r, 0) = v(r, 0).shifted(-c0.degree, 0);
    v(r, 1) = v(r, 1).shifted(-c1.degree, 0);
  }
  const Bivariate det_v = v(0, 0) * v(1, 1) - v(0, 1) * v(1, 0);
  const auto window = det_v.z_window();
  if (!window || window->lo != 0 || window->hi != 0)
    throw std::domain_error("singular restriction to D: determinant is not a unit times a z-power");
  const Rational inv = Rational(1) / det_v.coeff(0, 0);

  BirkhoffFactors out;
  out.left = adjugate(v) * Bivariate(inv);
  out.right = right;
  out.exponents = {c0.degree, c1.degree};
  return out;
}

}  // namespace eltrans
