#pragma once

#include <array>
#include <optional>
#include <vector>

#include "eltrans/bivariate.hpp"
#include "eltrans/seqcore.hpp"

// Coordinates: chart 0 is (z, u), chart 1 is (zeta, v) with zeta = 1/z and
// v = z u; the exceptional curve D is {u = 0} = {v = 0}. Every matrix entry
// is written in the overlap coordinates (z, u).
//
// A transition matrix T glues frames by s1 = T s0. The rank-1 transition
// z^k is the line bundle O(kD), whose restriction to D is O_D(-k).

namespace eltrans {

/// Transition matrix of a rank-`Rank` bundle on the formal neighbourhood
/// of D, known modulo u^(N+1). The determinant must be a constant times
/// z^c modulo u^(N+1).
template <int Rank>
class Transition {
 public:
  using Matrix = SquareMatrix<Bivariate, Rank>;

  /// Truncates every entry to order N and checks the determinant.
  /// Throws DomainError if it is not of the form kappa z^c.
  Transition(const Matrix& m, int truncation);

  const Matrix& matrix() const { return m_; }
  const Bivariate& operator()(int r, int c) const { return m_(r, c); }
  int truncation() const { return truncation_; }
  int det_exponent() const { return det_exponent_; }
  const Rational& det_unit() const { return det_unit_; }

 private:
  Matrix m_;
  int truncation_;
  int det_exponent_ = 0;
  Rational det_unit_;
};

using TransitionMatrix2 = Transition<2>;
using LineTransition = Transition<1>;

LineTransition line_transition(int k, int truncation);

struct ExtensionCoefficient {
  int i = 0;  // u-exponent
  int l = 0;  // z-exponent
  Rational c;
};

/// Coefficients of the off-diagonal entry of [[z^j, p], [0, z^-j]]. Only
/// the window 1 <= i <= 2j - 2, i - j + 1 <= l <= j - 1 carries
/// non-removable extension classes; anything else is rejected.
class CanonicalExtension {
 public:
  CanonicalExtension(int j, std::vector<ExtensionCoefficient> coefficients);

  static bool in_window(int j, int i, int l) {
    return i >= 1 && i <= 2 * j - 2 && l >= i - j + 1 && l <= j - 1;
  }

  int j() const { return j_; }
  const std::vector<ExtensionCoefficient>& coefficients() const { return coefficients_; }
  Bivariate polynomial() const;

 private:
  int j_;
  std::vector<ExtensionCoefficient> coefficients_;
};

/// [[z^j, p], [0, z^-j]] with u-truncation 2j + 2; splitting type (j, -j).
TransitionMatrix2 make_canonical(const CanonicalExtension& ext);
TransitionMatrix2 make_canonical(int j, std::vector<ExtensionCoefficient> p = {});

/// E restricted to the n-th infinitesimal neighbourhood (u-order <= n).
TransitionMatrix2 restrict_to_infinitesimal(const TransitionMatrix2& t, int n);

/// Birkhoff factorization of a Laurent matrix on D:
/// left * m * right = diag(z^e0, z^e1), with `left` polynomial in 1/z and
/// `right` polynomial in z, both of constant nonzero determinant.
struct BirkhoffFactors {
  Matrix2<Bivariate> left;
  Matrix2<Bivariate> right;
  std::array<int, 2> exponents{};
};

/// Column reduction of `m` (u-order 0 part only is used).
BirkhoffFactors birkhoff_factor(const Matrix2<Bivariate>& m);

/// Splitting type of E|_D, largest degree first.
SplittingPair splitting_type_on_D(const TransitionMatrix2& t);

/// h^0(R^1 pi_* O(kD)): 0 for k <= 1, k(k-1)/2 otherwise.
int line_bundle_w(int k);

struct CechOptions {
  /// u-order of the infinitesimal neighbourhood; defaults to the truncation.
  std::optional<int> max_order;
  /// Half-width of the z-window on the overlap; defaults to
  /// 2 * (largest |z-exponent| in T) + max_order.
  std::optional<int> window;
};

/// h^1 of E on the n-th infinitesimal neighbourhood for the two-chart
/// cover, by exact rank computation. No stabilization check.
template <int Rank>
int cech_h1(const Transition<Rank>& t, int max_order, int window);

/// h^0(Z, R^1 pi_* E) by truncated Cech cohomology. The value is
/// recomputed with one more (or, at full truncation, one fewer) u-order
/// and window step; disagreement throws InstabilityError.
template <int Rank>
int cech_w(const Transition<Rank>& t, const CechOptions& options = {});

/// Negative elementary transformation along the unique quotient
/// E -> O_D(b) of lowest degree. The result has splitting degree one
/// higher and one fewer known u-order.
TransitionMatrix2 elementary_transform(const TransitionMatrix2& t);

/// Splitting types of E = E_1, E_2, ... obtained by iterating
/// elementary_transform until the bundle is balanced on D.
AdmissibleSequence associated_sequence_of_bundle(const TransitionMatrix2& t);

struct BundleInvariants {
  InvariantReport report;
  /// Present when verification was requested.
  std::optional<int> cech_w;

  bool agrees() const { return !cech_w || *cech_w == report.w; }
};

BundleInvariants invariants_of_bundle(const TransitionMatrix2& t, bool verify = false);

extern template class Transition<1>;
extern template class Transition<2>;
extern template int cech_h1<1>(const Transition<1>&, int, int);
extern template int cech_h1<2>(const Transition<2>&, int, int);
extern template int cech_w<1>(const Transition<1>&, const CechOptions&);
extern template int cech_w<2>(const Transition<2>&, const CechOptions&);

}  // namespace eltrans
