#pragma once

#include <Eigen/Core>
#include <compare>
#include <limits>
#include <map>
#include <optional>

#include "eltrans/rational.hpp"

namespace eltrans {

/// Exponent of a monomial z^z u^u on the chart overlap. Ordered by u-order
/// first so that iteration walks the u-adic filtration.
struct Exponent {
  int u = 0;
  int z = 0;

  friend constexpr auto operator<=>(const Exponent&, const Exponent&) = default;
};

struct ZWindow {
  int lo = 0;
  int hi = 0;
};

/// Laurent polynomial in z, power series in u truncated after u^N, with
/// exact rational coefficients. Terms above the truncation are unknown,
/// not zero; results of arithmetic carry the smaller truncation.
class TruncatedBivariate {
 public:
  using Terms = std::map<Exponent, Rational>;
  static constexpr int exact = std::numeric_limits<int>::max();

  TruncatedBivariate() = default;
  TruncatedBivariate(int c) : TruncatedBivariate(Rational(c)) {}  // NOLINT
  explicit TruncatedBivariate(const Rational& c, int truncation = exact);

  static TruncatedBivariate monomial(int z, int u, const Rational& c = 1, int truncation = exact);
  static TruncatedBivariate z_power(int k, int truncation = exact) {
    return monomial(k, 0, 1, truncation);
  }

  int truncation() const { return truncation_; }
  bool is_exact() const { return truncation_ == exact; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int z, int u) const;

  /// Range of z-exponents over all stored terms; empty for zero.
  std::optional<ZWindow> z_window() const;
  /// Range of z-exponents among terms of the given u-order.
  std::optional<ZWindow> z_window_at(int u) const;

  /// Discards terms with u-order above n; truncation becomes min(N, n).
  TruncatedBivariate truncated(int n) const;
  /// Multiplies by z^dz u^du. A negative du divides by a power of u and
  /// requires every term to have u-order >= -du.
  TruncatedBivariate shifted(int dz, int du) const;
  /// The u^n coefficient as a Laurent polynomial in z (u-order 0, exact).
  TruncatedBivariate u_coefficient(int n) const;

  /// All z-exponents non-negative: regular on the chart with coordinates (z, u).
  bool regular_on_chart0() const;
  /// Every term z^l u^i has l <= i, i.e. is a monomial in zeta = 1/z and v = zu.
  bool regular_on_chart1() const;

  TruncatedBivariate& operator+=(const TruncatedBivariate& o);
  TruncatedBivariate& operator-=(const TruncatedBivariate& o);
  TruncatedBivariate& operator*=(const TruncatedBivariate& o);

  friend TruncatedBivariate operator+(TruncatedBivariate a, const TruncatedBivariate& b) {
    return a += b;
  }
  friend TruncatedBivariate operator-(TruncatedBivariate a, const TruncatedBivariate& b) {
    return a -= b;
  }
  friend TruncatedBivariate operator*(const TruncatedBivariate& a, const TruncatedBivariate& b);
  friend TruncatedBivariate operator-(TruncatedBivariate a);

  /// Same truncation and same coefficients.
  friend bool operator==(const TruncatedBivariate&, const TruncatedBivariate&) = default;

 private:
  void add_term(const Exponent& e, const Rational& c);

  Terms terms_;
  int truncation_ = exact;
};

/// Agreement modulo u^(n+1), ignoring the recorded truncations.
bool equal_mod_u(const TruncatedBivariate& a, const TruncatedBivariate& b, int n);

std::ostream& operator<<(std::ostream& os, const TruncatedBivariate& f);

using Bivariate = TruncatedBivariate;

template <class Scalar, int Size>
using SquareMatrix = Eigen::Matrix<Scalar, Size, Size>;

template <class Scalar>
using Matrix2 = SquareMatrix<Scalar, 2>;

}  // namespace eltrans

namespace Eigen {

template <>
struct NumTraits<eltrans::TruncatedBivariate> : GenericNumTraits<eltrans::TruncatedBivariate> {
  typedef eltrans::TruncatedBivariate Real;
  typedef eltrans::TruncatedBivariate NonInteger;
  typedef eltrans::TruncatedBivariate Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 50,
    AddCost = 100,
    MulCost = 400
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
