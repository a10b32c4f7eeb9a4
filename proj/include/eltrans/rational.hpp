#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace eltrans {

/// Exact rational number. Thin value wrapper over mpq_class so that
/// arithmetic never yields a GMP expression template (Eigen and `auto`
/// both need concrete results).
class Rational {
 public:
  Rational() = default;
  Rational(int n) : q_(n) {}  // NOLINT: implicit like a numeric literal
  Rational(long n, long d);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Accepts "n" or "n/d" with optional sign; throws ParseError.
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  std::string str() const { return q_.get_str(); }
  const mpq_class& value() const { return q_; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

}  // namespace eltrans

namespace Eigen {

template <>
struct NumTraits<eltrans::Rational> : GenericNumTraits<eltrans::Rational> {
  typedef eltrans::Rational Real;
  typedef eltrans::Rational NonInteger;
  typedef eltrans::Rational Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 20,
    MulCost = 40
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
