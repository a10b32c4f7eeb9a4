#include <doctest.h>

#include <random>

#include "eltrans/errors.hpp"
#include "eltrans/formal_bundle.hpp"

using namespace eltrans;

using B = Bivariate;

namespace {

// Enough u-orders for O(kD): h^1(O_D(-k + n)) vanishes once n >= k - 1.
int line_truncation(int k) { return std::abs(k) + 2; }

TransitionMatrix2 diagonal(int k0, int k1, int truncation) {
  TransitionMatrix2::Matrix m;
  m << B::z_power(k0), B(0), B(0), B::z_power(k1);
  return TransitionMatrix2(m, truncation);
}

std::vector<ExtensionCoefficient> random_p(std::mt19937& rng, int j) {
  std::uniform_int_distribution<int> num(-2, 2), den(1, 2), coin(0, 1);
  std::vector<ExtensionCoefficient> p;
  for (int i = 1; i <= 2 * j - 2; ++i)
    for (int l = i - j + 1; l <= j - 1; ++l)
      if (coin(rng)) p.push_back({i, l, Rational(num(rng), den(rng))});
  return p;
}

// Random matrix with entries in the given monomial family and determinant
// exactly 1: a product of elementary unipotent factors.
Matrix2<B> random_frame(std::mt19937& rng, bool chart0, int truncation) {
  std::uniform_int_distribution<int> coeff(-2, 2), deg(0, 2), ord(0, 2);
  Matrix2<B> a = Matrix2<B>::Identity();
  for (int step = 0; step < 3; ++step) {
    B f;
    for (int k = 0; k < 2; ++k) {
      const int i = ord(rng);
      const int d = deg(rng);
      // chart 0: z^d u^i; chart 1: zeta^d v^i = z^(i-d) u^i
      f += B::monomial(chart0 ? d : i - d, i, coeff(rng), truncation);
    }
    Matrix2<B> e = Matrix2<B>::Identity();
    if (step % 2 == 0) e(0, 1) = f;
    else e(1, 0) = f;
    a = (a * e).eval();
  }
  return a;
}

}  // namespace

TEST_CASE("rank 1: cech_w pins the convention to line_bundle_w") {
  for (int k = -5; k <= 5; ++k) {
    CAPTURE(k);
    CHECK(cech_w(line_transition(k, line_truncation(k))) == line_bundle_w(k));
  }
}

TEST_CASE("rank 1: h^1 grows with the infinitesimal order until it stabilizes") {
  // O(3D): h^1(O_D(-3 + n)) = 2, 1, 0 for n = 0, 1, 2
  const auto t = line_transition(3, 6);
  CHECK(cech_h1(t, 0, 10) == 2);
  CHECK(cech_h1(t, 1, 10) == 3);
  CHECK(cech_h1(t, 2, 10) == 3);
  CHECK(cech_h1(t, 5, 10) == 3);
}

TEST_CASE("additivity on diagonal rank 2") {
  for (int k = -3; k <= 4; ++k)
    for (int m = -3; m <= 4; ++m) {
      CAPTURE(k);
      CAPTURE(m);
      const int n = std::max(std::abs(k), std::abs(m)) + 2;
      CHECK(cech_w(diagonal(k, m, n)) == line_bundle_w(k) + line_bundle_w(m));
    }
}

TEST_CASE("split canonical bundles") {
  for (int j = 1; j <= 4; ++j) CHECK(cech_w(make_canonical(j)) == j * (j - 1) / 2);
  CHECK(cech_w(make_canonical(2, {{1, 1, 1}})) == 1);
}

TEST_CASE("window stabilization beyond defaults") {
  std::mt19937 rng(23);
  for (int j = 1; j <= 3; ++j)
    for (int trial = 0; trial < 3; ++trial) {
      const auto t = make_canonical(j, random_p(rng, j));
      const int w = cech_w(t);
      const int n = t.truncation();
      const int window = 2 * j + n;
      CHECK(cech_h1(t, n, window + 3) == w);
      CHECK(cech_h1(t, n - 1, window + 5) == w);
      CHECK(cech_w(t, {n - 1, window + 2}) == w);
    }
}

TEST_CASE("property: gauge invariance under chart-regular frame changes") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 10; ++trial) {
    const int j = 1 + trial % 3;
    const auto t = make_canonical(j, random_p(rng, j));
    const int n = t.truncation();
    const Matrix2<B> a0 = random_frame(rng, true, n);
    const Matrix2<B> a1 = random_frame(rng, false, n);
    const TransitionMatrix2 moved((a1 * t.matrix() * a0).eval(), n);
    CHECK(moved.det_exponent() == t.det_exponent());
    CHECK(cech_w(moved) == cech_w(t));
  }
}

TEST_CASE("error paths") {
  const auto t = make_canonical(2);
  CHECK_THROWS_AS(cech_w(t, {t.truncation() + 1, std::nullopt}), TruncationError);
  CHECK_THROWS_AS(cech_h1(t, t.truncation() + 1, 10), TruncationError);
  CHECK_THROWS_AS(cech_w(line_transition(2, 0)), TruncationError);
  // O(3D) is not stable at order 0 versus order 1
  CHECK_THROWS_AS(cech_w(line_transition(3, 3), {0, std::nullopt}), InstabilityError);
  CHECK_THROWS(cech_h1(t, -1, 4));
}
