#include <doctest.h>

#include <algorithm>
#include <random>

#include "eltrans/enumerate.hpp"
#include "eltrans/errors.hpp"
#include "eltrans/exact_rank.hpp"
#include "eltrans/formal_bundle.hpp"

using namespace eltrans;

using B = Bivariate;

namespace {

TransitionMatrix2 diagonal(int k0, int k1, int truncation) {
  TransitionMatrix2::Matrix m;
  m << B::z_power(k0), B(0), B(0), B::z_power(k1);
  return TransitionMatrix2(m, truncation);
}

std::vector<ExtensionCoefficient> random_p(std::mt19937& rng, int j) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3), coin(0, 1);
  std::vector<ExtensionCoefficient> p;
  for (int i = 1; i <= 2 * j - 2; ++i)
    for (int l = i - j + 1; l <= j - 1; ++l)
      if (coin(rng)) p.push_back({i, l, Rational(num(rng), den(rng))});
  return p;
}

}  // namespace

TEST_CASE("make_canonical") {
  const auto t = make_canonical(2);
  CHECK(t.truncation() == 6);
  CHECK(t.det_exponent() == 0);
  CHECK(t(0, 0) == B::z_power(2, 6));
  CHECK(t(0, 1).is_zero());
  CHECK(t(1, 1) == B::z_power(-2, 6));

  const auto zu = make_canonical(2, {{1, 1, 1}});
  CHECK(zu(0, 1).coeff(1, 1) == Rational(1));
  CHECK(zu(0, 1).terms().size() == 1);

  CHECK_THROWS_AS(make_canonical(2, {{1, 2, 1}}), DomainError);
  CHECK_THROWS_AS(make_canonical(2, {{0, 0, 1}}), DomainError);
  CHECK_THROWS_AS(make_canonical(2, {{3, 1, 1}}), DomainError);
  CHECK_THROWS_AS(make_canonical(3, {{1, -2, 1}}), DomainError);
  CHECK_NOTHROW(make_canonical(3, {{1, -1, 1}, {4, 2, Rational(-1, 2)}}));
  CHECK_NOTHROW(make_canonical(1));
  for (int i = 0; i <= 4; ++i)
    for (int l = -4; l <= 4; ++l) CHECK_FALSE(CanonicalExtension::in_window(1, i, l));
  CHECK_THROWS(make_canonical(0));
}

TEST_CASE("Transition rejects bad input") {
  TransitionMatrix2::Matrix m;
  m << B::z_power(1) + B(1), B(0), B(0), B(1);
  CHECK_THROWS_AS(TransitionMatrix2(m, 2), DomainError);
  m << B::monomial(0, 0, 1, 1), B(0), B(0), B(1);
  CHECK_THROWS_AS(TransitionMatrix2(m, 2), TruncationError);
  CHECK_THROWS(TransitionMatrix2(m, -1));
}

TEST_CASE("restrict_to_infinitesimal") {
  const auto t = make_canonical(2, {{1, 1, 1}});
  const auto d = restrict_to_infinitesimal(t, 0);
  CHECK(d.truncation() == 0);
  CHECK(d(0, 1).is_zero());
  CHECK(d(0, 0) == B::z_power(2, 0));
  CHECK(restrict_to_infinitesimal(t, t.truncation()).matrix() == t.matrix());
  CHECK_THROWS_AS(restrict_to_infinitesimal(t, t.truncation() + 1), TruncationError);
  // restriction is idempotent
  CHECK(restrict_to_infinitesimal(restrict_to_infinitesimal(t, 3), 3).matrix() ==
        restrict_to_infinitesimal(t, 3).matrix());
}

TEST_CASE("splitting_type_on_D") {
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= a; ++b) {
      CHECK(splitting_type_on_D(diagonal(-a, -b, 0)) == SplittingPair{a, b});
      CHECK(splitting_type_on_D(diagonal(-b, -a, 0)) == SplittingPair{a, b});
    }

  TransitionMatrix2::Matrix m;
  m << B::z_power(1), B(1), B(0), B::z_power(-1);
  CHECK(splitting_type_on_D(TransitionMatrix2(m, 0)) == SplittingPair{0, 0});

  for (int j = 1; j <= 4; ++j) {
    std::mt19937 rng(static_cast<unsigned>(j));
    CHECK(splitting_type_on_D(make_canonical(j, random_p(rng, j))) == SplittingPair{j, -j});
  }
}

TEST_CASE("birkhoff_factor reproduces the diagonal") {
  TransitionMatrix2::Matrix m;
  m << B::z_power(2), B::z_power(1) + B(3), B(0), B::z_power(-2);
  const auto f = birkhoff_factor(m);
  Matrix2<B> d = f.left * m * f.right;
  CHECK(d(0, 1).is_zero());
  CHECK(d(1, 0).is_zero());
  CHECK(d(0, 0) == B::z_power(f.exponents[0]));
  CHECK(d(1, 1) == B::z_power(f.exponents[1]));
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      CHECK(f.right(r, c).regular_on_chart0());
      CHECK(f.left(r, c).regular_on_chart1());
    }
}

TEST_CASE("line_bundle_w") {
  CHECK(line_bundle_w(1) == 0);
  CHECK(line_bundle_w(3) == 3);
  CHECK(line_bundle_w(-5) == 0);
  CHECK(line_bundle_w(2) == 1);
}

TEST_CASE("elementary_transform") {
  const auto split = elementary_transform(diagonal(0, -2, 3));
  CHECK(splitting_type_on_D(split) == SplittingPair{2, 1});
  CHECK(split.truncation() == 2);

  const auto canonical = make_canonical(2);
  const auto next = elementary_transform(canonical);
  CHECK(splitting_type_on_D(next) == SplittingPair{2, -1});
  CHECK(next.det_exponent() == canonical.det_exponent() - 1);
  CHECK(next.truncation() == canonical.truncation() - 1);

  CHECK_THROWS_AS(elementary_transform(diagonal(1, 1, 3)), DomainError);
  CHECK_THROWS_AS(elementary_transform(diagonal(0, -2, 0)), TruncationError);
}

TEST_CASE("property: elementary_transform steps to a successor and raises the degree by 1") {
  std::mt19937 rng(42);
  for (int j = 2; j <= 3; ++j)
    for (int trial = 0; trial < 15; ++trial) {
      auto t = make_canonical(j, random_p(rng, j));
      SplittingPair type = splitting_type_on_D(t);
      int steps = 0;
      while (!type.balanced()) {
        const auto next = elementary_transform(t);
        const SplittingPair next_type = splitting_type_on_D(next);
        const auto allowed = successors(type);
        CHECK(std::find(allowed.begin(), allowed.end(), next_type) != allowed.end());
        CHECK(next_type.degree() == type.degree() + 1);
        CHECK(next.det_exponent() == t.det_exponent() - 1);
        t = next;
        type = next_type;
        ++steps;
      }
      CHECK(steps <= 2 * j);
    }
}

TEST_CASE("associated_sequence_of_bundle") {
  for (int j = 1; j <= 4; ++j)
    CHECK(associated_sequence_of_bundle(make_canonical(j)) == split_sequence(j, 0));

  const auto zu = associated_sequence_of_bundle(make_canonical(2, {{1, 1, 1}}));
  const auto all = enumerate_maximal({2, -2});
  CHECK(std::find(all.begin(), all.end(), zu) != all.end());
  CHECK(zu.pairs() == PairList{{2, -2}, {1, 0}, {1, 1}});

  CHECK(associated_sequence_of_bundle(make_canonical(1)).pairs() ==
        PairList{{1, -1}, {1, 0}, {1, 1}});

  const auto short_of_orders = restrict_to_infinitesimal(make_canonical(2), 2);
  CHECK_THROWS_AS(associated_sequence_of_bundle(short_of_orders), TruncationError);
}

TEST_CASE("invariants_of_bundle") {
  const auto two = invariants_of_bundle(make_canonical(2), true);
  CHECK(two.report.w == 1);
  CHECK(two.report.z == 3);
  CHECK(two.report.c2_defect == 4);
  CHECK(two.cech_w == 1);
  CHECK(two.agrees());

  const auto three = invariants_of_bundle(make_canonical(3));
  CHECK(three.report.w == 3);
  CHECK(three.report.z == 6);
  CHECK(three.report.c2_defect == 9);
  CHECK_FALSE(three.cech_w.has_value());

  const auto zu = invariants_of_bundle(make_canonical(3, {{1, 1, 1}}), true);
  CHECK(zu.agrees());
  REQUIRE(zu.cech_w.has_value());
  CHECK(*zu.cech_w == zu.report.w);
}

TEST_CASE("property: class window matches the gauge action by rank computation") {
  // Upper unipotent frame changes [[1, g], [0, 1]] T [[1, f], [0, 1]] with f
  // regular on chart 0 and g regular on chart 1 move p by z^j f + g z^-j.
  // A monomial is gauge-trivial iff it lies in the span of those images.
  for (int j = 2; j <= 3; ++j) {
    const int n = 2 * j + 2;
    const int reach = 3 * j + n;
    const auto key = [&](int i, int l) -> Eigen::Index { return i * (4 * reach + 1) + l + 2 * reach; };

    EchelonBasis<Rational> gauge;
    for (int i = 0; i <= n; ++i)
      for (int a = 0; a <= 2 * reach; ++a) {
        // chart-0 generators z^a u^i, then chart-1 generators z^(i-a) u^i
        const B f = B::z_power(j) * B::monomial(a, i);
        const B g = B::monomial(i - a, i) * B::z_power(-j);
        for (const B& image : {f, g}) {
          EchelonBasis<Rational>::Vector v;
          for (const auto& [e, c] : image.terms())
            if (std::abs(e.z) <= reach) v.emplace(key(e.u, e.z), c);
          if (!v.empty()) gauge.insert(v);
        }
      }

    int window = 0;
    for (int i = 0; i <= n; ++i)
      for (int l = -j - n; l <= j + n; ++l) {
        const bool trivial = gauge.contains({{key(i, l), Rational(1)}});
        CHECK(trivial == (l >= j || l <= i - j));
        if (i >= 1 && !trivial) {
          CHECK(CanonicalExtension::in_window(j, i, l));
          ++window;
        }
      }
    // nonremovable classes of u-order >= 1 plus the 2j - 1 on D itself fill
    // h^1 of the Hom line bundle O(2jD)
    CHECK(window + 2 * j - 1 == line_bundle_w(2 * j));
    CHECK(cech_w(line_transition(2 * j, n)) == line_bundle_w(2 * j));
  }
}

TEST_CASE("property: gauge-trivial terms do not change the associated sequence") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> num(-2, 2);
  for (int j = 2; j <= 3; ++j)
    for (int trial = 0; trial < 5; ++trial) {
      const auto p = random_p(rng, j);
      const auto base = make_canonical(j, p);
      TransitionMatrix2::Matrix m = base.matrix();
      for (int i = 0; i <= 2 * j + 2; ++i) {
        m(0, 1) += B::monomial(j + (i % 2), i, num(rng));
        m(0, 1) += B::monomial(i - j - (i % 3), i, num(rng));
      }
      const TransitionMatrix2 moved(m, base.truncation());
      CHECK(associated_sequence_of_bundle(moved) == associated_sequence_of_bundle(base));
    }
}
