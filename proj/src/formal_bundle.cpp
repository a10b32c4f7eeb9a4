#include "eltrans/formal_bundle.hpp"

#include <algorithm>
#include <string>

#include "eltrans/errors.hpp"

namespace eltrans {

namespace {

template <int Rank>
Bivariate determinant(const SquareMatrix<Bivariate, Rank>& m) {
  static_assert(Rank == 1 || Rank == 2, "transition matrices of rank 1 or 2");
  if constexpr (Rank == 1) return m(0, 0);
  else return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

}  // namespace

template <int Rank>
Transition<Rank>::Transition(const Matrix& m, int truncation) : truncation_(truncation) {
  if (truncation < 0 || truncation == Bivariate::exact)
    throw std::invalid_argument("transition matrix needs a finite u-truncation >= 0");
  m_ = m.unaryExpr([truncation](const Bivariate& f) { return f.truncated(truncation); });
  for (Eigen::Index r = 0; r < Rank; ++r)
    for (Eigen::Index c = 0; c < Rank; ++c)
      if (m_(r, c).truncation() < truncation)
        throw TruncationError("matrix entry known to lower u-order than the requested truncation");

  const Bivariate det = determinant<Rank>(m_);
  if (det.terms().size() != 1 || det.terms().begin()->first.u != 0)
    throw DomainError("transition determinant is not a nonzero constant times a power of z");
  det_exponent_ = det.terms().begin()->first.z;
  det_unit_ = det.terms().begin()->second;
}

template class Transition<1>;
template class Transition<2>;

LineTransition line_transition(int k, int truncation) {
  LineTransition::Matrix m;
  m(0, 0) = Bivariate::z_power(k);
  return LineTransition(m, truncation);
}

CanonicalExtension::CanonicalExtension(int j, std::vector<ExtensionCoefficient> coefficients)
    : j_(j), coefficients_(std::move(coefficients)) {
  if (j < 1) throw std::invalid_argument("canonical extension needs j >= 1");
  for (const auto& e : coefficients_)
    if (!in_window(j, e.i, e.l))
      throw DomainError("coefficient (i, l) = (" + std::to_string(e.i) + ", " +
                        std::to_string(e.l) + ") outside the canonical window for j = " +
                        std::to_string(j));
}

Bivariate CanonicalExtension::polynomial() const {
  Bivariate p;
  for (const auto& e : coefficients_) p += Bivariate::monomial(e.l, e.i, e.c);
  return p;
}

TransitionMatrix2 make_canonical(const CanonicalExtension& ext) {
  const int j = ext.j();
  TransitionMatrix2::Matrix m;
  m << Bivariate::z_power(j), ext.polynomial(), Bivariate(0), Bivariate::z_power(-j);
  return TransitionMatrix2(m, 2 * j + 2);
}

TransitionMatrix2 make_canonical(int j, std::vector<ExtensionCoefficient> p) {
  return make_canonical(CanonicalExtension(j, std::move(p)));
}

TransitionMatrix2 restrict_to_infinitesimal(const TransitionMatrix2& t, int n) {
  if (n < 0) throw std::invalid_argument("negative infinitesimal order");
  if (n > t.truncation())
    throw TruncationError("order " + std::to_string(n) + " exceeds truncation " +
                          std::to_string(t.truncation()));
  return TransitionMatrix2(t.matrix(), n);
}

SplittingPair splitting_type_on_D(const TransitionMatrix2& t) {
  const auto f = birkhoff_factor(t.matrix());
  const int d0 = -f.exponents[0];
  const int d1 = -f.exponents[1];
  return {std::max(d0, d1), std::min(d0, d1)};
}

int line_bundle_w(int k) { return k <= 1 ? 0 : k * (k - 1) / 2; }

TransitionMatrix2 elementary_transform(const TransitionMatrix2& t) {
  if (t.truncation() < 1)
    throw TruncationError("elementary transformation needs at least one u-order beyond D");
  const auto f = birkhoff_factor(t.matrix());
  if (f.exponents[0] == f.exponents[1])
    throw DomainError("bundle is balanced on D; no elementary transformation to perform");

  // Frame change regular on each chart (constant in u), then order the
  // summands so the lowest-degree one, O_D(b) = z^(-b), sits second.
  Matrix2<Bivariate> diag = f.left * t.matrix() * f.right;
  if (f.exponents[0] > f.exponents[1]) {
    Matrix2<Bivariate> swap;
    swap << Bivariate(0), Bivariate(1), Bivariate(1), Bivariate(0);
    diag = (swap * diag * swap).eval();
  }

  // Kernel of E -> O_D(b): new frames (e1, u e2) on chart 0 and (e1, v e2)
  // on chart 1, so T' = diag(1, 1/(z u)) T diag(1, u).
  TransitionMatrix2::Matrix next;
  next(0, 0) = diag(0, 0);
  next(0, 1) = diag(0, 1).shifted(0, 1);
  next(1, 0) = diag(1, 0).shifted(-1, -1);
  next(1, 1) = diag(1, 1).shifted(-1, 0);
  return TransitionMatrix2(next, t.truncation() - 1);
}

AdmissibleSequence associated_sequence_of_bundle(const TransitionMatrix2& t) {
  PairList pairs{splitting_type_on_D(t)};
  TransitionMatrix2 current = t;
  while (!pairs.back().balanced()) {
    if (current.truncation() < 1)
      throw TruncationError("ran out of u-orders after " + std::to_string(pairs.size()) +
                            " splitting types; rebuild the matrix with a larger truncation");
    current = elementary_transform(current);
    pairs.push_back(splitting_type_on_D(current));
  }
  return AdmissibleSequence(std::move(pairs));
}

BundleInvariants invariants_of_bundle(const TransitionMatrix2& t, bool verify) {
  BundleInvariants out{invariants_report(associated_sequence_of_bundle(t)), std::nullopt};
  if (verify) out.cech_w = cech_w(t);
  return out;
}

}  // namespace eltrans
