#include <Eigen/SparseCore>
#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "eltrans/errors.hpp"
#include "eltrans/exact_rank.hpp"
#include "eltrans/formal_bundle.hpp"

// Cech complex of E on the n-th infinitesimal neighbourhood for the cover
// {chart 0, chart 1}, written in the chart-1 frame:
//
//   delta(s0, s1) = s1 - T s0,
//
// with s0 a vector of monomials z^a u^i (a >= 0) and s1 a vector of
// monomials zeta^b v^i = z^(i-b) u^i (b >= 0). Chart-1 cochains span exactly
// the overlap monomials z^l u^i with l <= i, so H^1 is the space P of
// monomials with l > i modulo the projection of T s0.
//
// Since T^-1 has z-exponents >= lo(T^-1), every z^l u^i e_k with
// l >= R = max(0, -lo(T^-1)) equals T applied to a chart-0 cochain. So H^1
// is computed exactly on the window i < l <= L for any L >= R, using only
// chart-0 generators whose image can reach that window.

namespace eltrans {

namespace {

template <int Rank>
struct ExponentRange {
  int lo = 0;
  int max_abs = 0;
};

template <int Rank>
ExponentRange<Rank> exponent_range(const SquareMatrix<Bivariate, Rank>& m) {
  ExponentRange<Rank> out;
  bool first = true;
  for (Eigen::Index r = 0; r < Rank; ++r)
    for (Eigen::Index c = 0; c < Rank; ++c)
      if (const auto w = m(r, c).z_window()) {
        out.lo = first ? w->lo : std::min(out.lo, w->lo);
        out.max_abs = std::max({out.max_abs, std::abs(w->lo), std::abs(w->hi)});
        first = false;
      }
  return out;
}

// Codomain monomial z^l u^i in row k, for i < l <= window.
class CodomainIndex {
 public:
  CodomainIndex(int rank, int max_order, int window) : window_(window) {
    offsets_.reserve(static_cast<std::size_t>(max_order) + 2);
    Eigen::Index at = 0;
    for (int i = 0; i <= max_order; ++i) {
      offsets_.push_back(at);
      at += static_cast<Eigen::Index>(std::max(window - i, 0)) * rank;
    }
    size_ = at;
  }

  Eigen::Index size() const { return size_; }
  bool contains(int i, int l) const { return l > i && l <= window_; }
  Eigen::Index operator()(int k, int i, int l) const {
    const int per_row = window_ - i;
    return offsets_[static_cast<std::size_t>(i)] + static_cast<Eigen::Index>(k) * per_row +
           (l - i - 1);
  }

 private:
  int window_;
  std::vector<Eigen::Index> offsets_;
  Eigen::Index size_ = 0;
};

}  // namespace

template <int Rank>
int cech_h1(const Transition<Rank>& t, int max_order, int window) {
  if (max_order < 0) throw std::invalid_argument("negative u-order for Cech computation");
  if (max_order > t.truncation())
    throw TruncationError("Cech u-order " + std::to_string(max_order) + " exceeds truncation " +
                          std::to_string(t.truncation()));

  const SquareMatrix<Bivariate, Rank> m =
      t.matrix().unaryExpr([max_order](const Bivariate& f) { return f.truncated(max_order); });
  const int lo = exponent_range<Rank>(m).lo;
  // T^-1 = adj(T) / (kappa z^c); adj has the entries of T (rank 2) or 1 (rank 1)
  const int lo_inverse = (Rank == 1 ? 0 : lo) - t.det_exponent();
  const int covering = std::max(0, -lo_inverse);
  const int top = std::max(window, covering);

  const CodomainIndex rows(Rank, max_order, top);
  const int max_a = top - lo;

  std::vector<Eigen::Triplet<Rational>> entries;
  Eigen::Index column = 0;
  for (int k = 0; k < Rank; ++k)
    for (int i = 0; i <= max_order; ++i)
      for (int a = 0; a <= max_a; ++a, ++column)
        for (int r = 0; r < Rank; ++r)
          for (const auto& [e, c] : m(r, k).terms()) {
            const int order = e.u + i;
            if (order > max_order) break;
            const int l = e.z + a;
            if (rows.contains(order, l)) entries.emplace_back(rows(r, order, l), column, c);
          }

  Eigen::SparseMatrix<Rational> delta(rows.size(), column);
  delta.setFromTriplets(entries.begin(), entries.end());
  return static_cast<int>(rows.size() - static_cast<Eigen::Index>(exact_rank(delta)));
}

template <int Rank>
int cech_w(const Transition<Rank>& t, const CechOptions& options) {
  const int n = options.max_order.value_or(t.truncation());
  const int window =
      options.window.value_or(2 * exponent_range<Rank>(t.matrix()).max_abs + n);
  if (n > t.truncation())
    throw TruncationError("Cech u-order " + std::to_string(n) + " exceeds truncation " +
                          std::to_string(t.truncation()));

  const int value = cech_h1(t, n, window);
  int check = 0;
  if (n + 1 <= t.truncation()) {
    check = cech_h1(t, n + 1, window + 1);
  } else if (n >= 1) {
    check = cech_h1(t, n - 1, std::max(window - 1, 0));
  } else {
    throw TruncationError("stabilization check needs at least one known u-order");
  }
  if (check != value)
    throw InstabilityError("Cech dimension not stable: " + std::to_string(value) + " vs " +
                           std::to_string(check) + " at neighbouring truncation");
  return value;
}

template int cech_h1<1>(const Transition<1>&, int, int);
template int cech_h1<2>(const Transition<2>&, int, int);
template int cech_w<1>(const Transition<1>&, const CechOptions&);
template int cech_w<2>(const Transition<2>&, const CechOptions&);

}  // namespace eltrans
