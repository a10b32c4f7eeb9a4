#pragma once

#include <Eigen/SparseCore>
#include <cstddef>
#include <map>
#include <vector>

namespace eltrans {

/// Incremental row-echelon basis over an exact field. Vectors are sparse
/// maps from coordinate to nonzero coefficient; each stored basis vector is
/// monic at its smallest coordinate and no two share that pivot.
template <class Scalar>
class EchelonBasis {
 public:
  using Vector = std::map<Eigen::Index, Scalar>;

  /// Reduces v against the basis. Returns true (and keeps the remainder)
  /// if v was independent.
  bool insert(Vector v) {
    reduce(v);
    if (v.empty()) return false;
    const Scalar lead = v.begin()->second;
    for (auto& [k, c] : v) c /= lead;
    const Eigen::Index pivot = v.begin()->first;
    pivots_.emplace(pivot, std::move(v));
    return true;
  }

  bool contains(Vector v) const {
    reduce(v);
    return v.empty();
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  void reduce(Vector& v) const {
    auto it = v.begin();
    while (it != v.end()) {
      const auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        ++it;
        continue;
      }
      const Scalar factor = it->second;
      const Eigen::Index at = it->first;
      for (const auto& [k, c] : p->second) {
        auto [slot, inserted] = v.try_emplace(k, c * factor);
        if (!inserted) {
          slot->second -= c * factor;
          if (slot->second.is_zero()) v.erase(slot);
        } else {
          slot->second = -slot->second;
        }
      }
      // the pivot coordinate cancelled exactly; continue past it
      it = v.upper_bound(at);
    }
  }

  std::map<Eigen::Index, Vector> pivots_;
};

/// Exact rank of a sparse matrix, column by column.
template <class Scalar>
std::size_t exact_rank(const Eigen::SparseMatrix<Scalar>& m) {
  EchelonBasis<Scalar> basis;
  for (Eigen::Index col = 0; col < m.outerSize(); ++col) {
    typename EchelonBasis<Scalar>::Vector v;
    for (typename Eigen::SparseMatrix<Scalar>::InnerIterator it(m, col); it; ++it)
      if (!it.value().is_zero()) v.emplace(it.row(), it.value());
    basis.insert(std::move(v));
  }
  return basis.rank();
}

}  // namespace eltrans
