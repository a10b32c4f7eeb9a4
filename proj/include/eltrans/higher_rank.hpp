#pragma once

#include <span>
#include <string>
#include <vector>

namespace eltrans {

/// Splitting type (a(i,1) >= ... >= a(i,r)) of a rank-r bundle on D.
using SplittingTuple = std::vector<int>;

enum class RankRViolation {
  too_small,       // a tuple has fewer than two entries
  unsorted,        // entries not non-increasing
  rank_mismatch,   // tuples of different length
  sum_increment,   // degree does not grow by exactly one per step
};

std::string_view violation_label(RankRViolation v);

struct RankRValidation {
  std::vector<RankRViolation> violated;
  bool valid() const { return violated.empty(); }
  std::string describe() const;
};

/// Necessary conditions only; the full legality of each rank-r step is
/// not determined here. Throws ParseError on an empty list.
RankRValidation validate_rank_r(std::span<const SplittingTuple> seq);

/// sum_i max(-a(i,r) - 1, 0). Requires a valid sequence with
/// a(i, r-1) >= -1 for every i; otherwise throws DomainError.
int w_rank_r_exact(std::span<const SplittingTuple> seq);

/// sum_{i,k} max(-a(i,k) - 1, 0): an upper bound for h^0(R^1 pi_* E).
int w_rank_r_bound(std::span<const SplittingTuple> seq);

}  // namespace eltrans
