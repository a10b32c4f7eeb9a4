#include "eltrans/higher_rank.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "eltrans/errors.hpp"

namespace eltrans {

std::string_view violation_label(RankRViolation v) {
  switch (v) {
    case RankRViolation::too_small: return "rank";
    case RankRViolation::unsorted: return "unsorted";
    case RankRViolation::rank_mismatch: return "rank-mismatch";
    case RankRViolation::sum_increment: return "sum-increment";
  }
  return "?";
}

std::string RankRValidation::describe() const {
  if (valid()) return "valid";
  std::string out = "violates";
  for (std::size_t k = 0; k < violated.size(); ++k) {
    out += k == 0 ? " " : ", ";
    out += violation_label(violated[k]);
  }
  return out;
}

RankRValidation validate_rank_r(std::span<const SplittingTuple> seq) {
  if (seq.empty()) throw ParseError("rank-r sequence must contain at least one tuple");

  bool too_small = false;
  bool unsorted = false;
  bool mismatch = false;
  bool increment = true;
  const std::size_t r = seq.front().size();
  const long base = std::accumulate(seq.front().begin(), seq.front().end(), 0L);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto& tuple = seq[i];
    if (tuple.size() < 2) too_small = true;
    if (tuple.size() != r) mismatch = true;
    if (!std::is_sorted(tuple.begin(), tuple.end(), std::greater<>())) unsorted = true;
    if (std::accumulate(tuple.begin(), tuple.end(), 0L) != base + static_cast<long>(i))
      increment = false;
  }

  RankRValidation v;
  if (too_small) v.violated.push_back(RankRViolation::too_small);
  if (unsorted) v.violated.push_back(RankRViolation::unsorted);
  if (mismatch) v.violated.push_back(RankRViolation::rank_mismatch);
  if (!increment) v.violated.push_back(RankRViolation::sum_increment);
  return v;
}

namespace {

void require_valid(std::span<const SplittingTuple> seq) {
  const auto v = validate_rank_r(seq);
  if (!v.valid()) throw std::invalid_argument("invalid rank-r sequence: " + v.describe());
}

}  // namespace

int w_rank_r_exact(std::span<const SplittingTuple> seq) {
  require_valid(seq);
  int w = 0;
  for (const auto& tuple : seq) {
    const std::size_t r = tuple.size();
    if (tuple[r - 2] < -1)
      throw DomainError(
          "exact rank-r formula needs a(i, r-1) >= -1 for every i; use w_rank_r_bound");
    w += std::max(-tuple[r - 1] - 1, 0);
  }
  return w;
}

int w_rank_r_bound(std::span<const SplittingTuple> seq) {
  require_valid(seq);
  int w = 0;
  for (const auto& tuple : seq)
    for (int a : tuple) w += std::max(-a - 1, 0);
  return w;
}

}  // namespace eltrans
