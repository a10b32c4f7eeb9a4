#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "eltrans/seqcore.hpp"

namespace eltrans {

/// Splitting types reachable by one negative elementary transformation:
/// a' + b' = a + b + 1 and b < b' <= a' <= a, ordered by decreasing a'.
/// Empty for a balanced pair.
std::vector<SplittingPair> successors(SplittingPair p);

struct EnumerationLimits {
  int max_j = 14;

  /// Start pairs with gap above 2 * max_j + 1 are rejected.
  void check(SplittingPair start) const;
};

/// Depth-first walk over every maximal sequence from start, in canonical
/// order. The callback sees each sequence exactly once; the buffer is
/// reused between calls.
void for_each_maximal(SplittingPair start,
                      const std::function<void(const PairList&)>& visit,
                      const EnumerationLimits& limits = {});

std::vector<AdmissibleSequence> enumerate_maximal(SplittingPair start,
                                                  const EnumerationLimits& limits = {});

/// Number of maximal sequences from start; depends only on the gap a - b.
std::uint64_t count_maximal(SplittingPair start, const EnumerationLimits& limits = {});

struct ZwPair {
  int z = 0;
  int w = 0;

  friend constexpr auto operator<=>(const ZwPair&, const ZwPair&) = default;
};

struct AttainedSet {
  int j = 0;
  int epsilon = 0;
  std::set<ZwPair> pairs;
  std::set<int> k_values;
};

/// (z, w) over all maximal sequences starting at (j, -j + eps).
AttainedSet attained_invariants(int j, int epsilon, const EnumerationLimits& limits = {});

/// An element of an audit set: a (z, w) pair, a single integer, or a
/// whole sequence.
using Witness = std::variant<ZwPair, int, PairList>;

struct ClaimedRange {
  std::string name;
  int lo = 0;
  int hi = 0;
};

struct AuditReport {
  std::string claim;
  int j = 0;
  int epsilon = 0;
  std::vector<ClaimedRange> claimed;
  std::vector<PairList> claimed_sequences;
  std::vector<Witness> attained;
  std::vector<Witness> missing;
  std::vector<Witness> extra;
  std::map<std::string, int> metrics;
  bool holds = false;
};

/// Every (z, w) in the claimed box is attained, and nothing outside it.
AuditReport audit_box_coverage(int j, int epsilon, const EnumerationLimits& limits = {});

/// Attained values of z + w (epsilon = 0) fill exactly [j, j^2].
AuditReport audit_defect_range(int j, const EnumerationLimits& limits = {});

/// All attained (z, w) lie in the claimed box and the lower bound on w is
/// reached. Unattained lower bound shows up in `missing` as the integer w_min.
AuditReport audit_invariant_bounds(int j, int epsilon, const EnumerationLimits& limits = {});

struct SplitAudit {
  /// Sequences with c2_defect = j(j - eps) versus the split sequence.
  AuditReport defect_characterizes_split;
  /// Non-split sequences reaching the maximal w land in `extra`.
  AuditReport max_w_characterizes_split;

  bool holds() const {
    return defect_characterizes_split.holds && max_w_characterizes_split.holds;
  }
};

SplitAudit audit_split_characterization(int j, int epsilon,
                                        const EnumerationLimits& limits = {});

}  // namespace eltrans
