#include "eltrans/enumerate.hpp"

#include <algorithm>
#include <limits>

#include "eltrans/errors.hpp"

namespace eltrans {

namespace {

int floor_div2(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

void walk(PairList& path, const std::function<void(const PairList&)>& visit) {
  const SplittingPair last = path.back();
  if (last.balanced()) {
    visit(path);
    return;
  }
  for (const auto& next : successors(last)) {
    path.push_back(next);
    walk(path, visit);
    path.pop_back();
  }
}

// Wire identifiers of the audited claims; part of the report format.
constexpr const char* kBoxCoverageClaim = "Thm0.2";
constexpr const char* kDefectRangeClaim = "Thm0.5";
constexpr const char* kDefectSplitClaim = "Prop0.4-ii-iv";
constexpr const char* kMaxWSplitClaim = "Prop0.4-iii";
constexpr const char* kBoundsClaim = "Lemma1.1";

template <class Set>
std::vector<Witness> as_witnesses(const Set& s) {
  return {s.begin(), s.end()};
}

void finish(AuditReport& r) { r.holds = r.missing.empty() && r.extra.empty(); }

}  // namespace

std::vector<SplittingPair> successors(SplittingPair p) {
  std::vector<SplittingPair> out;
  if (p.balanced() || p.a < p.b) return out;
  const int sum = p.degree() + 1;
  for (int b = p.b + 1; b <= floor_div2(sum); ++b) out.push_back({sum - b, b});
  return out;
}

void EnumerationLimits::check(SplittingPair start) const {
  if (start.a < start.b)
    throw std::invalid_argument("start pair must satisfy a >= b");
  if (start.gap() > 2 * max_j + 1)
    throw DomainError("enumeration capped at j = " + std::to_string(max_j) +
                      " (gap " + std::to_string(start.gap()) + " requested)");
}

void for_each_maximal(SplittingPair start, const std::function<void(const PairList&)>& visit,
                      const EnumerationLimits& limits) {
  limits.check(start);
  PairList path{start};
  path.reserve(static_cast<std::size_t>(start.gap()) + 1);
  walk(path, visit);
}

std::vector<AdmissibleSequence> enumerate_maximal(SplittingPair start,
                                                  const EnumerationLimits& limits) {
  std::vector<AdmissibleSequence> out;
  for_each_maximal(start, [&](const PairList& p) { out.emplace_back(p); }, limits);
  return out;
}

std::uint64_t count_maximal(SplittingPair start, const EnumerationLimits& limits) {
  limits.check(start);
  // count(d) = sum_{k=1}^{floor((d+1)/2)} count(d + 1 - 2k), count(0) = 1
  std::vector<std::uint64_t> count(static_cast<std::size_t>(start.gap()) + 1, 0);
  count[0] = 1;
  for (int d = 1; d <= start.gap(); ++d) {
    std::uint64_t total = 0;
    for (int k = 1; 2 * k <= d + 1; ++k) total += count[static_cast<std::size_t>(d + 1 - 2 * k)];
    count[static_cast<std::size_t>(d)] = total;
  }
  return count.back();
}

AttainedSet attained_invariants(int j, int epsilon, const EnumerationLimits& limits) {
  if (j < 1) throw std::invalid_argument("attained_invariants needs j >= 1");
  check_epsilon(epsilon);
  AttainedSet out{j, epsilon, {}, {}};
  for_each_maximal(
      {j, -j + epsilon},
      [&](const PairList& p) {
        const AdmissibleSequence seq(p);
        const int w = w_invariant(seq);
        const int z = z_invariant(seq);
        out.pairs.insert({z, w});
        out.k_values.insert(z + w);
      },
      limits);
  return out;
}

AuditReport audit_box_coverage(int j, int epsilon, const EnumerationLimits& limits) {
  const auto box = claimed_invariant_box(j, epsilon);
  const auto attained = attained_invariants(j, epsilon, limits);

  AuditReport r;
  r.claim = kBoxCoverageClaim;
  r.j = j;
  r.epsilon = epsilon;
  r.claimed = {{"w", box.w_min, box.w_max}, {"z", box.z_min, box.z_max}};
  r.attained = as_witnesses(attained.pairs);
  for (int z = box.z_min; z <= box.z_max; ++z)
    for (int w = box.w_min; w <= box.w_max; ++w)
      if (!attained.pairs.contains({z, w})) r.missing.emplace_back(ZwPair{z, w});
  for (const auto& p : attained.pairs)
    if (p.z < box.z_min || p.z > box.z_max || p.w < box.w_min || p.w > box.w_max)
      r.extra.emplace_back(p);
  finish(r);
  return r;
}

AuditReport audit_defect_range(int j, const EnumerationLimits& limits) {
  const auto attained = attained_invariants(j, 0, limits);

  AuditReport r;
  r.claim = kDefectRangeClaim;
  r.j = j;
  r.epsilon = 0;
  r.claimed = {{"k", j, j * j}};
  r.attained = as_witnesses(attained.k_values);
  for (int k = j; k <= j * j; ++k)
    if (!attained.k_values.contains(k)) r.missing.emplace_back(k);
  for (int k : attained.k_values)
    if (k < j || k > j * j) r.extra.emplace_back(k);
  finish(r);
  return r;
}

AuditReport audit_invariant_bounds(int j, int epsilon, const EnumerationLimits& limits) {
  const auto box = claimed_invariant_box(j, epsilon);
  const auto attained = attained_invariants(j, epsilon, limits);

  AuditReport r;
  r.claim = kBoundsClaim;
  r.j = j;
  r.epsilon = epsilon;
  r.claimed = {{"w", box.w_min, box.w_max}, {"z", box.z_min, box.z_max}};
  r.attained = as_witnesses(attained.pairs);

  int w_min = std::numeric_limits<int>::max();
  for (const auto& p : attained.pairs) {
    w_min = std::min(w_min, p.w);
    if (p.z < box.z_min || p.z > box.z_max || p.w < box.w_min || p.w > box.w_max)
      r.extra.emplace_back(p);
  }
  if (w_min != box.w_min) r.missing.emplace_back(box.w_min);
  r.metrics["attained_w_min"] = w_min;
  r.metrics["claimed_w_min"] = box.w_min;
  finish(r);
  return r;
}

SplitAudit audit_split_characterization(int j, int epsilon, const EnumerationLimits& limits) {
  if (j < 1) throw std::invalid_argument("split audit needs j >= 1");
  check_epsilon(epsilon);
  const auto split = split_sequence(j, epsilon);
  const int split_defect = j * (j - epsilon);
  const int max_w = claimed_invariant_box(j, epsilon).w_max;

  SplitAudit out;
  auto& by_defect = out.defect_characterizes_split;
  by_defect.claim = kDefectSplitClaim;
  by_defect.j = j;
  by_defect.epsilon = epsilon;
  by_defect.claimed = {{"c2_defect", split_defect, split_defect}};
  by_defect.claimed_sequences = {split.pairs()};

  auto& by_w = out.max_w_characterizes_split;
  by_w.claim = kMaxWSplitClaim;
  by_w.j = j;
  by_w.epsilon = epsilon;
  by_w.claimed = {{"w", max_w, max_w}};
  by_w.claimed_sequences = {split.pairs()};

  bool split_has_defect = false;
  bool split_has_max_w = false;
  int sequences = 0;
  for_each_maximal(
      {j, -j + epsilon},
      [&](const PairList& p) {
        ++sequences;
        const AdmissibleSequence seq(p);
        const bool is_split = seq == split;
        if (c2_defect(seq) == split_defect) {
          by_defect.attained.emplace_back(p);
          if (is_split) split_has_defect = true;
          else by_defect.extra.emplace_back(p);
        }
        if (w_invariant(seq) == max_w) {
          by_w.attained.emplace_back(p);
          if (is_split) split_has_max_w = true;
          else by_w.extra.emplace_back(p);
        }
      },
      limits);
  if (!split_has_defect) by_defect.missing.emplace_back(split.pairs());
  if (!split_has_max_w) by_w.missing.emplace_back(split.pairs());
  by_defect.metrics["sequences"] = sequences;
  by_w.metrics["sequences"] = sequences;
  by_w.metrics["counterexamples"] = static_cast<int>(by_w.extra.size());
  finish(by_defect);
  finish(by_w);
  return out;
}

}  // namespace eltrans
