#include "eltrans/seqcore.hpp"

#include <algorithm>

#include "eltrans/errors.hpp"

namespace eltrans {

std::string_view property_label(Property p) {
  switch (p) {
    case Property::ordered: return "i";
    case Property::sum_increment: return "ii";
    case Property::nested: return "iii";
    case Property::terminal: return "iv";
  }
  return "?";
}

std::string Validation::describe() const {
  if (valid()) return "valid";
  std::string out = "violates property";
  for (std::size_t k = 0; k < violated.size(); ++k) {
    out += k == 0 ? " " : ", ";
    out += property_label(violated[k]);
  }
  return out;
}

Validation validate_sequence(std::span<const SplittingPair> pairs) {
  if (pairs.empty()) throw ParseError("admissible sequence must contain at least one pair");

  bool ordered = true;
  bool sum_increment = true;
  bool nested = true;
  bool terminal = pairs.back().balanced();

  const int base = pairs.front().degree();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    if (p.a < p.b) ordered = false;
    if (p.degree() != base + static_cast<int>(i)) sum_increment = false;
    if (i + 1 < pairs.size()) {
      const auto& q = pairs[i + 1];
      if (!(p.a >= q.a && q.a >= q.b && q.b > p.b)) nested = false;
      if (p.balanced()) terminal = false;
    }
  }

  Validation v;
  if (!ordered) v.violated.push_back(Property::ordered);
  if (!sum_increment) v.violated.push_back(Property::sum_increment);
  if (!nested) v.violated.push_back(Property::nested);
  if (!terminal) v.violated.push_back(Property::terminal);
  return v;
}

InvalidSequence::InvalidSequence(Validation v)
    : std::invalid_argument("not an admissible sequence: " + v.describe()),
      validation_(std::move(v)) {}

AdmissibleSequence::AdmissibleSequence(PairList pairs) : pairs_(std::move(pairs)) {
  auto v = validate_sequence(pairs_);
  if (!v.valid()) throw InvalidSequence(std::move(v));
}

AdmissibleSequence AdmissibleSequence::shifted(int s) const {
  PairList out = pairs_;
  for (auto& p : out) {
    p.a -= s;
    p.b -= s;
  }
  return AdmissibleSequence(Unchecked{}, std::move(out));
}

bool AdmissibleSequence::is_normalized() const {
  const int d = front().degree();
  return d == 0 || d == -1;
}

bool canonical_less(std::span<const SplittingPair> x, std::span<const SplittingPair> y) {
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].a != y[i].a) return x[i].a > y[i].a;
    if (x[i].b != y[i].b) return x[i].b < y[i].b;
  }
  return x.size() < y.size();
}

AdmissibleSequence split_sequence(int j, int epsilon) {
  if (j < 0) throw std::invalid_argument("split_sequence needs j >= 0");
  check_epsilon(epsilon);
  const int t = 2 * j + 1 - epsilon;
  PairList pairs;
  pairs.reserve(static_cast<std::size_t>(t));
  for (int i = 1; i <= t; ++i) pairs.push_back({j, -j + epsilon + i - 1});
  return AdmissibleSequence(std::move(pairs));
}

namespace {

int floor_div2(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

}  // namespace

NormalizedSequence normalize_sequence(const AdmissibleSequence& seq) {
  // shifted first degree d - 2s must land in {0, -1}: s = ceil(d / 2)
  const int d = seq.front().degree();
  const int s = -floor_div2(-d);
  return {seq.shifted(s), s};
}

int w_invariant(const AdmissibleSequence& seq) {
  if (seq.back().a < -1)
    throw DomainError("w formula valid only for terminal value >= -1 (a_t = " +
                      std::to_string(seq.back().a) + ")");
  int w = 0;
  for (const auto& p : seq.pairs()) w += std::max(-p.b - 1, 0);
  return w;
}

int c2_defect(const AdmissibleSequence& seq) {
  int sum = 0;
  for (std::size_t i = 0; i + 1 < seq.length(); ++i) sum += seq[i].a;
  const int at = seq.back().a;
  return sum - at * at;
}

int z_invariant(const AdmissibleSequence& seq) {
  if (!seq.is_normalized())
    throw DomainError("z is defined for normalized sequences; apply normalize_sequence first");
  return c2_defect(seq) - w_invariant(seq);
}

InvariantBox claimed_invariant_box(int j, int epsilon) {
  if (j < 1) throw std::invalid_argument("invariant box needs j >= 1");
  check_epsilon(epsilon);
  return {j - 1 - epsilon, j * (j - 1) / 2 - epsilon * j, 1, j * (j + 1) / 2};
}

bool is_split_sequence(const AdmissibleSequence& seq) {
  const auto normalized = normalize_sequence(seq).sequence;
  const SplittingPair first = normalized.front();
  return normalized == split_sequence(first.a, first.degree());
}

InvariantReport invariants_report(const AdmissibleSequence& seq) {
  InvariantReport r;
  r.sequence = seq.pairs();
  r.w = w_invariant(seq);
  r.c2_defect = c2_defect(seq);
  if (seq.is_normalized()) {
    r.z = r.c2_defect - r.w;
    r.j = seq.front().a;
    r.epsilon = seq.front().degree();
  }
  r.split = is_split_sequence(seq);
  return r;
}

}  // namespace eltrans
