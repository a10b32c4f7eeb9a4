#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eltrans {

/// Splitting type (a, b) of a rank-2 bundle on the exceptional curve:
/// E|_D = O_D(a) + O_D(b). Admissible sequences keep a >= b.
struct SplittingPair {
  int a = 0;
  int b = 0;

  constexpr int gap() const { return a - b; }
  constexpr int degree() const { return a + b; }
  constexpr bool balanced() const { return a == b; }

  friend constexpr auto operator<=>(const SplittingPair&, const SplittingPair&) = default;
};

using PairList = std::vector<SplittingPair>;

/// The four defining properties of an admissible sequence.
enum class Property {
  ordered,        // (i)   a_i >= b_i
  sum_increment,  // (ii)  a_i + b_i = a_1 + b_1 + i - 1
  nested,         // (iii) a_i >= a_{i+1} >= b_{i+1} > b_i
  terminal,       // (iv)  a_t = b_t, and a_i > b_i before that
};

std::string_view property_label(Property p);

struct Validation {
  std::vector<Property> violated;

  bool valid() const { return violated.empty(); }
  std::string describe() const;
};

/// Checks properties (i)-(iv). Throws ParseError on an empty list.
Validation validate_sequence(std::span<const SplittingPair> pairs);

class InvalidSequence : public std::invalid_argument {
 public:
  explicit InvalidSequence(Validation v);
  const Validation& validation() const { return validation_; }

 private:
  Validation validation_;
};

/// A validated admissible sequence. Immutable once built.
class AdmissibleSequence {
 public:
  /// Throws InvalidSequence (or ParseError if empty).
  explicit AdmissibleSequence(PairList pairs);

  const PairList& pairs() const { return pairs_; }
  std::size_t length() const { return pairs_.size(); }
  const SplittingPair& operator[](std::size_t i) const { return pairs_[i]; }
  const SplittingPair& front() const { return pairs_.front(); }
  const SplittingPair& back() const { return pairs_.back(); }

  /// Every pair replaced by (a - s, b - s).
  AdmissibleSequence shifted(int s) const;

  /// First pair has the form (j, -j + eps) with eps in {0, -1}.
  bool is_normalized() const;

  friend bool operator==(const AdmissibleSequence&, const AdmissibleSequence&) = default;
  friend std::weak_ordering operator<=>(const AdmissibleSequence& x,
                                             const AdmissibleSequence& y);

 private:
  struct Unchecked {};
  AdmissibleSequence(Unchecked, PairList pairs) : pairs_(std::move(pairs)) {}

  PairList pairs_;
};

/// Canonical order: lexicographic over positions, larger a first at the
/// first differing position. This is depth-first order when successors are
/// visited by decreasing a.
bool canonical_less(std::span<const SplittingPair> x, std::span<const SplittingPair> y);

inline std::weak_ordering operator<=>(const AdmissibleSequence& x,
                                     const AdmissibleSequence& y) {
  if (x.pairs_ == y.pairs_) return std::weak_ordering::equivalent;
  return canonical_less(x.pairs_, y.pairs_) ? std::weak_ordering::less
                                            : std::weak_ordering::greater;
}

inline void check_epsilon(int epsilon) {
  if (epsilon != 0 && epsilon != -1)
    throw std::invalid_argument("epsilon must be 0 or -1, got " + std::to_string(epsilon));
}

/// The sequence of the split bundle with splitting type (j, -j + eps):
/// a_i = j, b_i = -j + eps + i - 1, of length 2j + 1 - eps.
AdmissibleSequence split_sequence(int j, int epsilon);

struct NormalizedSequence {
  AdmissibleSequence sequence;
  int shift = 0;
};

/// Twists so the first pair becomes (j, -j + eps), eps in {0, -1}; the
/// returned shift s satisfies normalized = original shifted by (-s, -s).
NormalizedSequence normalize_sequence(const AdmissibleSequence& seq);

/// h^0(R^1 pi_* E): sum of max(-b_i - 1, 0). Needs a_t >= -1.
int w_invariant(const AdmissibleSequence& seq);

/// c_2(E) - c_2(pi_*(E)^**): sum_{i<t} a_i - a_t^2.
int c2_defect(const AdmissibleSequence& seq);

/// Length of coker(pi_* E -> pi_* E^**). Normalized input only.
int z_invariant(const AdmissibleSequence& seq);

struct InvariantBox {
  int w_min = 0;
  int w_max = 0;
  int z_min = 0;
  int z_max = 0;

  friend bool operator==(const InvariantBox&, const InvariantBox&) = default;
};

/// Claimed a priori ranges of (z, w) for splitting type (j, -j + eps), j >= 1.
/// These are claims to audit, not facts about the attained set.
InvariantBox claimed_invariant_box(int j, int epsilon);

/// True iff the normalization equals split_sequence(j, eps).
bool is_split_sequence(const AdmissibleSequence& seq);

struct InvariantReport {
  PairList sequence;
  int w = 0;
  int c2_defect = 0;
  std::optional<int> z;
  std::optional<int> j;
  std::optional<int> epsilon;
  bool split = false;

  std::size_t length() const { return sequence.size(); }
  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

InvariantReport invariants_report(const AdmissibleSequence& seq);

}  // namespace eltrans
