#pragma once

#include <array>
#include <optional>
#include <vector>

#include "recon/balls.hpp"
#include "recon/sequence.hpp"

namespace recon {

/// All words z of length |x|+2 whose restriction off positions {l, k} equals
/// x (1-based, l < k). These are the double insertions pinned at two slots.
SequenceSet pinned_insertions(const Sequence& x, int l, int k);

/// One of the six canonical slots an element of a 2-insertion ball
/// intersection can occupy, with its witness word and index pair.
struct SlotWitness {
  Sequence z;
  int l = 0;
  int k = 0;
};

/// Occupancy record of the six slots for a stripped pair at insdel distance
/// at least 4. counts[i] is the number of intersection elements matching slot
/// i+1; the claim under test elsewhere is that each count is at most one and
/// that the counts add up to the intersection size.
struct IntersectionProfile {
  std::array<int, 6> counts{};
  std::array<std::optional<SlotWitness>, 6> witness{};

  int total() const;
  int occupied(int slot1) const { return counts[static_cast<std::size_t>(slot1 - 1)]; }
  const std::optional<SlotWitness>& witness_for(int slot1) const {
    return witness[static_cast<std::size_t>(slot1 - 1)];
  }
};

/// Classifies the 2-insertion ball intersection of a pair. The pair is
/// stripped of its common prefix and suffix first; the slots are defined on
/// the stripped cores. Requires insdel distance at least 4.
IntersectionProfile classify_pair(const Sequence& x, const Sequence& y);

/// Same, for a pair already stripped (first and last symbols differ).
IntersectionProfile classify_stripped_pair(const Sequence& xm, const Sequence& ym);

/// Intersection of the two single-insertion balls (size at most 2), together
/// with the smallest/largest differing indices when the size is exactly 2.
/// In that case the two elements are rebuilt from the closed-form expressions
/// and checked against the enumerated intersection.
struct SingleInsertionIntersection {
  SequenceSet elements;
  std::optional<std::pair<int, int>> indices;
};
SingleInsertionIntersection single_insertion_intersection(const Sequence& x, const Sequence& y);

/// Structure of a pair whose single-insertion balls intersect in exactly one
/// element: either the short two-symbol form {ac, cd} or the shifted form
/// {ac w b, c w b d}.
struct UnitIntersectionStructure {
  enum class Case { short_pair, shifted_pair };
  Case kind = Case::shifted_pair;
  bool swapped = false;  // true when y plays the leading role
  Symbol a = 0, b = 0, c = 0, d = 0;
  Sequence w;
  int match_count = 0;  // number of valid structural matches found
};
UnitIntersectionStructure unit_intersection_structure(const Sequence& x, const Sequence& y);

/// Witness that the stripped cores are two alternating blocks around a common
/// middle: xm = alt_t(a a') w alt_s(b b') and ym = alt_t(a' a) w alt_s(b' b).
struct AlternatingEndsWitness {
  int t = 0, s = 0;
  Symbol a = 0, a2 = 0, b = 0, b2 = 0;
  Sequence w;
};
std::optional<AlternatingEndsWitness> match_alternating_ends(const Sequence& xm,
                                                             const Sequence& ym);

/// Checks every occupied slot's witness indices against the corresponding
/// structural row (segment equalities between the stripped cores).
bool profile_rows_consistent(const Sequence& xm, const Sequence& ym,
                             const IntersectionProfile& profile);

/// Structural disjunction asserted for pairs whose 2-insertion balls share at
/// least N elements, N in [2, 5].
struct CharacterizationVerdict {
  bool triggered = false;  // intersection reached N
  bool holds = true;       // the required disjunction held
  enum class Branch { none, slot_1245, alternating_ends, periodic_split };
  Branch branch = Branch::none;
  int intersection_size = 0;
};
CharacterizationVerdict check_characterization(const Sequence& x, const Sequence& y, int N);

}  // namespace recon
