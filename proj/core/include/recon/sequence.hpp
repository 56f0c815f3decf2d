#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace recon {

using Symbol = std::uint8_t;

/// Immutable word over the alphabet [0, q-1] with the alphabet size attached.
/// Positions are 1-based in the slicing helpers, matching the usual coding
/// theory convention; operator[] stays 0-based for plain loops.
class Sequence {
public:
  Sequence() = default;
  Sequence(int q, std::vector<Symbol> symbols);

  /// Parse a digit string such as "01021" (symbols must be single digits).
  static Sequence from_digits(int q, std::string_view digits);

  int q() const { return q_; }
  int length() const { return static_cast<int>(symbols_.size()); }
  bool empty() const { return symbols_.empty(); }

  Symbol operator[](int i0) const { return symbols_[static_cast<std::size_t>(i0)]; }
  Symbol at1(int i1) const;

  const std::vector<Symbol>& symbols() const { return symbols_; }

  /// Substring over the closed 1-based interval [lo, hi]; empty when lo > hi.
  Sequence slice1(int lo, int hi) const;

  std::string to_string() const;

  bool operator==(const Sequence& o) const { return q_ == o.q_ && symbols_ == o.symbols_; }
  bool operator!=(const Sequence& o) const { return !(*this == o); }
  /// Lexicographic by symbols; the canonical order used by SequenceSet.
  bool operator<(const Sequence& o) const { return symbols_ < o.symbols_; }

private:
  int q_ = 2;
  std::vector<Symbol> symbols_;
};

Sequence concat(const Sequence& a, const Sequence& b);
Sequence concat(const Sequence& a, const Sequence& b, const Sequence& c);

/// The alternating word a b a b ... of the given length.
Sequence alternating(int q, Symbol a, Symbol b, int len);

/// Deduplicated collection of equal-alphabet sequences in canonical
/// (lexicographic) order. Balls and codes are represented this way.
class SequenceSet {
public:
  SequenceSet() = default;

  /// Sorts and deduplicates; all items must share one alphabet size.
  static SequenceSet of(std::vector<Sequence> items);

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  bool contains(const Sequence& s) const;

  const Sequence& operator[](std::size_t i) const { return items_[i]; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  SequenceSet intersect(const SequenceSet& o) const;
  SequenceSet unite(const SequenceSet& o) const;
  SequenceSet difference(const SequenceSet& o) const;

  bool operator==(const SequenceSet& o) const { return items_ == o.items_; }

private:
  std::vector<Sequence> items_;
};

// Structural functions on sequences.

/// Number of maximal constant substrings.
int run_count(const Sequence& x);

/// True iff x_i = x_{i+period} for all valid i. Words of length <= period
/// count as periodic.
bool is_periodic(const Sequence& x, int period);

/// True iff x is p-periodic for some p in [1, max_period].
bool is_periodic_up_to(const Sequence& x, int max_period);

/// True iff every substring of x that is periodic with some period
/// <= max_period has length <= max_len. Membership test for R_q(n, t, l).
bool period_limited(const Sequence& x, int max_period, int max_len);

/// The unique factorization x = prefix . x_mid . suffix, y = prefix . y_mid . suffix
/// by longest common prefix, then longest common suffix of the remainders.
struct PairDecomposition {
  Sequence prefix;
  Sequence suffix;
  Sequence x_mid;
  Sequence y_mid;
};
PairDecomposition decompose_pair(const Sequence& x, const Sequence& y);

/// Symbol-wise modular difference d_i = x_i - x_{i-1} (mod q), with x_0 = 0.
Sequence differential(const Sequence& x);

/// Integer partial sums of the differential sequence (not reduced mod q).
std::vector<int> accumulated_differential(const Sequence& x);

/// Number of binary rows in the bit-matrix representation, ceil(log2 q).
int binary_row_count(int q);

/// Row `row` (1-based) of the bit-matrix representation: bit (row-1) of each
/// symbol, as a binary sequence.
Sequence binary_row(const Sequence& x, int row);

/// Symbols at odd positions 1, 3, 5, ...
Sequence odd_index_subsequence(const Sequence& x);

/// True iff there are cut points 1 = i_0 <= i_1 <= ... <= i_k = n such that
/// every closed segment x[i_{j-1}, i_j] is periodic with some period
/// <= max_period. Consecutive segments overlap in one position; i_{j-1} = i_j
/// denotes a skipped segment. Empty x splits trivially. When `cuts` is given
/// it receives the k+1 cut points of one witness.
bool splits_into_periodic_segments(const Sequence& x, int max_period, int max_segments,
                                   std::vector<int>* cuts = nullptr);

}  // namespace recon
