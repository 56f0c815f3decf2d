#pragma once

#include <vector>

#include "recon/sequence.hpp"

namespace recon {

enum class BallKind { deletion, insertion };

const char* to_string(BallKind kind);

struct Ball {
  Sequence center;
  int radius = 0;
  BallKind kind = BallKind::deletion;
  SequenceSet elements;
};

/// True iff `sub` embeds into `host` as a subsequence.
bool is_subsequence(const Sequence& sub, const Sequence& host);

/// All words obtained from x by deleting exactly t symbols (deduplicated).
Ball deletion_ball(const Sequence& x, int t);

/// All words of length |x|+t containing x as a subsequence.
Ball insertion_ball(const Sequence& x, int t);

/// Insertion/deletion distance (no substitutions): |x| + |y| - 2 LCS(x, y).
int levenshtein(const Sequence& x, const Sequence& y);

/// Exact intersection of the two radius-t balls, by full enumeration.
SequenceSet ball_intersection(const Sequence& x, const Sequence& y, int t, BallKind kind);

/// Greedy leftmost embedding positions: the i-th entry is the smallest p such
/// that sub[1..i] is a subsequence of host[1..p]. 1-based, strictly increasing.
std::vector<int> leftmost_embedding(const Sequence& host, const Sequence& sub);

/// Builds a common supersequence of x and y from a common subsequence z by
/// interleaving the segments between the leftmost embeddings of z in x and y.
/// Distinct z map to distinct outputs, and the output always lands in
/// the intersection of the radius-t insertion balls of x and y.
Sequence common_supersequence(const Sequence& x, const Sequence& y, const Sequence& z, int t);

}  // namespace recon
