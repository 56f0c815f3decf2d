#include "recon/balls.hpp"

#include <algorithm>
#include <stdexcept>

namespace recon {

const char* to_string(BallKind kind) {
  return kind == BallKind::deletion ? "deletion" : "insertion";
}

bool is_subsequence(const Sequence& sub, const Sequence& host) {
  int i = 0;
  for (int j = 0; j < host.length() && i < sub.length(); ++j) {
    if (host[j] == sub[i]) ++i;
  }
  return i == sub.length();
}

namespace {

void gen_deletions(const Sequence& x, int start, int remaining, std::vector<Symbol>& acc,
                   std::vector<Sequence>& out) {
  int n = x.length();
  if (remaining == 0) {
    std::vector<Symbol> word = acc;
    for (int i = start; i < n; ++i) word.push_back(x[i]);
    out.emplace_back(x.q(), std::move(word));
    return;
  }
  if (n - start < remaining) return;
  // keep x[start] or delete it
  if (n - start > remaining) {
    acc.push_back(x[start]);
    gen_deletions(x, start + 1, remaining, acc, out);
    acc.pop_back();
  }
  gen_deletions(x, start + 1, remaining - 1, acc, out);
}

}  // namespace

Ball deletion_ball(const Sequence& x, int t) {
  if (t < 0) throw std::invalid_argument("negative radius");
  if (t > x.length()) throw std::invalid_argument("radius exceeds length");
  std::vector<Sequence> words;
  std::vector<Symbol> acc;
  gen_deletions(x, 0, t, acc, words);
  return Ball{x, t, BallKind::deletion, SequenceSet::of(std::move(words))};
}

Ball insertion_ball(const Sequence& x, int t) {
  if (t < 0) throw std::invalid_argument("negative radius");
  int q = x.q();
  std::vector<Sequence> frontier{x};
  for (int round = 0; round < t; ++round) {
    std::vector<Sequence> next;
    next.reserve(frontier.size() * static_cast<std::size_t>((x.length() + round + 1) * q));
    for (const Sequence& w : frontier) {
      for (int pos = 0; pos <= w.length(); ++pos) {
        for (int c = 0; c < q; ++c) {
          std::vector<Symbol> syms = w.symbols();
          syms.insert(syms.begin() + pos, static_cast<Symbol>(c));
          next.emplace_back(q, std::move(syms));
        }
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = std::move(next);
  }
  return Ball{x, t, BallKind::insertion, SequenceSet::of(std::move(frontier))};
}

int levenshtein(const Sequence& x, const Sequence& y) {
  if (x.q() != y.q()) throw std::invalid_argument("alphabet mismatch");
  int n = x.length(), m = y.length();
  std::vector<int> prev(static_cast<std::size_t>(m + 1), 0);
  std::vector<int> cur(static_cast<std::size_t>(m + 1), 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) {
      if (x[i - 1] == y[j - 1]) {
        cur[static_cast<std::size_t>(j)] = prev[static_cast<std::size_t>(j - 1)] + 1;
      } else {
        cur[static_cast<std::size_t>(j)] =
            std::max(prev[static_cast<std::size_t>(j)], cur[static_cast<std::size_t>(j - 1)]);
      }
    }
    std::swap(prev, cur);
  }
  int lcs = prev[static_cast<std::size_t>(m)];
  return n + m - 2 * lcs;
}

SequenceSet ball_intersection(const Sequence& x, const Sequence& y, int t, BallKind kind) {
  if (x.q() != y.q()) throw std::invalid_argument("alphabet mismatch");
  if (x.length() != y.length()) throw std::invalid_argument("length mismatch");
  Ball bx = kind == BallKind::deletion ? deletion_ball(x, t) : insertion_ball(x, t);
  Ball by = kind == BallKind::deletion ? deletion_ball(y, t) : insertion_ball(y, t);
  return bx.elements.intersect(by.elements);
}

std::vector<int> leftmost_embedding(const Sequence& host, const Sequence& sub) {
  if (host.q() != sub.q()) throw std::invalid_argument("alphabet mismatch");
  std::vector<int> positions;
  positions.reserve(static_cast<std::size_t>(sub.length()));
  int p = 0;
  for (int i = 0; i < sub.length(); ++i) {
    while (p < host.length() && host[p] != sub[i]) ++p;
    if (p == host.length()) throw std::invalid_argument("no embedding");
    positions.push_back(p + 1);
    ++p;
  }
  return positions;
}

Sequence common_supersequence(const Sequence& x, const Sequence& y, const Sequence& z, int t) {
  if (x.q() != y.q() || x.q() != z.q()) throw std::invalid_argument("alphabet mismatch");
  if (x.length() != y.length()) throw std::invalid_argument("length mismatch");
  int n = x.length();
  if (z.length() != n - t) throw std::invalid_argument("radius inconsistent with lengths");
  std::vector<int> px = leftmost_embedding(x, z);
  std::vector<int> py = leftmost_embedding(y, z);
  std::vector<Symbol> out;
  out.reserve(static_cast<std::size_t>(n + t));
  int prev_x = 0, prev_y = 0;
  auto append = [&out](const Sequence& s, int lo, int hi) {
    for (int i = lo; i <= hi; ++i) out.push_back(s.at1(i));
  };
  for (int i = 0; i < n - t; ++i) {
    append(x, prev_x + 1, px[static_cast<std::size_t>(i)] - 1);
    append(y, prev_y + 1, py[static_cast<std::size_t>(i)]);
    prev_x = px[static_cast<std::size_t>(i)];
    prev_y = py[static_cast<std::size_t>(i)];
  }
  append(x, prev_x + 1, n);
  append(y, prev_y + 1, n);
  return Sequence(x.q(), std::move(out));
}

}  // namespace recon
