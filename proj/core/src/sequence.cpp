#include "recon/sequence.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace recon {

Sequence::Sequence(int q, std::vector<Symbol> symbols) : q_(q), symbols_(std::move(symbols)) {
  if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
  for (Symbol s : symbols_) {
    if (s >= q) throw std::invalid_argument("symbol out of alphabet range");
  }
}

Sequence Sequence::from_digits(int q, std::string_view digits) {
  std::vector<Symbol> syms;
  syms.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("non-digit symbol in sequence literal");
    syms.push_back(static_cast<Symbol>(c - '0'));
  }
  return Sequence(q, std::move(syms));
}

Symbol Sequence::at1(int i1) const {
  if (i1 < 1 || i1 > length()) throw std::out_of_range("sequence index out of range");
  return symbols_[static_cast<std::size_t>(i1 - 1)];
}

Sequence Sequence::slice1(int lo, int hi) const {
  if (lo > hi) return Sequence(q_, {});
  if (lo < 1 || hi > length()) throw std::out_of_range("slice out of range");
  return Sequence(q_, std::vector<Symbol>(symbols_.begin() + (lo - 1), symbols_.begin() + hi));
}

std::string Sequence::to_string() const {
  std::string s;
  s.reserve(symbols_.size());
  for (Symbol v : symbols_) s.push_back(static_cast<char>('0' + v));
  return s;
}

Sequence concat(const Sequence& a, const Sequence& b) {
  if (a.q() != b.q()) throw std::invalid_argument("alphabet mismatch in concatenation");
  std::vector<Symbol> syms = a.symbols();
  syms.insert(syms.end(), b.symbols().begin(), b.symbols().end());
  return Sequence(a.q(), std::move(syms));
}

Sequence concat(const Sequence& a, const Sequence& b, const Sequence& c) {
  return concat(concat(a, b), c);
}

Sequence alternating(int q, Symbol a, Symbol b, int len) {
  if (len < 0) throw std::invalid_argument("negative length");
  std::vector<Symbol> syms(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) syms[static_cast<std::size_t>(i)] = (i % 2 == 0) ? a : b;
  return Sequence(q, std::move(syms));
}

SequenceSet SequenceSet::of(std::vector<Sequence> items) {
  for (const Sequence& s : items) {
    if (s.q() != items.front().q()) throw std::invalid_argument("mixed alphabets in sequence set");
  }
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  SequenceSet set;
  set.items_ = std::move(items);
  return set;
}

bool SequenceSet::contains(const Sequence& s) const {
  auto it = std::lower_bound(items_.begin(), items_.end(), s);
  return it != items_.end() && *it == s;
}

SequenceSet SequenceSet::intersect(const SequenceSet& o) const {
  SequenceSet out;
  std::set_intersection(items_.begin(), items_.end(), o.items_.begin(), o.items_.end(),
                        std::back_inserter(out.items_));
  return out;
}

SequenceSet SequenceSet::unite(const SequenceSet& o) const {
  SequenceSet out;
  std::set_union(items_.begin(), items_.end(), o.items_.begin(), o.items_.end(),
                 std::back_inserter(out.items_));
  return out;
}

SequenceSet SequenceSet::difference(const SequenceSet& o) const {
  SequenceSet out;
  std::set_difference(items_.begin(), items_.end(), o.items_.begin(), o.items_.end(),
                      std::back_inserter(out.items_));
  return out;
}

int run_count(const Sequence& x) {
  if (x.empty()) throw std::invalid_argument("empty input");
  int runs = 1;
  for (int i = 1; i < x.length(); ++i) {
    if (x[i] != x[i - 1]) ++runs;
  }
  return runs;
}

bool is_periodic(const Sequence& x, int period) {
  if (period < 1) throw std::invalid_argument("period must be positive");
  for (int i = 0; i + period < x.length(); ++i) {
    if (x[i] != x[i + period]) return false;
  }
  return true;
}

bool is_periodic_up_to(const Sequence& x, int max_period) {
  if (max_period < 1) throw std::invalid_argument("period must be positive");
  if (x.length() <= max_period) return true;
  for (int p = 1; p <= max_period; ++p) {
    if (is_periodic(x, p)) return true;
  }
  return false;
}

bool period_limited(const Sequence& x, int max_period, int max_len) {
  if (max_len < max_period) throw std::invalid_argument("length bound below period bound");
  // Enough to rule out windows of length max_len + 1: substrings of periodic
  // substrings are periodic with the same period.
  for (int lo = 1; lo + max_len <= x.length(); ++lo) {
    if (is_periodic_up_to(x.slice1(lo, lo + max_len), max_period)) return false;
  }
  return true;
}

PairDecomposition decompose_pair(const Sequence& x, const Sequence& y) {
  if (x.q() != y.q()) throw std::invalid_argument("alphabet mismatch");
  if (x.length() != y.length()) throw std::invalid_argument("length mismatch");
  if (x == y) throw std::invalid_argument("identical sequences");
  int n = x.length();
  int p = 0;
  while (p < n && x[p] == y[p]) ++p;
  int s = 0;
  while (s < n - p && x[n - 1 - s] == y[n - 1 - s]) ++s;
  PairDecomposition d;
  d.prefix = x.slice1(1, p);
  d.suffix = x.slice1(n - s + 1, n);
  d.x_mid = x.slice1(p + 1, n - s);
  d.y_mid = y.slice1(p + 1, n - s);
  return d;
}

Sequence differential(const Sequence& x) {
  if (x.empty()) throw std::invalid_argument("empty input");
  int q = x.q();
  std::vector<Symbol> out(static_cast<std::size_t>(x.length()));
  int prev = 0;
  for (int i = 0; i < x.length(); ++i) {
    int d = (static_cast<int>(x[i]) - prev) % q;
    if (d < 0) d += q;
    out[static_cast<std::size_t>(i)] = static_cast<Symbol>(d);
    prev = x[i];
  }
  return Sequence(q, std::move(out));
}

std::vector<int> accumulated_differential(const Sequence& x) {
  Sequence d = differential(x);
  std::vector<int> g(static_cast<std::size_t>(d.length()));
  int sum = 0;
  for (int i = 0; i < d.length(); ++i) {
    sum += d[i];
    g[static_cast<std::size_t>(i)] = sum;
  }
  return g;
}

int binary_row_count(int q) {
  if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
  return std::bit_width(static_cast<unsigned>(q - 1));
}

Sequence binary_row(const Sequence& x, int row) {
  if (row < 1 || row > binary_row_count(x.q())) throw std::invalid_argument("row out of range");
  std::vector<Symbol> bits(static_cast<std::size_t>(x.length()));
  for (int i = 0; i < x.length(); ++i) {
    bits[static_cast<std::size_t>(i)] = static_cast<Symbol>((x[i] >> (row - 1)) & 1);
  }
  return Sequence(2, std::move(bits));
}

Sequence odd_index_subsequence(const Sequence& x) {
  std::vector<Symbol> out;
  for (int i = 0; i < x.length(); i += 2) out.push_back(x[i]);
  return Sequence(x.q(), std::move(out));
}

bool splits_into_periodic_segments(const Sequence& x, int max_period, int max_segments,
                                   std::vector<int>* cuts) {
  if (max_period < 1 || max_segments < 1) throw std::invalid_argument("bounds must be positive");
  int n = x.length();
  if (n == 0) {
    if (cuts) cuts->clear();
    return true;
  }
  // seg_ok[a][b]: the closed segment x[a..b] (1-based) is periodic with some
  // period <= max_period.
  std::vector<std::vector<char>> seg_ok(static_cast<std::size_t>(n + 1),
                                        std::vector<char>(static_cast<std::size_t>(n + 1), 0));
  for (int a = 1; a <= n; ++a) {
    for (int b = a; b <= n; ++b) {
      seg_ok[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          is_periodic_up_to(x.slice1(a, b), max_period) ? 1 : 0;
    }
  }
  // reach[j][i]: cut i_j = i achievable. Inverted cuts (i_{j-1} = i_j) are the
  // single-point segments, so reachability only grows with j.
  std::vector<std::vector<char>> reach(static_cast<std::size_t>(max_segments + 1),
                                       std::vector<char>(static_cast<std::size_t>(n + 1), 0));
  std::vector<std::vector<int>> from(static_cast<std::size_t>(max_segments + 1),
                                     std::vector<int>(static_cast<std::size_t>(n + 1), 0));
  reach[0][1] = 1;
  for (int j = 1; j <= max_segments; ++j) {
    for (int b = 1; b <= n; ++b) {
      for (int a = 1; a <= b; ++a) {
        if (reach[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(a)] &&
            seg_ok[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
          reach[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)] = 1;
          from[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)] = a;
          break;
        }
      }
    }
  }
  if (!reach[static_cast<std::size_t>(max_segments)][static_cast<std::size_t>(n)]) return false;
  if (cuts) {
    cuts->assign(static_cast<std::size_t>(max_segments + 1), 0);
    int pos = n;
    for (int j = max_segments; j >= 1; --j) {
      (*cuts)[static_cast<std::size_t>(j)] = pos;
      pos = from[static_cast<std::size_t>(j)][static_cast<std::size_t>(pos)];
    }
    (*cuts)[0] = pos;
  }
  return true;
}

}  // namespace recon
