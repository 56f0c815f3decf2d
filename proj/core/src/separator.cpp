#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

#include "recon/codes.hpp"

namespace recon {

namespace {

// Length of the pair's core after stripping the common prefix and suffix.
int stripped_length(unsigned a, unsigned b, int n) {
  unsigned diff = a ^ b;
  int lead = 0;
  while (((diff >> (n - 1 - lead)) & 1u) == 0) ++lead;  // diff != 0 here
  int trail = 0;
  while (((diff >> trail) & 1u) == 0) ++trail;
  return n - lead - trail;
}

int lcs_length(unsigned a, unsigned b, int n) {
  // Bits of the rank, most significant first, are the word's symbols.
  std::vector<int> prev(static_cast<std::size_t>(n + 1), 0);
  std::vector<int> cur(static_cast<std::size_t>(n + 1), 0);
  for (int i = 1; i <= n; ++i) {
    unsigned ai = (a >> (n - i)) & 1u;
    for (int j = 1; j <= n; ++j) {
      unsigned bj = (b >> (n - j)) & 1u;
      cur[static_cast<std::size_t>(j)] =
          ai == bj ? prev[static_cast<std::size_t>(j - 1)] + 1
                   : std::max(prev[static_cast<std::size_t>(j)], cur[static_cast<std::size_t>(j - 1)]);
    }
    std::swap(prev, cur);
  }
  return prev[static_cast<std::size_t>(n)];
}

}  // namespace

Separator::Separator(int n, int window_param, int color_cap)
    : n_(n), window_param_(window_param) {
  if (n < 1 || n > 24) throw std::invalid_argument("separator supports lengths 1..24");
  if (window_param < 1) throw std::invalid_argument("window parameter must be positive");
  unsigned count = 1u << n;
  colors_.assign(count, 0);
  int window = 5 * window_param;
  std::vector<signed char> weight(count, 0);
  for (unsigned r = 1; r < count; ++r) {
    weight[r] = static_cast<signed char>(weight[r >> 1] + (r & 1u));
  }
  // Greedy coloring in rank order. Two words conflict when their cores are
  // short enough to fall under the separation window and their 2-insertion
  // balls intersect, which for equal lengths means insdel distance <= 4.
  std::vector<char> used;
  for (unsigned r = 0; r < count; ++r) {
    used.assign(static_cast<std::size_t>(color_count_ + 1), 0);
    for (unsigned v = 0; v < r; ++v) {
      if (weight[r] - weight[v] > 2 || weight[v] - weight[r] > 2) continue;
      if (stripped_length(r, v, n) > window) continue;
      if (n - lcs_length(r, v, n) > 2) continue;  // d_L = 2(n - lcs) > 4
      used[static_cast<std::size_t>(colors_[v])] = 1;
    }
    int c = 0;
    while (c < static_cast<int>(used.size()) && used[static_cast<std::size_t>(c)]) ++c;
    if (c >= color_cap) {
      throw std::runtime_error("separator color budget exhausted at word rank " +
                               std::to_string(r));
    }
    colors_[r] = c;
    color_count_ = std::max(color_count_, c + 1);
  }
}

int Separator::color(const Sequence& binary_word) const {
  if (binary_word.q() != 2) throw std::invalid_argument("separator expects binary words");
  if (binary_word.length() != n_) throw std::invalid_argument("word length mismatch");
  unsigned rank = 0;
  for (int i = 0; i < n_; ++i) rank = (rank << 1) | binary_word[i];
  return colors_[rank];
}

namespace {

std::mutex g_separator_mutex;
std::map<std::tuple<int, int, int>, std::unique_ptr<Separator>> g_separators;

}  // namespace

const Separator& separator_for(int n, int window_param, int color_cap) {
  std::scoped_lock lock(g_separator_mutex);
  auto key = std::make_tuple(n, window_param, color_cap);
  auto it = g_separators.find(key);
  if (it == g_separators.end()) {
    it = g_separators.emplace(key, std::make_unique<Separator>(n, window_param, color_cap)).first;
  }
  return *it->second;
}

int separator_color(const Sequence& binary_word, int window_param) {
  return separator_for(binary_word.length(), window_param).color(binary_word);
}

}  // namespace recon
