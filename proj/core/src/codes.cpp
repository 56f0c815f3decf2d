#include "recon/codes.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

namespace recon {

BigInt vt_syndrome(std::span<const int> z, int order) {
  if (order < 0) throw std::invalid_argument("negative syndrome order");
  BigInt total = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    BigInt w = 1;
    for (int e = 0; e < order; ++e) w *= static_cast<long long>(i + 1);
    total += w * z[i];
  }
  return total;
}

BigInt vt_syndrome(const Sequence& z, int order) {
  std::vector<int> vals(z.symbols().begin(), z.symbols().end());
  return vt_syndrome(std::span<const int>(vals), order);
}

int sign_run_count(std::span<const int> z) {
  if (z.empty()) throw std::invalid_argument("empty input");
  int segments = 1;
  int sign = 0;
  for (int v : z) {
    if (v == 0) continue;
    int s = v > 0 ? 1 : -1;
    if (sign == 0) {
      sign = s;
    } else if (s != sign) {
      ++segments;
      sign = s;
    }
  }
  return segments;
}

long long smallest_prime_at_least(long long lo) {
  auto is_prime = [](long long v) {
    if (v < 2) return false;
    for (long long d = 2; d * d <= v; ++d) {
      if (v % d == 0) return false;
    }
    return true;
  };
  long long p = std::max<long long>(lo, 2);
  while (!is_prime(p)) ++p;
  return p;
}

const char* to_string(Family family) {
  switch (family) {
    case Family::run_bounded: return "run_bounded";
    case Family::n7_single_ins: return "n7";
    case Family::n5: return "n5";
    case Family::n4: return "n4";
    case Family::n3: return "n3";
    case Family::n2: return "n2";
    case Family::aux4: return "aux4";
    case Family::separator: return "separator";
    case Family::period_restricted: return "period_restricted";
  }
  return "?";
}

std::optional<Family> family_from_string(std::string_view name) {
  if (name == "run_bounded") return Family::run_bounded;
  if (name == "n7") return Family::n7_single_ins;
  if (name == "n5") return Family::n5;
  if (name == "n4") return Family::n4;
  if (name == "n3") return Family::n3;
  if (name == "n2") return Family::n2;
  if (name == "aux4") return Family::aux4;
  if (name == "separator") return Family::separator;
  if (name == "period_restricted") return Family::period_restricted;
  return std::nullopt;
}

int default_window_n5(int n, int q) {
  if (n < 2 || q < 2) throw std::invalid_argument("requires n >= 2 and q >= 2");
  double lq = std::log(static_cast<double>(q));
  double lg = std::log(static_cast<double>(n)) / lq;
  double inner = std::max(lg, 1.0);
  double val = lg + std::log(inner) / lq;
  int c = static_cast<int>(std::ceil(val - 1e-9));
  if (c < 1) c = 1;
  return 3 * c + 4;
}

int default_window_n2(int n) {
  if (n < 1) throw std::invalid_argument("requires n >= 1");
  int c = 0;
  while ((1LL << c) < n) ++c;
  return c + 5;
}

namespace {

std::vector<long long> n3_moduli(int n, int q) {
  long long m0 = 2LL * q * n - 1;
  long long m1 = 2LL * q * (static_cast<long long>(n) * (n + 1) / 2) - 1;
  return {m0, m1};
}

long long aux4_d3_modulus(int q, int P) {
  if ((P - 1) % 3 != 0) throw std::invalid_argument("P incompatible");
  return static_cast<long long>(q - 1) * ((P - 1) / 3) + 1;
}

std::vector<long long> separator_color_counts(int n, int q, int window_param) {
  std::vector<long long> counts;
  const Separator& sep = separator_for(n, window_param);
  for (int r = 0; r < binary_row_count(q); ++r) counts.push_back(sep.color_count());
  return counts;
}

}  // namespace

CodeFamilySpec default_spec(Family family, int n, int q) {
  if (n < 1 || q < 2) throw std::invalid_argument("requires n >= 1 and q >= 2");
  CodeFamilySpec spec;
  spec.family = family;
  spec.n = n;
  spec.q = q;
  switch (family) {
    case Family::run_bounded:
      break;
    case Family::n7_single_ins:
      spec.residues = {0};
      spec.moduli = {static_cast<long long>(q) * n};
      break;
    case Family::n3:
      spec.residues = {0, 0};
      spec.moduli = n3_moduli(n, q);
      break;
    case Family::aux4:
      spec.P = default_window_n5(n, q);
      spec.p = smallest_prime_at_least(4LL * n);
      spec.residues = {0, 0, 0};
      spec.moduli = {2LL * q - 1, spec.p, aux4_d3_modulus(q, spec.P)};
      break;
    case Family::separator: {
      spec.P = default_window_n2(n);
      spec.moduli = separator_color_counts(n, q, spec.P);
      spec.residues.assign(spec.moduli.size(), 0);
      break;
    }
    case Family::n5: {
      spec.P = default_window_n5(n, q);
      int lambda = (spec.P - 1) / 3;
      spec.residues = {0};
      spec.moduli = {static_cast<long long>(q) * n};
      for (long long c : separator_color_counts(n, q, lambda)) {
        spec.residues.push_back(0);
        spec.moduli.push_back(c);
      }
      break;
    }
    case Family::n4: {
      spec = default_spec(Family::n5, n, q);
      spec.family = Family::n4;
      spec.p = smallest_prime_at_least(4LL * n);
      for (long long m : {2LL * q - 1, spec.p, aux4_d3_modulus(q, spec.P)}) {
        spec.residues.push_back(0);
        spec.moduli.push_back(m);
      }
      break;
    }
    case Family::n2: {
      spec.P = default_window_n2(n);
      spec.residues = {0, 0};
      spec.moduli = n3_moduli(n, q);
      for (long long c : separator_color_counts(n, q, spec.P)) {
        spec.residues.push_back(0);
        spec.moduli.push_back(c);
      }
      break;
    }
    case Family::period_restricted:
      spec.t = 4;
      spec.P = default_window_n2(n);
      break;
  }
  return spec;
}

namespace {

std::size_t expected_param_count(const CodeFamilySpec& spec) {
  std::size_t rows = static_cast<std::size_t>(binary_row_count(spec.q));
  switch (spec.family) {
    case Family::run_bounded: return 0;
    case Family::n7_single_ins: return 1;
    case Family::n3: return 2;
    case Family::aux4: return 3;
    case Family::separator: return rows;
    case Family::n5: return 1 + rows;
    case Family::n4: return 1 + rows + 3;
    case Family::n2: return 2 + rows;
    case Family::period_restricted: return 0;
  }
  return 0;
}

bool uses_prime(Family f) { return f == Family::aux4 || f == Family::n4; }
bool uses_window(Family f) {
  return f == Family::aux4 || f == Family::separator || f == Family::n5 || f == Family::n4 ||
         f == Family::n2 || f == Family::period_restricted;
}

}  // namespace

void validate_spec(const CodeFamilySpec& spec) {
  if (spec.n < 1 || spec.q < 2) throw std::invalid_argument("bad dimensions");
  if (spec.residues.size() != spec.moduli.size() ||
      spec.residues.size() != expected_param_count(spec)) {
    throw std::invalid_argument("parameter count does not match family layout");
  }
  for (std::size_t i = 0; i < spec.residues.size(); ++i) {
    if (spec.moduli[i] < 1 || spec.residues[i] < 0 || spec.residues[i] >= spec.moduli[i]) {
      throw std::invalid_argument("residue outside its modulus range");
    }
  }
  if (spec.family == Family::n7_single_ins || spec.family == Family::n5 ||
      spec.family == Family::n4) {
    if (spec.moduli[0] < static_cast<long long>(spec.q) * spec.n) {
      throw std::invalid_argument("n1 must be at least q*n");
    }
  }
  if (spec.family == Family::n3 || spec.family == Family::n2) {
    if (spec.moduli[0] != n3_moduli(spec.n, spec.q)[0] ||
        spec.moduli[1] != n3_moduli(spec.n, spec.q)[1]) {
      throw std::invalid_argument("syndrome moduli do not match the family formulas");
    }
  }
  if (uses_window(spec.family) && spec.P < 1) throw std::invalid_argument("window parameter missing");
  if (spec.family == Family::aux4 || spec.family == Family::n4 || spec.family == Family::n5) {
    if ((spec.P - 1) % 3 != 0) throw std::invalid_argument("P incompatible");
  }
  if (uses_prime(spec.family)) {
    if (spec.p < 4LL * spec.n || smallest_prime_at_least(spec.p) != spec.p) {
      throw std::invalid_argument("p must be a prime at least 4n");
    }
  }
  if (spec.family == Family::period_restricted && (spec.t < 1 || spec.P < spec.t)) {
    throw std::invalid_argument("period bound exceeds length cap");
  }
}

namespace {

long long mod_ll(const BigInt& v, long long m) {
  BigInt r = v % m;
  if (r < 0) r += m;
  return static_cast<long long>(r);
}

void append_n7_sig(const Sequence& x, long long n1, std::vector<long long>& sig) {
  std::vector<int> g = accumulated_differential(x);
  sig.push_back(mod_ll(vt_syndrome(std::span<const int>(g), 0), n1));
}

void append_n3_sig(const Sequence& x, const std::vector<long long>& moduli,
                   std::vector<long long>& sig) {
  std::vector<int> g = accumulated_differential(x);
  sig.push_back(mod_ll(vt_syndrome(std::span<const int>(g), 0), moduli[0]));
  sig.push_back(mod_ll(vt_syndrome(std::span<const int>(g), 1), moduli[1]));
}

void append_aux4_sig(const Sequence& x, int q, long long p, long long d3_mod,
                     std::vector<long long>& sig) {
  sig.push_back(mod_ll(vt_syndrome(x, 0), 2LL * q - 1));
  sig.push_back(mod_ll(vt_syndrome(x, 2), p));
  sig.push_back(mod_ll(vt_syndrome(odd_index_subsequence(x), 0), d3_mod));
}

void append_separator_sig(const Sequence& x, int window_param, std::vector<long long>& sig) {
  const Separator& sep = separator_for(x.length(), window_param);
  for (int r = 1; r <= binary_row_count(x.q()); ++r) {
    sig.push_back(sep.color(binary_row(x, r)));
  }
}

}  // namespace

std::optional<std::vector<long long>> code_signature(const CodeFamilySpec& spec,
                                                     const Sequence& x) {
  if (x.q() != spec.q || x.length() != spec.n) {
    throw std::invalid_argument("sequence does not match code dimensions");
  }
  std::vector<long long> sig;
  switch (spec.family) {
    case Family::run_bounded:
      if (run_count(x) > run_cap(spec.n, spec.q)) return std::nullopt;
      break;
    case Family::n7_single_ins:
      append_n7_sig(x, spec.moduli[0], sig);
      break;
    case Family::n3:
      append_n3_sig(x, spec.moduli, sig);
      break;
    case Family::aux4:
      append_aux4_sig(x, spec.q, spec.p, spec.moduli[2], sig);
      break;
    case Family::separator:
      append_separator_sig(x, spec.P, sig);
      break;
    case Family::n5: {
      int lambda = (spec.P - 1) / 3;
      if (!period_limited(x, 4, lambda)) return std::nullopt;
      append_n7_sig(x, spec.moduli[0], sig);
      append_separator_sig(x, lambda, sig);
      break;
    }
    case Family::n4: {
      int lambda = (spec.P - 1) / 3;
      if (!period_limited(x, 4, lambda)) return std::nullopt;
      append_n7_sig(x, spec.moduli[0], sig);
      append_separator_sig(x, lambda, sig);
      append_aux4_sig(x, spec.q, spec.p, spec.moduli.back(), sig);
      break;
    }
    case Family::n2: {
      if (!period_limited(x, 4, spec.P)) return std::nullopt;
      append_n3_sig(x, spec.moduli, sig);
      append_separator_sig(x, spec.P, sig);
      break;
    }
    case Family::period_restricted:
      if (!period_limited(x, spec.t, spec.P)) return std::nullopt;
      break;
  }
  return sig;
}

bool code_contains(const CodeFamilySpec& spec, const Sequence& x) {
  auto sig = code_signature(spec, x);
  return sig.has_value() && *sig == spec.residues;
}

namespace {

BigInt space_size(int q, int n) {
  BigInt s = 1;
  for (int i = 0; i < n; ++i) s *= q;
  return s;
}

void check_budget(int q, int n, long long budget) {
  if (space_size(q, n) > budget) {
    throw BudgetError("enumeration requires budget " + space_size(q, n).str() + ", have " +
                      std::to_string(budget));
  }
}

template <typename Fn>
void for_all_sequences(int q, int n, Fn&& fn) {
  std::vector<Symbol> syms(static_cast<std::size_t>(n), 0);
  while (true) {
    fn(Sequence(q, syms));
    int i = n - 1;
    while (i >= 0 && syms[static_cast<std::size_t>(i)] == q - 1) {
      syms[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++syms[static_cast<std::size_t>(i)];
  }
}

}  // namespace

SequenceSet enumerate_code(const CodeFamilySpec& spec, long long budget) {
  validate_spec(spec);
  check_budget(spec.q, spec.n, budget);
  std::vector<Sequence> members;
  for_all_sequences(spec.q, spec.n, [&](const Sequence& x) {
    if (code_contains(spec, x)) members.push_back(x);
  });
  return SequenceSet::of(std::move(members));
}

CodeFamilySpec best_params(Family family, int n, int q, long long budget) {
  CodeFamilySpec spec = default_spec(family, n, q);
  if (spec.residues.empty()) return spec;
  check_budget(q, n, budget);
  std::map<std::vector<long long>, long long> class_sizes;
  for_all_sequences(q, n, [&](const Sequence& x) {
    auto sig = code_signature(spec, x);
    if (sig) class_sizes[*sig] += 1;
  });
  long long best = 0;
  for (const auto& [sig, size] : class_sizes) {
    if (size > best) {
      best = size;
      spec.residues = sig;  // map order is lexicographic, first max wins ties
    }
  }
  return spec;
}

namespace {

long long sorted_intersection_count(const std::vector<unsigned long long>& a,
                                    const std::vector<unsigned long long>& b) {
  long long count = 0;
  std::size_t ia = 0, ib = 0;
  while (ia < a.size() && ib < b.size()) {
    if (a[ia] < b[ib]) {
      ++ia;
    } else if (a[ia] > b[ib]) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

}  // namespace

long long read_coverage(const SequenceSet& code, int radius, BallKind kind, int threads) {
  if (code.size() < 2) throw std::invalid_argument("coverage undefined");
  int q = code[0].q();
  // Balls as sorted rank vectors over the target-length space; pair sweep by
  // two-pointer count, sharded by rows with a deterministic max merge.
  std::vector<std::vector<unsigned long long>> balls(code.size());
  for (std::size_t i = 0; i < code.size(); ++i) {
    Ball b = kind == BallKind::deletion ? deletion_ball(code[i], radius)
                                        : insertion_ball(code[i], radius);
    balls[i].reserve(b.elements.size());
    for (const Sequence& w : b.elements) {
      unsigned long long rank = 0;
      for (int j = 0; j < w.length(); ++j) rank = rank * static_cast<unsigned>(q) + w[j];
      balls[i].push_back(rank);
    }
  }
  if (threads < 1) threads = 1;
  std::vector<long long> best_per_thread(static_cast<std::size_t>(threads), 0);
  std::atomic<std::size_t> next_row{0};
  auto worker = [&](int tid) {
    long long best = 0;
    while (true) {
      std::size_t i = next_row.fetch_add(1);
      if (i >= code.size()) break;
      for (std::size_t j = i + 1; j < code.size(); ++j) {
        best = std::max(best, sorted_intersection_count(balls[i], balls[j]));
      }
    }
    best_per_thread[static_cast<std::size_t>(tid)] = best;
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int tid = 0; tid < threads; ++tid) pool.emplace_back(worker, tid);
    for (auto& th : pool) th.join();
  }
  long long best = 0;
  for (long long v : best_per_thread) best = std::max(best, v);
  return best;
}

double redundancy(const SequenceSet& code, int n, int q) {
  if (code.empty()) throw std::invalid_argument("empty code");
  return n * std::log2(static_cast<double>(q)) - std::log2(static_cast<double>(code.size()));
}

}  // namespace recon
