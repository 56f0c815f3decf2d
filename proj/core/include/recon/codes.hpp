#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "recon/balls.hpp"
#include "recon/counting.hpp"
#include "recon/errors.hpp"
#include "recon/sequence.hpp"

namespace recon {

/// k-th order Varshamov-Tenengolts syndrome: sum of i^k z_i over 1-based
/// positions.
BigInt vt_syndrome(std::span<const int> z, int order);
BigInt vt_syndrome(const Sequence& z, int order);

/// Fewest substrings covering z such that within each substring all non-zero
/// entries share one sign. Greedy left-to-right, which is optimal here since
/// any valid partition must cut between opposite-sign entries.
int sign_run_count(std::span<const int> z);

long long smallest_prime_at_least(long long lo);

enum class Family {
  run_bounded,
  n7_single_ins,
  n5,
  n4,
  n3,
  n2,
  aux4,
  separator,
  period_restricted,
};

const char* to_string(Family family);
std::optional<Family> family_from_string(std::string_view name);

/// Tagged description of one code family instance. The residue/modulus lists
/// are ordered per family (see the README for the serialized layout):
///   n7_single_ins     [a] / [n1]
///   n3                [a0, a1] / [M0, M1]
///   aux4              [d1, d2, d3] / [2q-1, p, D3]       (uses P, p)
///   separator         row color targets / row color counts (uses P)
///   n5                n7 ++ separator at (P-1)/3          (uses P)
///   n4                n5 ++ aux4                          (uses P, p)
///   n2                n3 ++ separator at P                (uses P)
///   period_restricted none (uses t and P as the length cap)
struct CodeFamilySpec {
  Family family = Family::run_bounded;
  int n = 0;
  int q = 2;
  std::vector<long long> residues;
  std::vector<long long> moduli;
  int P = 0;
  long long p = 0;
  int t = 0;
};

/// Spec with the standard parameter formulas for (family, n, q) and all
/// residues zeroed.
CodeFamilySpec default_spec(Family family, int n, int q);

/// Window parameter 3 ceil(log_q n + log_q log_q n) + 4 used by the n5/n4
/// constructions; always 1 mod 3.
int default_window_n5(int n, int q);

/// Window parameter ceil(log2 n) + 5 used by the n2 construction.
int default_window_n2(int n);

void validate_spec(const CodeFamilySpec& spec);

/// Residue signature of x under the family's congruences, or nullopt when x
/// fails one of the family's structural filters (run bound, period
/// restriction). Membership means signature == spec.residues.
std::optional<std::vector<long long>> code_signature(const CodeFamilySpec& spec, const Sequence& x);

bool code_contains(const CodeFamilySpec& spec, const Sequence& x);

/// All members in canonical order. Throws BudgetError when q^n exceeds the
/// budget.
SequenceSet enumerate_code(const CodeFamilySpec& spec, long long budget);

/// Residue tuple maximizing the code size, realized by a full sweep of the
/// signature classes; ties break to the lexicographically smallest residues.
CodeFamilySpec best_params(Family family, int n, int q, long long budget);

/// Exact maximum pairwise ball-intersection size within the code.
long long read_coverage(const SequenceSet& code, int radius, BallKind kind, int threads = 1);

/// n log2 q - log2 |code|.
double redundancy(const SequenceSet& code, int n, int q);

/// Deterministic coloring of binary words such that two distinct words of
/// equal length whose stripped cores are short (at most 5x the window
/// parameter) and whose 2-insertion balls intersect always receive different
/// colors. Desk-scale replacement for the linear-time labeling the
/// constructions assume: built by greedy coloring of the explicit conflict
/// graph, so the separation property holds by construction.
class Separator {
public:
  Separator(int n, int window_param, int color_cap);

  int color(const Sequence& binary_word) const;
  int color_count() const { return color_count_; }
  int window_param() const { return window_param_; }
  int n() const { return n_; }

private:
  int n_;
  int window_param_;
  int color_count_ = 0;
  std::vector<int> colors_;
};

inline constexpr int kDefaultColorCap = 1'000'000;

/// Shared per-(n, window) separator instances; built on first use.
const Separator& separator_for(int n, int window_param, int color_cap = kDefaultColorCap);

/// Color of one binary row under the shared separator.
int separator_color(const Sequence& binary_word, int window_param);

}  // namespace recon
