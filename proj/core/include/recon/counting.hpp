#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace recon {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, k); zero when k < 0, k > n, or n < 0.
BigInt binomial(long long n, long long k);

/// Size of any radius-t insertion ball around a word of length n:
/// sum_{i=0}^{t} C(n+t, i) (q-1)^i. Zero for t < 0, one for t = 0.
BigInt insertion_ball_size(long long n, long long t, int q);

/// Exact maximum of |I_k(x) cap I_t(y)| over x of length n+t-k and y of
/// length n at insdel distance >= t-k+2l. Requires t >= k >= l >= 1.
BigInt max_insertion_intersection(long long n, long long t, long long k, long long ell, int q);

/// Upper bound on |I_t(x) cap I_t(y) \ I_{t-1}(z)| for pairs whose
/// single-insertion balls intersect exactly in {z}. Requires t >= 2, n >= 2.
BigInt residual_intersection_bound(long long n, long long t, int q);

/// Variant of residual_intersection_bound under the extra hypothesis that the
/// single-insertion balls of the shifted cores are disjoint.
BigInt residual_intersection_bound_gapped(long long n, long long t, int q);

/// Run-based bound on |D_t(x) cap D_t(y)| for distinct equal-length words:
/// C(runs_x + t - 3, t - 1) + C(runs_y + t - 3, t - 1).
BigInt deletion_intersection_run_bound(long long runs_x, long long runs_y, long long t);

/// Coverage threshold 2 C(r + t - 3, t - 1) of the run-bounded code, with
/// run cap r = floor((q-1)(n-1)/q) + 1.
BigInt run_code_coverage_threshold(long long n, long long t, int q);

/// Run cap of the run-bounded code, floor((q-1)(n-1)/q) + 1.
long long run_cap(long long n, int q);

/// Smallest n at which I_q(n+1, t-1) strictly exceeds both
/// residual_intersection_bound(n, t) - N+(n+1, t-1, t-1, 1) and
/// N+(n, t, t, 2); throws when no n below n_cap qualifies.
long long insertion_equivalence_min_n(int t, int q, long long n_cap = 4096);

}  // namespace recon
