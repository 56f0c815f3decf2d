#include "recon/counting.hpp"

#include <stdexcept>
#include <string>

namespace recon {

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

BigInt insertion_ball_size(long long n, long long t, int q) {
  if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
  if (n < 0) throw std::invalid_argument("negative length");
  if (t < 0) return 0;
  BigInt total = 0;
  BigInt qpow = 1;
  for (long long i = 0; i <= t; ++i) {
    total += binomial(n + t, i) * qpow;
    qpow *= (q - 1);
  }
  return total;
}

namespace {

BigInt ipow(long long base, long long e) {
  BigInt r = 1;
  for (long long i = 0; i < e; ++i) r *= base;
  return r;
}

BigInt n_plus_formula(long long n, long long t, long long k, long long ell, int q) {
  BigInt total = 0;
  for (long long j = ell; j <= k; ++j) {
    for (long long i = 0; i <= k - j; ++i) {
      BigInt term = binomial(t - k + 2 * j, j) * binomial(t + j - i, t - k + 2 * j) *
                    binomial(n + t, i) * ipow(q - 1, i);
      if ((k + j - i) % 2 != 0) term = -term;
      total += term;
    }
  }
  return total;
}

// Zero for parameter combinations outside the legal range; the residual
// bounds below reference such terms at small t.
BigInt n_plus_or_zero(long long n, long long t, long long k, long long ell, int q) {
  if (!(t >= k && k >= ell && ell >= 1 && n >= 1)) return 0;
  return n_plus_formula(n, t, k, ell, q);
}

BigInt ins_ball_or_zero(long long n, long long t, int q) {
  if (t < 0 || n < 0) return 0;
  return insertion_ball_size(n, t, q);
}

}  // namespace

BigInt max_insertion_intersection(long long n, long long t, long long k, long long ell, int q) {
  if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
  if (!(t >= k && k >= ell && ell >= 1)) {
    throw std::invalid_argument("requires t >= k >= l >= 1");
  }
  if (n < 1) throw std::invalid_argument("requires n >= 1");
  return n_plus_formula(n, t, k, ell, q);
}

BigInt residual_intersection_bound(long long n, long long t, int q) {
  if (t < 2 || n < 2) throw std::invalid_argument("requires t >= 2 and n >= 2");
  return n_plus_or_zero(n - 1, t - 1, t - 1, 1, q) +
         2 * (q - 2) * n_plus_or_zero(n - 1, t - 1, t - 2, 1, q) +
         BigInt(q - 2) * (q - 2) * n_plus_or_zero(n, t - 2, t - 2, 1, q) -
         BigInt(q - 1) * (q - 1) * ins_ball_or_zero(n + 1, t - 3, q);
}

BigInt residual_intersection_bound_gapped(long long n, long long t, int q) {
  if (t < 2 || n < 2) throw std::invalid_argument("requires t >= 2 and n >= 2");
  return n_plus_or_zero(n - 1, t - 1, t - 1, 2, q) +
         2 * (q - 2) * n_plus_or_zero(n - 1, t - 1, t - 2, 1, q) +
         BigInt(q - 2) * (q - 2) * n_plus_or_zero(n, t - 2, t - 2, 1, q) -
         BigInt(q - 1) * (q - 1) * ins_ball_or_zero(n + 1, t - 3, q);
}

BigInt deletion_intersection_run_bound(long long runs_x, long long runs_y, long long t) {
  if (runs_x < 1 || runs_y < 1 || t < 1) throw std::invalid_argument("parameters must be positive");
  return binomial(runs_x + t - 3, t - 1) + binomial(runs_y + t - 3, t - 1);
}

long long run_cap(long long n, int q) {
  return static_cast<long long>(q - 1) * (n - 1) / q + 1;
}

BigInt run_code_coverage_threshold(long long n, long long t, int q) {
  if (n < 2 || t < 1) throw std::invalid_argument("requires n >= 2 and t >= 1");
  return 2 * binomial(run_cap(n, q) + t - 3, t - 1);
}

long long insertion_equivalence_min_n(int t, int q, long long n_cap) {
  if (t < 2) throw std::invalid_argument("requires t >= 2");
  for (long long n = 2; n <= n_cap; ++n) {
    BigInt lhs = insertion_ball_size(n + 1, t - 1, q);
    BigInt a = residual_intersection_bound(n, t, q) -
               max_insertion_intersection(n + 1, t - 1, t - 1, 1, q);
    BigInt b = max_insertion_intersection(n, t, t, 2, q);
    if (lhs > a && lhs > b) return n;
  }
  throw std::runtime_error("no length below cap " + std::to_string(n_cap) +
                           " satisfies the threshold inequality");
}

}  // namespace recon
