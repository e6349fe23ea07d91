#pragma once

#include <vector>

namespace lto::stats {

// Natural log of C(n, k); requires 0 <= k <= n.
double log_choose(long long n, long long k);

// P(X >= k) for X ~ Hypergeometric(N, K, n), exact in log space.
// Requires 0 <= k <= n <= N and 0 <= K <= N; throws std::domain_error
// otherwise. Monotone non-increasing in k by construction: the tail is
// accumulated from the least probable high end downward, so each value is
// a rounded partial sum of the next one plus a nonnegative term.
double hypergeom_upper_tail(long long k, long long K, long long n, long long N);

// Two-sided Fisher exact test for the 2x2 table [[a, b], [c, d]].
// Sums all tables with the observed margins whose point probability is
// <= observed * (1 + 1e-7), compared in log space. The table is first
// canonicalized over the row/column swap orbit, which makes the swap
// invariance bit-exact rather than merely within rounding.
double fisher_two_sided(long long a, long long b, long long c, long long d);

// Benjamini-Hochberg step-up, mapped back to input order; values clipped
// to 1. Throws std::domain_error on inputs outside [0, 1].
std::vector<double> bh_adjust(const std::vector<double>& pvalues);

// Bonferroni, same interface.
std::vector<double> bonferroni_adjust(const std::vector<double>& pvalues);

} // namespace lto::stats
