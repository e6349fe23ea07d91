#include "exact_stats.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lto::stats {

double log_choose(long long n, long long k) {
    return std::lgamma(double(n + 1)) - std::lgamma(double(k + 1)) -
           std::lgamma(double(n - k + 1));
}

double hypergeom_upper_tail(long long k, long long K, long long n, long long N) {
    if (N < 0 || K < 0 || n < 0 || k < 0 || K > N || n > N || k > n)
        throw std::domain_error("hypergeometric parameters out of range");
    const long long lo = std::max(0LL, n - (N - K));  // support minimum
    const long long hi = std::min(n, K);
    if (k <= lo)
        return 1.0;  // the whole support qualifies
    if (k > hi)
        return 0.0;
    const double log_denom = log_choose(N, n);
    double tail = 0.0;
    for (long long i = hi; i >= k; --i)
        tail += std::exp(log_choose(K, i) + log_choose(N - K, n - i) - log_denom);
    return std::clamp(tail, 0.0, 1.0);
}

double fisher_two_sided(long long a, long long b, long long c, long long d) {
    if (a < 0 || b < 0 || c < 0 || d < 0)
        throw std::domain_error("negative cell in 2x2 table");
    // row swap, column swap, and both leave the p-value invariant; pick one
    // representative so all four orbit members take the identical code path
    std::array<std::array<long long, 4>, 4> orbit{{{a, b, c, d},
                                                   {c, d, a, b},
                                                   {b, a, d, c},
                                                   {d, c, b, a}}};
    auto t = *std::min_element(orbit.begin(), orbit.end());
    a = t[0], b = t[1], c = t[2], d = t[3];

    const long long r1 = a + b, r2 = c + d, c1 = a + c, N = r1 + r2;
    if (N == 0)
        return 1.0;
    const double log_denom = log_choose(N, c1);
    auto log_point = [&](long long x) {
        return log_choose(r1, x) + log_choose(r2, c1 - x) - log_denom;
    };
    const double log_obs = log_point(a);
    const double cutoff = log_obs + std::log1p(1e-7);
    const long long lo = std::max(0LL, c1 - r2);
    const long long hi = std::min(r1, c1);
    double p = 0.0;
    for (long long x = lo; x <= hi; ++x) {
        double lp = log_point(x);
        if (lp <= cutoff)
            p += std::exp(lp);
    }
    return std::clamp(p, 0.0, 1.0);
}

std::vector<double> bh_adjust(const std::vector<double>& pvalues) {
    const size_t m = pvalues.size();
    for (double p : pvalues)
        if (!(p >= 0.0 && p <= 1.0))
            throw std::domain_error("p-value outside [0, 1]");
    std::vector<size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t i, size_t j) { return pvalues[i] < pvalues[j]; });
    std::vector<double> out(m);
    double running = 1.0;
    for (size_t r = m; r > 0; --r) {
        size_t idx = order[r - 1];
        double candidate = (pvalues[idx] * double(m)) / double(r);
        running = std::min(running, candidate);
        out[idx] = std::min(1.0, running);
    }
    return out;
}

std::vector<double> bonferroni_adjust(const std::vector<double>& pvalues) {
    std::vector<double> out;
    out.reserve(pvalues.size());
    for (double p : pvalues) {
        if (!(p >= 0.0 && p <= 1.0))
            throw std::domain_error("p-value outside [0, 1]");
        out.push_back(std::min(1.0, p * double(pvalues.size())));
    }
    return out;
}

} // namespace lto::stats
