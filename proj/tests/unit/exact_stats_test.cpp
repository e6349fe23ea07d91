#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "lto/exact_stats.hpp"

#include "generators.hpp"
#include "oracles.hpp"

using lto::stats::bh_adjust;
using lto::stats::bonferroni_adjust;
using lto::stats::fisher_two_sided;
using lto::stats::hypergeom_upper_tail;

TEST_CASE("hypergeometric pinned values") {
    // P(X >= 3), drawing 5 from 10 with 4 marked: 11/42
    CHECK(hypergeom_upper_tail(3, 4, 5, 10) ==
          doctest::Approx(11.0 / 42.0).epsilon(1e-12));
    // certain outcomes
    CHECK(hypergeom_upper_tail(0, 4, 5, 10) == 1.0);
    CHECK(hypergeom_upper_tail(2, 2, 2, 2) == 1.0);
    // impossible outcome: cannot draw more marked than the draw size
    CHECK(hypergeom_upper_tail(5, 4, 5, 10) == 0.0);
    // k below the guaranteed minimum is certain
    CHECK(hypergeom_upper_tail(1, 9, 5, 10) == 1.0);
}

TEST_CASE("hypergeometric matches exact enumeration up to N=18") {
    for (long long N = 0; N <= 18; ++N) {
        for (long long K = 0; K <= N; ++K) {
            for (long long n = 0; n <= N; ++n) {
                for (long long k = 0; k <= n; ++k) {
                    double got = hypergeom_upper_tail(k, K, n, N);
                    double want = oracle::hyper_upper_tail_exact(k, K, n, N)
                                      .convert_to<double>();
                    CHECK(std::abs(got - want) <= 1e-9);
                }
            }
        }
    }
}

TEST_CASE("hypergeometric tail is monotone non-increasing in k") {
    for (long long N : {10, 17, 23}) {
        for (long long K = 0; K <= N; K += 3) {
            for (long long n = 0; n <= N; n += 2) {
                double prev = 2.0;
                for (long long k = 0; k <= n; ++k) {
                    double p = hypergeom_upper_tail(k, K, n, N);
                    CHECK(p <= prev);
                    CHECK(p >= 0.0);
                    CHECK(p <= 1.0);
                    prev = p;
                }
            }
        }
    }
}

TEST_CASE("hypergeometric domain errors") {
    CHECK_THROWS_AS(hypergeom_upper_tail(-1, 4, 5, 10), std::domain_error);
    CHECK_THROWS_AS(hypergeom_upper_tail(0, 11, 5, 10), std::domain_error);
    CHECK_THROWS_AS(hypergeom_upper_tail(0, 4, 11, 10), std::domain_error);
    CHECK_THROWS_AS(hypergeom_upper_tail(6, 4, 5, 10), std::domain_error);
    CHECK_THROWS_AS(hypergeom_upper_tail(0, -1, 5, 10), std::domain_error);
}

TEST_CASE("fisher pinned values") {
    // [[3,1],[1,3]]: two-sided p = 17/35
    CHECK(fisher_two_sided(3, 1, 1, 3) ==
          doctest::Approx(17.0 / 35.0).epsilon(1e-12));
    // degenerate empty table
    CHECK(fisher_two_sided(0, 0, 0, 0) == 1.0);
    // balanced table has nothing more extreme; the sum covers the whole
    // support, so only accumulation noise separates it from 1
    CHECK(fisher_two_sided(5, 5, 5, 5) == doctest::Approx(1.0).epsilon(1e-12));
    // the fixture's differential table
    CHECK(fisher_two_sided(2, 0, 0, 10) ==
          doctest::Approx(1.0 / 66.0).epsilon(1e-12));
}

TEST_CASE("fisher swap invariance is bit-exact") {
    gen::Rng rng(0xF15BEEULL);
    for (int iter = 0; iter < 300; ++iter) {
        long long a = rng.below(12), b = rng.below(12), c = rng.below(12),
                  d = rng.below(12);
        double base = fisher_two_sided(a, b, c, d);
        CHECK(fisher_two_sided(c, d, a, b) == base);  // row swap
        CHECK(fisher_two_sided(b, a, d, c) == base);  // column swap
        CHECK(fisher_two_sided(d, c, b, a) == base);  // both
    }
}

TEST_CASE("fisher matches exact enumeration for margins up to 12") {
    for (long long r1 = 0; r1 <= 12; ++r1) {
        for (long long r2 = 0; r2 <= 12; ++r2) {
            for (long long a = 0; a <= r1; ++a) {
                for (long long c = 0; c <= r2; ++c) {
                    double got = fisher_two_sided(a, r1 - a, c, r2 - c);
                    double want =
                        oracle::fisher_two_sided_exact(a, r1 - a, c, r2 - c)
                            .convert_to<double>();
                    CHECK(std::abs(got - want) <= 1e-9);
                }
            }
        }
    }
}

TEST_CASE("fisher domain errors") {
    CHECK_THROWS_AS(fisher_two_sided(-1, 0, 0, 0), std::domain_error);
    CHECK_THROWS_AS(fisher_two_sided(0, 0, -3, 0), std::domain_error);
}

TEST_CASE("BH pinned example") {
    std::vector<double> q = bh_adjust({0.01, 0.02, 0.03});
    REQUIRE(q.size() == 3);
    CHECK(q[0] == doctest::Approx(0.03).epsilon(1e-15));
    CHECK(q[1] == doctest::Approx(0.03).epsilon(1e-15));
    CHECK(q[2] == doctest::Approx(0.03).epsilon(1e-15));
}

TEST_CASE("BH edge cases") {
    CHECK(bh_adjust({}).empty());
    CHECK(bh_adjust({0.5}) == std::vector<double>{0.5});
    CHECK(bh_adjust({1.0, 1.0}) == std::vector<double>{1.0, 1.0});
    CHECK(bh_adjust({0.0, 0.0}) == std::vector<double>{0.0, 0.0});
    CHECK_THROWS_AS(bh_adjust({0.5, 1.5}), std::domain_error);
    CHECK_THROWS_AS(bh_adjust({-0.1}), std::domain_error);
    CHECK_THROWS_AS(bh_adjust({std::nan("")}), std::domain_error);
}

TEST_CASE("BH matches the step-up oracle on random vectors") {
    gen::Rng rng(0xB44DC0DEULL);
    for (int iter = 0; iter < 1000; ++iter) {
        int m = rng.range(1, 10);
        std::vector<double> p(m);
        for (double& v : p) {
            // mix of smooth values and deliberate ties
            if (rng.chance(30))
                v = double(rng.range(0, 4)) / 4.0;
            else
                v = double(rng.below(1000000)) / 999999.0;
        }
        std::vector<double> got = bh_adjust(p);
        std::vector<double> want = oracle::bh_exact(p);
        REQUIRE(got.size() == want.size());
        for (size_t i = 0; i < got.size(); ++i)
            CHECK(std::abs(got[i] - want[i]) <= 1e-12);
    }
}

TEST_CASE("BH is permutation-equivariant") {
    gen::Rng rng(0x9E27BULL);
    for (int iter = 0; iter < 100; ++iter) {
        int m = rng.range(2, 8);
        std::vector<double> p(m);
        for (double& v : p)
            v = double(rng.below(100)) / 99.0;
        std::vector<double> q = bh_adjust(p);

        std::vector<int> perm(m);
        for (int i = 0; i < m; ++i)
            perm[i] = i;
        rng.shuffle(perm);
        std::vector<double> p2(m);
        for (int i = 0; i < m; ++i)
            p2[i] = p[perm[i]];
        std::vector<double> q2 = bh_adjust(p2);
        for (int i = 0; i < m; ++i)
            CHECK(q2[i] == q[perm[i]]);
    }
}

TEST_CASE("BH output is monotone in the input ordering") {
    gen::Rng rng(0x77AB1EULL);
    for (int iter = 0; iter < 50; ++iter) {
        int m = rng.range(2, 10);
        std::vector<double> p(m);
        for (double& v : p)
            v = double(rng.below(1000)) / 999.0;
        std::vector<double> q = bh_adjust(p);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (p[i] <= p[j])
                    CHECK(q[i] <= q[j] + 1e-15);
    }
}

TEST_CASE("bonferroni") {
    std::vector<double> q = bonferroni_adjust({0.01, 0.4, 0.9});
    CHECK(q[0] == doctest::Approx(0.03).epsilon(1e-15));
    CHECK(q[1] == 1.0);
    CHECK(q[2] == 1.0);
    CHECK(bonferroni_adjust({}).empty());
    CHECK_THROWS_AS(bonferroni_adjust({2.0}), std::domain_error);
}
