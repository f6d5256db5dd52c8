#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eigenbound/bounds.hpp"

#include <cmath>
#include <numeric>

using namespace eigenbound;

TEST_CASE("gamma0_index examples") {
    CHECK(gamma0_index(1) == 1);
    CHECK(gamma0_index(2) == 3);
    CHECK(gamma0_index(15) == 24);
    CHECK(gamma0_index(11) == 12);
    CHECK(gamma0_index(18) == 36);
}

TEST_CASE("gamma0_index is multiplicative over coprime factors and >= N") {
    for (std::uint64_t m = 1; m <= 60; ++m) {
        CHECK(gamma0_index(m) >= m);
        for (std::uint64_t n = 1; n <= 60; ++n) {
            if (std::gcd(m, n) != 1) continue;
            CHECK(gamma0_index(Int(m) * n) == gamma0_index(m) * gamma0_index(n));
        }
    }
}

TEST_CASE("sturm_bound examples") {
    CHECK(sturm_bound(12, 1) == Rat(1));
    CHECK(sturm_bound(2, 11) == Rat(2));
    CHECK(sturm_bound(4, 1) == Rat(1, 3));
    CHECK(sturm_floor(4, 1) == 0);
    CHECK(sturm_floor(12, 1) == 1);
}

TEST_CASE("murty_bound examples") {
    CHECK(murty_bound(1) == 4);
    CHECK(murty_bound(2) == 9);
    CHECK(murty_bound(6) == 25);
}

TEST_CASE("main_bound examples") {
    BoundBreakdown b1 = main_bound(5, 1, 12);
    CHECK(b1.table_case == TableCase::P_GE_5);
    CHECK(b1.gstar_term == 4);
    CHECK(b1.sturm_term == Rat(1));
    CHECK(b1.selected == Rat(4));

    BoundBreakdown b2 = main_bound(3, 9, 12);
    CHECK(b2.table_case == TableCase::P3_POWER_OF_3);
    CHECK(b2.adjusted_level == 18);
    CHECK(b2.sturm_term == Rat(36));
    CHECK(b2.gstar_term == 4);
    CHECK(b2.selected == Rat(36));

    BoundBreakdown b3 = main_bound(2, 3, 2);
    CHECK(b3.table_case == TableCase::P2_OTHER);
    CHECK(b3.adjusted_level == 15);
    CHECK(b3.sturm_term == Rat(4));
    CHECK(b3.gstar_term == 25);
    CHECK(b3.selected == Rat(25));
}

TEST_CASE("main_bound table cases partition all (p, N)") {
    // N = 1 counts as 3^0; exactly one case fires for each pair.
    for (std::uint64_t p : {2, 3, 5, 7, 13}) {
        for (std::uint64_t N = 1; N <= 120; ++N) {
            BoundBreakdown bd = main_bound(p, N, 2);
            switch (bd.table_case) {
                case TableCase::P_GE_5:
                    CHECK(p >= 5);
                    CHECK(bd.adjusted_level == N);
                    break;
                case TableCase::P3_POWER_OF_3: {
                    CHECK(p == 3);
                    std::uint64_t m = N;
                    while (m % 3 == 0) m /= 3;
                    CHECK(m == 1);
                    CHECK(bd.adjusted_level == 2 * N);
                    break;
                }
                case TableCase::P3_OTHER: {
                    CHECK(p == 3);
                    std::uint64_t m = N;
                    while (m % 3 == 0) m /= 3;
                    CHECK(m != 1);
                    CHECK(bd.adjusted_level == N);
                    break;
                }
                case TableCase::P2_DIV_5_7_11:
                    CHECK(p == 2);
                    CHECK((N % 5 == 0 || N % 7 == 0 || N % 11 == 0));
                    CHECK(bd.adjusted_level == N);
                    break;
                case TableCase::P2_OTHER:
                    CHECK(p == 2);
                    CHECK(N % 5 != 0);
                    CHECK(N % 7 != 0);
                    CHECK(N % 11 != 0);
                    CHECK(bd.adjusted_level == 5 * N);
                    break;
            }
            CHECK(bd.selected == std::max(Rat(bd.gstar_term), bd.sturm_term));
        }
    }
}

TEST_CASE("bs_bound and bs_refined_bound examples") {
    CHECK(bs_bound(5) == doctest::Approx(129.52).epsilon(1e-3));
    CHECK(bs_bound(3) == doctest::Approx(21.72).epsilon(1e-3));
    CHECK(bs_bound(2) == doctest::Approx(3.8437).epsilon(1e-3));
    CHECK(bs_refined_bound(5) == doctest::Approx(101.02).epsilon(1e-3));
    CHECK(bs_refined_bound(3) == doctest::Approx(16.94).epsilon(1e-3));
    CHECK_THROWS_AS(bs_bound(1), std::invalid_argument);
    CHECK_THROWS_AS(bs_refined_bound(2), std::invalid_argument);
    for (std::uint64_t q = 3; q <= 50; ++q)
        CHECK(bs_refined_bound(q) < bs_bound(q));
}

TEST_CASE("least prime below refined bound exists, 3 <= q <= 120") {
    // GRH-conditional at heart; a failure here would be reportable news.
    for (std::uint64_t q = 3; q <= 120; ++q) {
        std::uint64_t cap = static_cast<std::uint64_t>(std::ceil(bs_refined_bound(q)));
        for (std::uint64_t a = 1; a < q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            auto l = least_prime_in_ap(a, q, cap);
            CHECK(l.has_value());
        }
    }
}

TEST_CASE("dist_lower_bound examples") {
    DistLowerBound d1 = dist_lower_bound(5, 1);
    CHECK(d1.threshold == doctest::Approx(101.02).epsilon(1e-3));
    CHECK(d1.guaranteed_count == 1);

    DistLowerBound d2 = dist_lower_bound(5, 2);
    CHECK(d2.threshold == doctest::Approx(10102.1).epsilon(1e-3));
    CHECK(d2.guaranteed_count == 5);

    DistLowerBound d3 = dist_lower_bound(3, 1);
    CHECK(d3.threshold == doctest::Approx(16.94).epsilon(1e-3));
    CHECK(d3.guaranteed_count == 1);
}

TEST_CASE("lemma_ap_floor examples") {
    auto r = lemma_ap_floor(5, 10103);
    REQUIRE(r.has_value());
    CHECK(*r == 2);  // 10103^{1/9} = 2.79...
    CHECK_FALSE(lemma_ap_floor(5, 100).has_value());
    CHECK_THROWS_AS(lemma_ap_floor(3, 1e9), std::invalid_argument);

    // applicable right at the boundary threshold for q = 7
    double threshold = 6.24 * std::pow(7.0, 4) * std::pow(std::log(7.0), 2);
    CHECK(lemma_ap_floor(7, threshold * 1.0000001).has_value());
}

TEST_CASE("cor_upper_bound examples") {
    CorUpperBound c1 = cor_upper_bound(5, 1);
    CHECK(c1.index == 2);
    CHECK(c1.bound == doctest::Approx(101.02).epsilon(1e-3));

    CorUpperBound c2 = cor_upper_bound(5, 2);
    CHECK(c2.index == 10);
    CHECK(c2.bound == doctest::Approx(10102.1).epsilon(1e-3));

    CorUpperBound c3 = cor_upper_bound(7, 1);
    CHECK(c3.index == 2);
    // 1.56 * 49 * (ln 7)^2
    CHECK(c3.bound == doctest::Approx(1.56 * 49 * std::pow(std::log(7.0), 2)).epsilon(1e-9));
    CHECK_THROWS_AS(cor_upper_bound(2, 1), std::invalid_argument);
}

TEST_CASE("nphi_lower examples") {
    CHECK(nphi_lower(5) == 6);
    CHECK(nphi_lower(7) == 8);
    CHECK(nphi_lower(11) == 144);  // phi(10) = 4, so (11+1)^2
    CHECK_THROWS_AS(nphi_lower(3), std::invalid_argument);
}

TEST_CASE("worstcase_thresholds examples") {
    WorstCaseThresholds t5 = worstcase_thresholds(5);
    CHECK(t5.t1 == doctest::Approx(122463).epsilon(1e-4));
    double expected_t2 = 467.2512 * std::pow(5.0, 8) * std::pow(std::log(5.0), 4);
    CHECK(t5.t2 == doctest::Approx(expected_t2).epsilon(1e-6));
    for (std::uint64_t p : {5, 7, 11, 101}) {
        WorstCaseThresholds t = worstcase_thresholds(p);
        CHECK(t.t2 > t.t1);
    }
}

TEST_CASE("theoretical_r examples") {
    CHECK(theoretical_r(5) == 7);  // N_5 = 9282 < t1(5) <= N_6 = 213486

    // minimality: N_{r-1} >= t1 and N_{r-2} < t1
    for (std::uint64_t p : {5, 7, 11, 13}) {
        unsigned r = theoretical_r(p);
        REQUIRE(r >= 3);
        Int t1 = theoretical_t1_ceil(p);
        WorstCaseSequence seq = worst_case_sequence(p, r);
        CHECK(seq.Ns[r - 2] >= t1);  // N_{r-1}
        CHECK(seq.Ns[r - 3] < t1);   // N_{r-2}
    }
}
