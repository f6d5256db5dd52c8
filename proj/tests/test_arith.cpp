#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eigenbound/arith.hpp"

#include <numeric>

using namespace eigenbound;

TEST_CASE("is_prime basics") {
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK(is_prime(4243));  // trial division up to 66 confirms
    CHECK_FALSE(is_prime(4241 * Int(4243)));
    CHECK(is_prime(Int("1000000000000000003")));
}

TEST_CASE("factorize examples") {
    CHECK(factorize(1).factors.empty());

    Factorization f60 = factorize(60);
    REQUIRE(f60.factors.size() == 3);
    CHECK(f60.factors[0] == std::pair<Int, unsigned>{2, 2});
    CHECK(f60.factors[1] == std::pair<Int, unsigned>{3, 1});
    CHECK(f60.factors[2] == std::pair<Int, unsigned>{5, 1});

    Factorization f546 = factorize(546);
    REQUIRE(f546.factors.size() == 4);
    CHECK(f546.factors[0].first == 2);
    CHECK(f546.factors[1].first == 3);
    CHECK(f546.factors[2].first == 7);
    CHECK(f546.factors[3].first == 13);

    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize handles a large semiprime") {
    Int n = Int("10000000019") * Int("10000000033");
    Factorization f = factorize(n);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == Int("10000000019"));
    CHECK(f.factors[1].first == Int("10000000033"));
}

TEST_CASE("factorize reassembles and phi matches brute count, n <= 10^4") {
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        Factorization f = factorize(n);
        Int prod = 1;
        for (const auto& [p, e] : f.factors)
            for (unsigned i = 0; i < e; ++i) prod *= p;
        REQUIRE(prod == n);
    }
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        std::uint64_t brute = 0;
        for (std::uint64_t a = 1; a <= n; ++a)
            if (std::gcd(a, n) == 1) ++brute;
        REQUIRE(euler_phi(n) == brute);
    }
}

TEST_CASE("euler_phi examples") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(4) == 2);
    CHECK(euler_phi(12) == 4);
}

TEST_CASE("multiplicative_order examples") {
    CHECK(multiplicative_order(1, 7) == 1);
    CHECK(multiplicative_order(2, 5) == 4);
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK_THROWS_AS(multiplicative_order(14, 7), std::invalid_argument);
}

TEST_CASE("is_primitive_root examples") {
    CHECK(is_primitive_root(2, 5));
    CHECK_FALSE(is_primitive_root(4, 5));
    CHECK(is_primitive_root(3, 7));
}

TEST_CASE("is_primitive_root agrees with brute order, p <= 200") {
    for (std::uint64_t p : prime_sieve(200)) {
        for (std::uint64_t a = 1; a < p; ++a) {
            // brute multiplicative order
            std::uint64_t x = a % p, d = 1;
            while (x != 1) {
                x = x * a % p;
                ++d;
            }
            CHECK(is_primitive_root(a, p) == (d == p - 1));
        }
    }
}

TEST_CASE("prime_sieve examples") {
    CHECK(prime_sieve(1).empty());
    CHECK(prime_sieve(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(prime_sieve(30) ==
          std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("count_primes_in_ap examples") {
    CHECK(count_primes_in_ap(1, 4, 1) == 0);
    CHECK(count_primes_in_ap(1, 4, 100) == 11);
    CHECK(count_primes_in_ap(1, 5, 101) == 6);
    CHECK_THROWS_AS(count_primes_in_ap(2, 4, 100), std::invalid_argument);
}

TEST_CASE("AP counts partition the primes, q <= 30, x = 10^4") {
    const std::uint64_t x = 10000;
    auto primes = prime_sieve(x);
    for (std::uint64_t q = 1; q <= 30; ++q) {
        std::uint64_t total = 0;
        for (std::uint64_t a = 1; a <= q; ++a)
            if (std::gcd(a, q) == 1) total += count_primes_in_ap(a, q, x);
        std::uint64_t dividing = 0;
        for (std::uint64_t p : primes)
            if (q % p == 0) ++dividing;
        CHECK(total == primes.size() - dividing);
    }
}

TEST_CASE("least_prime_in_ap examples and scan agreement") {
    CHECK(least_prime_in_ap(2, 5, 10) == 2);
    CHECK(least_prime_in_ap(1, 5, 200) == 11);
    CHECK(least_prime_in_ap(3, 4, 10) == 3);
    CHECK_FALSE(least_prime_in_ap(1, 5, 10).has_value());

    auto primes = prime_sieve(5000);
    for (std::uint64_t q = 3; q <= 20; ++q) {
        for (std::uint64_t a = 1; a < q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            std::optional<std::uint64_t> scan;
            for (std::uint64_t p : primes)
                if (p % q == a) {
                    scan = p;
                    break;
                }
            CHECK(least_prime_in_ap(a, q, 5000) == scan);
        }
    }
}
