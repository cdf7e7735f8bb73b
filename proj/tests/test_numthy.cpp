#include <numeric>

#include "doctest.h"
#include "hqg/errors.hpp"
#include "hqg/numthy.hpp"

using namespace hqg;

TEST_SUITE("numthy") {

TEST_CASE("factorize") {
    CHECK(factorize(1).empty());
    CHECK(factorize(9) == PrimeFactorization{{3, 2}});
    CHECK(factorize(2188) == PrimeFactorization{{2, 2}, {547, 1}});
    CHECK(is_prime(547));
    CHECK(factorize(2 * 3 * 3 * 5 * 7 * 7 * 7) == PrimeFactorization{{2, 1}, {3, 2}, {5, 1}, {7, 3}});
}

TEST_CASE("factorize multiplies back") {
    for (std::int64_t n = 1; n <= 5000; ++n) {
        const PrimeFactorization f = factorize(n);
        REQUIRE(product(f) == n);
        for (std::size_t i = 0; i < f.size(); ++i) {
            CHECK(is_prime(f[i].prime));
            if (i) CHECK(f[i - 1].prime < f[i].prime);
        }
    }
}

TEST_CASE("divisors") {
    CHECK(divisors(1) == std::vector<std::int64_t>{1});
    CHECK(divisors(6) == std::vector<std::int64_t>{1, 2, 3, 6});
    CHECK(divisors(14) == std::vector<std::int64_t>{1, 2, 7, 14});
    for (std::int64_t n = 1; n <= 500; ++n) {
        std::vector<std::int64_t> brute;
        for (std::int64_t d = 1; d <= n; ++d)
            if (n % d == 0) brute.push_back(d);
        CHECK(divisors(n) == brute);
    }
}

TEST_CASE("valuation") {
    CHECK(valuation(9, 3) == 2);
    CHECK(valuation(14, 3) == 0);
    CHECK(valuation(2188, 2) == 2);
}

TEST_CASE("prime powers") {
    const auto q = as_prime_power(2187);
    REQUIRE(q);
    CHECK(q->p == 3);
    CHECK(q->n == 7);
    CHECK_FALSE(as_prime_power(6));
    CHECK_FALSE(as_prime_power(1));
    CHECK_FALSE(as_prime_power(0));
    int count = 0;
    for (std::int64_t n = 2; n <= 100; ++n) count += as_prime_power(n) ? 1 : 0;
    CHECK(count == 35);  // 25 primes and 10 proper prime powers
}

TEST_CASE("gcd and ipow") {
    for (std::int64_t a = 0; a < 60; ++a)
        for (std::int64_t b = 0; b < 60; ++b) CHECK(gcd(a, b) == std::gcd(a, b));
    CHECK(ipow(3, 7) == 2187);
    CHECK(ipow(2, 0) == 1);
}

TEST_CASE("exact division") {
    CHECK(exact_div(168, 84, "t") == 2);
    CHECK_THROWS_AS(exact_div(7, 2, "t"), ConsistencyError);
    const wide big = static_cast<wide>(2188) * 2188 * 2187 * 2187;
    CHECK(to_string(big) == "22897717944336");
    CHECK(to_string(-static_cast<wide>(42)) == "-42");
}

}
