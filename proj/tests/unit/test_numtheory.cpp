#include <doctest.h>

#include <cmath>

#include "tambara/numtheory.hpp"

using namespace tambara;

TEST_CASE("factorize basic values") {
    CHECK(factorize(1).factors.empty());
    CHECK(factorize(12).factors == std::vector<std::pair<long, int>>{{2, 2}, {3, 1}});
    CHECK(factorize(97).factors == std::vector<std::pair<long, int>>{{97, 1}});
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
    CHECK_THROWS_AS(factorize(-6), std::invalid_argument);
}

TEST_CASE("factorize round-trips through value()") {
    for (long n = 1; n <= 10000; ++n) CHECK(factorize(n).value() == n);
}

TEST_CASE("divisors are ascending and complete") {
    CHECK(divisors(1) == std::vector<long>{1});
    CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(60).size() == 12);
    for (long n = 1; n <= 500; ++n) {
        auto divs = divisors(n);
        long count = 0;
        for (long d = 1; d <= n; ++d) {
            if (n % d == 0) ++count;
        }
        CHECK(count == static_cast<long>(divs.size()));
        for (std::size_t i = 0; i < divs.size(); ++i) {
            CHECK(n % divs[i] == 0);
            if (i > 0) CHECK(divs[i - 1] < divs[i]);
        }
    }
}

TEST_CASE("primality and odd prime powers") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK(is_odd_prime_power(3));
    CHECK(is_odd_prime_power(9));
    CHECK(is_odd_prime_power(13));
    CHECK(is_odd_prime_power(81));
    CHECK_FALSE(is_odd_prime_power(2));
    CHECK_FALSE(is_odd_prime_power(15));
    CHECK_FALSE(is_odd_prime_power(1));
}

TEST_CASE("binom_over_ell values and guard rails") {
    CHECK(binom_over_ell(2, 1) == 1);
    CHECK(binom_over_ell(3, 1) == 1);
    CHECK(binom_over_ell(5, 2) == 2);
    CHECK(binom_over_ell(7, 3) == 5);
    CHECK_THROWS_AS(binom_over_ell(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(binom_over_ell(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(binom_over_ell(5, 5), std::invalid_argument);
}

TEST_CASE("binom_over_ell matches Pascal's triangle") {
    for (long ell : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
        Int row_sum = 0;
        for (long i = 1; i < ell; ++i) {
            Int b;
            mpz_bin_uiui(b.get_mpz_t(), ell, i);
            CHECK(binom_over_ell(ell, i) * ell == b);
            row_sum += b;
        }
        Int two_pow;
        mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, ell);
        CHECK(row_sum == two_pow - 2);
    }
}

TEST_CASE("two-squares criterion agrees with brute force") {
    for (long n = 1; n <= 1000; ++n) {
        bool brute = false;
        for (long x = 0; x * x <= n && !brute; ++x) {
            long rest = n - x * x;
            long y = static_cast<long>(std::sqrt(static_cast<double>(rest)));
            for (long dy = -1; dy <= 1; ++dy) {
                long yy = y + dy;
                if (yy >= 0 && yy * yy == rest) brute = true;
            }
        }
        CHECK(is_sum_of_two_squares(n) == brute);
    }
    CHECK_THROWS_AS(is_sum_of_two_squares(0), std::invalid_argument);
}
