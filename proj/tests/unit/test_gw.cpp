#include <doctest.h>

#include <random>

#include "tambara/gw.hpp"

using namespace tambara;

namespace {

GwClass gw(long q, long m, long dim, int det) { return {q, m, Int(dim), det}; }

GwClass random_class(long q, long m, std::mt19937& rng) {
    std::uniform_int_distribution<long> dim(-10, 10);
    return {q, m, Int(dim(rng)), static_cast<int>(rng() % 2)};
}

}  // namespace

TEST_CASE("validation") {
    CHECK_NOTHROW(validate_gw(gw(3, 1, 0, 0)));
    CHECK_NOTHROW(validate_gw(gw(27, 4, -5, 1)));
    CHECK_THROWS_AS(validate_gw(gw(2, 1, 0, 0)), std::invalid_argument);   // even q
    CHECK_THROWS_AS(validate_gw(gw(15, 1, 0, 0)), std::invalid_argument);  // not a prime power
    CHECK_THROWS_AS(validate_gw(gw(3, 0, 0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(validate_gw({3, 1, Int(0), 2}), std::invalid_argument);
}

TEST_CASE("ring structure of (dim, det) pairs") {
    auto one = gw(3, 1, 1, 0), alpha = gw(3, 1, 1, 1);
    CHECK(gw_mul(alpha, alpha) == one);  // <a><a> = <a^2> = <1>
    CHECK(gw_mul(gw(3, 1, 2, 1), alpha) == gw(3, 1, 2, 1));
    CHECK(gw_add(one, alpha) == gw(3, 1, 2, 1));
    CHECK(gw_sub(one, one) == gw(3, 1, 0, 0));
    CHECK(gw_neg(alpha) == gw(3, 1, -1, 1));

    std::mt19937 rng(43);
    for (int i = 0; i < 40; ++i) {
        auto x = random_class(3, 2, rng), y = random_class(3, 2, rng), z = random_class(3, 2, rng);
        CHECK(gw_mul(x, y) == gw_mul(y, x));
        CHECK(gw_mul(gw_mul(x, y), z) == gw_mul(x, gw_mul(y, z)));
        CHECK(gw_mul(x, gw_add(y, z)) == gw_add(gw_mul(x, y), gw_mul(x, z)));
        CHECK(gw_mul(x, gw(3, 2, 1, 0)) == x);
        CHECK(gw_add(x, gw_neg(x)) == gw(3, 2, 0, 0));
        // det(xy) = dim(x) det(y) + dim(y) det(x), writing x = a + b<alpha>.
        Int d = x.dim * y.det + y.dim * x.det;
        CHECK(gw_mul(x, y).det == ((d % 2) + 2) % 2);
        // Levels must match.
        CHECK_THROWS_AS(gw_mul(x, gw(3, 3, 1, 0)), std::invalid_argument);
        CHECK_THROWS_AS(gw_add(x, gw(5, 2, 1, 0)), std::invalid_argument);
    }
}

TEST_CASE("restriction is a ring map and kills det along even extensions") {
    CHECK(gw_restrict(gw(3, 1, 2, 1), 2) == gw(3, 2, 2, 0));
    CHECK(gw_restrict(gw(3, 1, 2, 1), 3) == gw(3, 3, 2, 1));
    CHECK(gw_restrict(gw(3, 2, -4, 1), 1) == gw(3, 2, -4, 1));
    std::mt19937 rng(47);
    for (long mult : {2L, 3L, 4L, 5L}) {
        for (int i = 0; i < 20; ++i) {
            auto x = random_class(5, 1, rng), y = random_class(5, 1, rng);
            CHECK(gw_restrict(gw_mul(x, y), mult) ==
                  gw_mul(gw_restrict(x, mult), gw_restrict(y, mult)));
            CHECK(gw_restrict(gw_add(x, y), mult) ==
                  gw_add(gw_restrict(x, mult), gw_restrict(y, mult)));
            CHECK(gw_restrict(gw_restrict(x, 2), 3) == gw_restrict(x, 6));
            CHECK(gw_restrict(x, mult).dim == x.dim);
        }
    }
}

TEST_CASE("transfer is additive and satisfies the projection formula") {
    CHECK(gw_transfer(gw(3, 6, 1, 0), 2) == gw(3, 3, 2, 1));   // even: det picks up dim
    CHECK(gw_transfer(gw(3, 6, 1, 1), 2) == gw(3, 3, 2, 0));
    CHECK(gw_transfer(gw(3, 6, 1, 1), 3) == gw(3, 2, 3, 1));   // odd: det survives
    CHECK(gw_transfer(gw(3, 6, -2, 0), 6) == gw(3, 1, -12, 0));
    CHECK_THROWS_AS(gw_transfer(gw(3, 3, 1, 0), 2), std::invalid_argument);
    std::mt19937 rng(53);
    for (long mult : {2L, 3L, 4L, 6L}) {
        for (int i = 0; i < 20; ++i) {
            auto x = random_class(3, 12, rng), xx = random_class(3, 12, rng);
            auto y = random_class(3, 12 / mult, rng);
            CHECK(gw_add(gw_transfer(x, mult), gw_transfer(xx, mult)) ==
                  gw_transfer(gw_add(x, xx), mult));
            CHECK(gw_transfer(gw_mul(x, gw_restrict(y, mult)), mult) ==
                  gw_mul(gw_transfer(x, mult), y));
            CHECK(gw_transfer(gw_transfer(x, 2), 3) == gw_transfer(x, 6));
            CHECK(gw_transfer(x, mult).dim == x.dim * mult);
        }
    }
}

TEST_CASE("norm closed form equals the reciprocity oracle") {
    for (long mult : {1L, 2L, 3L, 4L, 5L, 6L, 8L, 9L, 12L}) {
        for (long n = -12; n <= 12; ++n) {
            for (int e : {0, 1}) {
                GwClass x{3, 2 * mult, Int(n), e};
                auto closed = gw_norm_closed(x, mult);
                auto oracle = gw_norm_oracle(x, mult);
                CHECK(closed == oracle);
                CHECK(closed.m == 2);
                Int want_dim;
                mpz_pow_ui(want_dim.get_mpz_t(), Int(n).get_mpz_t(), mult);
                CHECK(closed.dim == want_dim);
            }
        }
    }
    CHECK_THROWS_AS(gw_norm_closed(gw(3, 3, 1, 0), 2), std::invalid_argument);
}

TEST_CASE("norm spot values") {
    // Degree-2 norm of <alpha>: dim 1, det table gives (1-3)/2 = -1 -> det 1.
    CHECK(gw_norm_closed(gw(3, 2, 1, 1), 2) == gw(3, 1, 1, 1));
    CHECK(gw_norm_closed(gw(3, 2, 1, 0), 2) == gw(3, 1, 1, 0));
    CHECK(gw_norm_closed(gw(3, 2, 2, 1), 2) == gw(3, 1, 4, 1));
    CHECK(gw_norm_closed(gw(3, 3, 2, 1), 3) == gw(3, 1, 8, 0));
    CHECK(gw_norm_closed(gw(3, 3, 1, 1), 3) == gw(3, 1, 1, 1));
    CHECK(gw_norm_closed(gw(3, 4, 0, 1), 4) == gw(3, 1, 0, 0));
}

TEST_CASE("norm is multiplicative, unital, and functorial") {
    std::mt19937 rng(59);
    for (long mult : {2L, 3L, 4L, 6L}) {
        CHECK(gw_norm_closed(gw(3, mult, 1, 0), mult) == gw(3, 1, 1, 0));
        for (int i = 0; i < 25; ++i) {
            auto x = random_class(3, 12, rng), y = random_class(3, 12, rng);
            CHECK(gw_norm_closed(gw_mul(x, y), mult) ==
                  gw_mul(gw_norm_closed(x, mult), gw_norm_closed(y, mult)));
            CHECK(gw_norm_closed(gw_norm_closed(x, 2), 3) == gw_norm_closed(x, 6));
            CHECK(gw_norm_closed(gw_norm_closed(x, 3), 2) == gw_norm_closed(x, 6));
        }
    }
}

TEST_CASE("Tambara reciprocity for the norm at prime steps") {
    std::mt19937 rng(61);
    for (long ell : {2L, 3L, 5L}) {
        for (int i = 0; i < 30; ++i) {
            auto x = random_class(3, 2 * ell, rng), y = random_class(3, 2 * ell, rng);
            GwClass cross{3, 2 * ell, Int(0), 0};
            for (long j = 1; j < ell; ++j) {
                auto term = x;
                for (long t = 1; t < j; ++t) term = gw_mul(term, x);
                for (long t = 0; t < ell - j; ++t) term = gw_mul(term, y);
                for (long c = binom_over_ell(ell, j).get_si(); c > 0; --c) {
                    cross = gw_add(cross, term);
                }
            }
            CHECK(gw_norm_closed(gw_add(x, y), ell) ==
                  gw_add(gw_add(gw_norm_closed(x, ell), gw_norm_closed(y, ell)),
                         gw_transfer(cross, ell)));
        }
    }
}

TEST_CASE("tau over finite fields and the rationals") {
    CHECK(tau_finite_field(3, false) == 1);
    CHECK(tau_finite_field(3, true) == 2);
    CHECK(tau_finite_field(9, true) == 2);
    CHECK_THROWS_AS(tau_finite_field(4, false), std::invalid_argument);

    CHECK(tau_rational(1, 1) == 1);
    CHECK(tau_rational(4, 9) == 1);
    CHECK(tau_rational(2, 1) == 2);
    CHECK(tau_rational(5, 1) == 2);
    CHECK(tau_rational(10, 1) == 2);
    CHECK(tau_rational(1, 2) == 2);  // 1/2 = 2/4
    CHECK(tau_rational(7, 1) == 4);
    CHECK(tau_rational(21, 1) == 4);
    CHECK(tau_rational(7, 2) == 4);  // 14/4, and 14 is not a sum of two squares
    CHECK(tau_rational(-5, 1) == 0);
    CHECK(tau_rational(5, -1) == 0);
    CHECK_THROWS_AS(tau_rational(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(tau_rational(1, 0), std::invalid_argument);
}

TEST_CASE("tau_rational is invariant under square scaling") {
    std::mt19937 rng(67);
    std::uniform_int_distribution<long> pick(-30, 30), sc(1, 6);
    for (int i = 0; i < 200; ++i) {
        long a = pick(rng), b = pick(rng), s = sc(rng), t = sc(rng);
        if (a == 0 || b == 0) continue;
        CHECK(tau_rational(a, b) == tau_rational(a * s * s, b * t * t));
        CHECK(tau_rational(a, b) == tau_rational(a * b, 1));  // r and r*den^2
    }
}

TEST_CASE("pi from tau") {
    CHECK(pi_from_tau(0) == 0);
    CHECK(pi_from_tau(1) == 2);
    CHECK(pi_from_tau(2) == 2);
    CHECK(pi_from_tau(4) == 2);
    CHECK(pi_from_tau(8) == 4);
    CHECK_THROWS_AS(pi_from_tau(3), std::invalid_argument);
    CHECK_THROWS_AS(pi_from_tau(-1), std::invalid_argument);
}
