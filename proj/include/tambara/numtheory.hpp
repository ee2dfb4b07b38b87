#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace tambara {

/// Arbitrary-precision integer used throughout the library.
using Int = mpz_class;

/// Prime factorization with primes strictly ascending and exponents >= 1.
/// The empty factorization represents 1.
struct Factorization {
    std::vector<std::pair<long, int>> factors;

    long value() const;
};

/// Factor n >= 1 by trial division. Throws std::invalid_argument for n <= 0.
Factorization factorize(long n);

/// All divisors of n >= 1, strictly ascending.
std::vector<long> divisors(long n);

/// Distinct prime divisors of n, ascending.
std::vector<long> prime_divisors(long n);

bool is_prime(long n);

/// True iff q is p^k for an odd prime p and k >= 1.
bool is_odd_prime_power(long q);

/// C(ell, i) / ell for prime ell and 1 <= i <= ell-1 (always an integer).
Int binom_over_ell(long ell, long i);

/// Fermat's two-squares criterion: every prime = 3 (mod 4) divides n to an
/// even power. Requires n >= 1.
bool is_sum_of_two_squares(long n);

inline long gcd_long(long a, long b) {
    while (b != 0) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

inline long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }

}  // namespace tambara
