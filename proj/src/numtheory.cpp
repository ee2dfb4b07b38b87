#include "tambara/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace tambara {

long Factorization::value() const {
    long v = 1;
    for (auto [p, e] : factors) {
        for (int i = 0; i < e; ++i) v *= p;
    }
    return v;
}

Factorization factorize(long n) {
    if (n <= 0) throw std::invalid_argument("factorize: argument must be positive");
    Factorization f;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.factors.emplace_back(p, e);
    }
    if (n > 1) f.factors.emplace_back(n, 1);
    return f;
}

std::vector<long> divisors(long n) {
    Factorization f = factorize(n);
    std::vector<long> divs{1};
    for (auto [p, e] : f.factors) {
        std::vector<long> next;
        long pk = 1;
        for (int i = 0; i <= e; ++i) {
            for (long d : divs) next.push_back(d * pk);
            pk *= p;
        }
        divs = std::move(next);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<long> prime_divisors(long n) {
    std::vector<long> ps;
    for (auto [p, e] : factorize(n).factors) ps.push_back(p);
    return ps;
}

bool is_prime(long n) {
    if (n < 2) return false;
    auto f = factorize(n).factors;
    return f.size() == 1 && f[0].second == 1;
}

bool is_odd_prime_power(long q) {
    if (q < 3 || q % 2 == 0) return false;
    return factorize(q).factors.size() == 1;
}

Int binom_over_ell(long ell, long i) {
    if (!is_prime(ell)) throw std::invalid_argument("binom_over_ell: ell must be prime");
    if (i < 1 || i >= ell) throw std::invalid_argument("binom_over_ell: need 1 <= i < ell");
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(ell), static_cast<unsigned long>(i));
    Int q, r;
    mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(ell));
    if (r != 0) throw std::logic_error("binom_over_ell: C(ell, i) not divisible by ell");
    return q;
}

bool is_sum_of_two_squares(long n) {
    if (n < 1) throw std::invalid_argument("is_sum_of_two_squares: argument must be positive");
    for (auto [p, e] : factorize(n).factors) {
        if (p % 4 == 3 && e % 2 == 1) return false;
    }
    return true;
}

}  // namespace tambara
