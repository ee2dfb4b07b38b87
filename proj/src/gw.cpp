#include "tambara/gw.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace tambara {

void validate_gw(const GwClass& x) {
    if (!is_odd_prime_power(x.q)) throw std::invalid_argument("GwClass: q must be an odd prime power");
    if (x.m < 1) throw std::invalid_argument("GwClass: field degree must be positive");
    if (x.det != 0 && x.det != 1) throw std::invalid_argument("GwClass: det must be 0 or 1");
}

namespace {

void require_same_field(const GwClass& x, const GwClass& y) {
    if (x.q != y.q || x.m != y.m) throw std::invalid_argument("GwClass: field mismatch");
}

int parity(const Int& n) { return mpz_odd_p(n.get_mpz_t()) ? 1 : 0; }

/// The (dim, det) pair with the field label stripped; all structure maps
/// only depend on this data and on parities of the degrees involved.
struct Core {
    Int n;
    int e;

    bool operator<(const Core& o) const { return n < o.n || (n == o.n && e < o.e); }
};

Core core_add(const Core& x, const Core& y) { return {x.n + y.n, (x.e + y.e) % 2}; }

/// Negation preserves det: x + (-x) = 0 forces det(-x) = det(x).
Core core_neg(const Core& x) { return {-x.n, x.e}; }

Core core_mul(const Core& x, const Core& y) {
    return {x.n * y.n, (parity(x.n) * y.e + parity(y.n) * x.e) % 2};
}

Core core_scale(const Int& c, const Core& x) { return {c * x.n, parity(c) * x.e}; }

Core core_transfer(const Core& x, long mult) {
    if (mult % 2 == 0) return {x.n * mult, (parity(x.n) + x.e) % 2};
    return {x.n * mult, x.e};
}

Int int_pow(const Int& base, long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

Core core_pow(const Core& x, long k) {
    Core r{1, 0};
    for (long i = 0; i < k; ++i) r = core_mul(r, x);
    return r;
}

/// tr(sum_{i=1}^{ell-1} C(ell,i)/ell a^i b^{ell-i}), the correction term in
/// the prime-step reciprocity formula N(a+b) = N(a) + N(b) + cross(a, b).
Core reciprocity_cross(const Core& a, const Core& b, long ell) {
    Core s{0, 0};
    for (long i = 1; i < ell; ++i) {
        s = core_add(s, core_scale(binom_over_ell(ell, i),
                                   core_mul(core_pow(a, i), core_pow(b, ell - i))));
    }
    return core_transfer(s, ell);
}

Core oracle_step(const Core& x, long ell, std::map<Core, Core>& memo);

Core oracle_step_uncached(const Core& x, long ell, std::map<Core, Core>& memo) {
    if (x.n == 0 && x.e == 0) return {0, 0};
    if (x.n == 1) return x;  // N(1,0) = (1,0) and N(1,1) = (1,1)
    if (x.n == 0) {
        // (0,1) = (1,1) + (-1,0)
        Core a{1, 1}, b{-1, 0};
        return core_add(core_add(oracle_step(a, ell, memo), oracle_step(b, ell, memo)),
                        reciprocity_cross(a, b, ell));
    }
    if (x.n < 0) {
        // 0 = N(x + (-x)) = N(x) + N(-x) + cross(x, -x)
        Core y = core_neg(x);
        return core_neg(core_add(oracle_step(y, ell, memo), reciprocity_cross(x, y, ell)));
    }
    // Split roughly in half so the peeling depth stays logarithmic in n.
    Core a{x.n / 2, x.e}, b{x.n - x.n / 2, 0};
    return core_add(core_add(oracle_step(a, ell, memo), oracle_step(b, ell, memo)),
                    reciprocity_cross(a, b, ell));
}

Core oracle_step(const Core& x, long ell, std::map<Core, Core>& memo) {
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    Core r = oracle_step_uncached(x, ell, memo);
    memo.emplace(x, r);
    return r;
}

long norm_source_degree(const GwClass& x, long mult) {
    if (mult < 1) throw std::invalid_argument("gw norm/transfer: multiplier must be positive");
    if (x.m % mult != 0) {
        throw std::invalid_argument("gw norm/transfer: multiplier must divide the field degree");
    }
    return x.m / mult;
}

}  // namespace

GwClass gw_add(const GwClass& x, const GwClass& y) {
    require_same_field(x, y);
    Core r = core_add({x.dim, x.det}, {y.dim, y.det});
    return {x.q, x.m, r.n, r.e};
}

GwClass gw_sub(const GwClass& x, const GwClass& y) { return gw_add(x, gw_neg(y)); }

GwClass gw_neg(const GwClass& x) { return {x.q, x.m, -x.dim, x.det}; }

GwClass gw_mul(const GwClass& x, const GwClass& y) {
    require_same_field(x, y);
    Core r = core_mul({x.dim, x.det}, {y.dim, y.det});
    return {x.q, x.m, r.n, r.e};
}

GwClass gw_restrict(const GwClass& x, long mult) {
    if (mult < 1) throw std::invalid_argument("gw_restrict: multiplier must be positive");
    return {x.q, x.m * mult, x.dim, mult % 2 == 1 ? x.det : 0};
}

GwClass gw_transfer(const GwClass& x, long mult) {
    long k = norm_source_degree(x, mult);
    Core r = core_transfer({x.dim, x.det}, mult);
    return {x.q, k, r.n, r.e};
}

GwClass gw_norm_closed(const GwClass& x, long mult) {
    long k = norm_source_degree(x, mult);
    if (mult == 1) return x;  // identity extension; the odd-m det row assumes m > 1
    const Int& n = x.dim;
    Int exponent;
    if (mult % 2 == 1) {
        exponent = x.det == 0 ? Int(0) : n;
    } else if (x.det == 0) {
        exponent = mult == 2 ? Int((n * n - n) / 2) : Int((n * n * n - n * n) / 2);
    } else {
        exponent = mult == 2 ? Int((n * n - 3 * n) / 2) : Int((n * n * n - 3 * n * n) / 2);
    }
    return {x.q, k, int_pow(n, mult), parity(exponent)};
}

GwClass gw_norm_oracle(const GwClass& x, long mult) {
    long k = norm_source_degree(x, mult);
    Core c{x.dim, x.det};
    for (auto [p, e] : factorize(mult).factors) {
        for (int i = 0; i < e; ++i) {
            std::map<Core, Core> memo;
            c = oracle_step(c, p, memo);
        }
    }
    return {x.q, k, c.n, c.e};
}

long tau_finite_field(long q, bool nonsquare) {
    if (!is_odd_prime_power(q)) {
        throw std::invalid_argument("tau_finite_field: q must be an odd prime power");
    }
    return nonsquare ? 2 : 1;
}

long tau_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("tau_rational: zero denominator");
    if (num == 0) throw std::invalid_argument("tau_rational: tau is defined for nonzero r");
    if ((num < 0) != (den < 0)) return 0;
    // r = a/b and a*b differ by the square b^2, so squares and two-square
    // sums can be read off the integer a*b.
    Int ab = abs(num * den);
    if (mpz_perfect_square_p(ab.get_mpz_t())) return 1;
    if (!ab.fits_slong_p()) throw std::invalid_argument("tau_rational: numerator*denominator too large");
    return is_sum_of_two_squares(ab.get_si()) ? 2 : 4;
}

long pi_from_tau(long tau) {
    if (tau == 0) return 0;
    if (tau == 1 || tau == 2) return 2;
    if (tau >= 4 && (tau & (tau - 1)) == 0) return tau / 2;
    throw std::invalid_argument("pi_from_tau: tau must be 0 or a power of 2");
}

}  // namespace tambara
