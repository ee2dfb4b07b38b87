#pragma once

#include "tambara/numtheory.hpp"

namespace tambara {

/// Virtual class in GW(F_{q^m}) for odd q, identified with a pair
/// (dim, det): virtual dimension together with the determinant exponent in
/// F^x / (F^x)^2, written as alpha^det for a fixed nonsquare alpha.
/// q is a label only; the ring and Tambara structure depend just on parities.
struct GwClass {
    long q = 3;   // odd prime power, carried for labeling and tau
    long m = 1;   // field degree: the class lives in GW(F_{q^m})
    Int dim = 0;  // virtual dimension
    int det = 0;  // determinant exponent in {0, 1}

    bool operator==(const GwClass& o) const {
        return q == o.q && m == o.m && dim == o.dim && det == o.det;
    }
    bool operator!=(const GwClass& o) const { return !(*this == o); }
};

void validate_gw(const GwClass& x);

GwClass gw_add(const GwClass& x, const GwClass& y);
GwClass gw_sub(const GwClass& x, const GwClass& y);
GwClass gw_neg(const GwClass& x);
GwClass gw_mul(const GwClass& x, const GwClass& y);

/// Extension of scalars GW(F_{q^k}) -> GW(F_{q^{k*mult}}): the determinant
/// class survives iff the extension degree is odd.
GwClass gw_restrict(const GwClass& x, long mult);

/// Transfer GW(F_{q^{k*mult}}) -> GW(F_{q^k}), additive:
/// mult even: (n, e) -> (n*mult, n+e mod 2); mult odd: (n, e) -> (n*mult, e).
GwClass gw_transfer(const GwClass& x, long mult);

/// Multiplicative norm GW(F_{q^{k*mult}}) -> GW(F_{q^k}) by the closed
/// determinant-exponent table:
///   (n,0): 0 (mult odd), (n^2-n)/2 (mult=2), (n^3-n^2)/2 (mult>2 even)
///   (n,1): n (mult odd), (n^2-3n)/2 (mult=2), (n^3-3n^2)/2 (mult>2 even)
/// each taken mod 2; the dimension becomes n^mult.
GwClass gw_norm_closed(const GwClass& x, long mult);

/// Same map computed independently: factor mult into primes and, at each
/// prime step ell, peel unary summands with the Tambara reciprocity formula
/// (ell = 2: N(a+b) = N(a) + N(b) + tr(ab); ell odd: the binomial variant),
/// starting from N(1,0) = (1,0) and N(1,1) = (1,1).
GwClass gw_norm_oracle(const GwClass& x, long mult);

/// tau over a finite field of odd order: 1 for the square class, else 2
/// (every element of a finite field is a sum of two squares).
long tau_finite_field(long q, bool nonsquare);

/// tau over Q for r = num/den != 0: the least power of 2 that is a count of
/// squares summing to r, or 0 when r < 0 (capped at 4 by the four-square
/// theorem).
long tau_rational(const Int& num, const Int& den);

/// pi classifier derived from tau: 0 -> 0, {1,2} -> 2, tau >= 4 -> tau/2.
long pi_from_tau(long tau);

}  // namespace tambara
