#pragma once

#include "tambara/burnside.hpp"
#include "tambara/gw.hpp"
#include "tambara/lattice.hpp"

namespace tambara {

/// A (pro-)cyclic field extension of F_q, fixing which Burnside levels make
/// sense: divisors of N for Finite(N), powers of p up to p^depth for
/// Zp(p, depth), and divisors of the truncation bound for Zhat(depth).
struct ExtensionSpec {
    enum class Shape { finite, zp, zhat };

    long q = 3;  // odd prime power
    Shape shape = Shape::finite;
    long N = 1;      // Finite: group order
    long p = 2;      // Zp: the prime
    long depth = 1;  // Zp: truncation depth; Zhat: truncation bound

    static ExtensionSpec finite(long q, long N) { return {q, Shape::finite, N, 2, 1}; }
    static ExtensionSpec zp(long q, long p, long depth) { return {q, Shape::zp, 1, p, depth}; }
    static ExtensionSpec zhat(long q, long depth) { return {q, Shape::zhat, 1, 2, depth}; }

    /// Order of the finite (truncated) Galois group.
    long modulus() const;
};

void validate_spec(const ExtensionSpec& spec);

/// The Dress map A(C_M) -> GW(F_{q^M}) under the level-M <-> F_{q^M}
/// labeling: sum a_i t_i -> (sum i a_i, sum_{i even} a_i mod 2).
/// Computed both by the parity formula and as sum a_i tr(<1>) along the
/// degree-i subextension; the two routes are asserted equal.
GwClass dress_map(const BurnsideElement& x, const ExtensionSpec& spec);

/// Kernel of the Dress map at level M, as a lattice in coordinates over
/// divisors(M): the card kernel refined by the even-divisor parity condition.
IntLattice dress_kernel_level(const ExtensionSpec& spec, long M);

}  // namespace tambara
