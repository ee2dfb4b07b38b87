#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tambara/burnside.hpp"
#include "tambara/dress.hpp"
#include "tambara/lattice.hpp"

namespace tambara {

/// Level-wise presentation of a Tambara ideal of the Burnside functor for
/// C_N: one lattice per divisor M of N, in coordinates over divisors(M).
struct TambaraIdeal {
    long modulus = 1;
    std::map<long, IntLattice> levels;

    static TambaraIdeal zero(long N);
    const IntLattice& level(long M) const;
};

/// Generators of a Tambara ideal; each element carries its own level.
struct GeneratorSet {
    std::vector<BurnsideElement> elements;
};

/// Least Tambara ideal of C_N containing the generators, computed as a
/// fixpoint: close each level under multiplication by every t_j, push
/// restriction along prime steps downward and transfer/norm along prime
/// steps upward, and re-canonicalize, until nothing grows. The closure
/// invariant is asserted on the result.
TambaraIdeal saturate(long N, const GeneratorSet& gens);

bool member(const TambaraIdeal& I, long M, const BurnsideElement& x);
bool equals(const TambaraIdeal& a, const TambaraIdeal& b);
/// Level-wise containment over the common levels (divisors of both moduli).
bool contains(const TambaraIdeal& outer, const TambaraIdeal& inner);

/// Conditions (1)-(3) of the Tambara-ideal definition, checked mechanically
/// on every basis vector. On failure, *reason describes the first violation.
bool closure_invariant_holds(const TambaraIdeal& I, std::string* reason = nullptr);

/// Kernel-of-Dress ideal: level-M lattice is dress_kernel_level(spec, M)
/// for every divisor M of the (truncated) group order. The closure
/// invariant is asserted.
TambaraIdeal trace_ideal(const ExtensionSpec& spec);

/// Same, restricted to the Finite(N) shape.
TambaraIdeal trace_ideal_finite_field(const ExtensionSpec& spec);

struct CatalogParams {
    long N = 0;          // group order (odd-cyclic, general-cn, finite-fields)
    long p = 0;          // prime (zp-truncated)
    long depth = 0;      // truncation depth (zp-truncated) or bound n (zhat-truncated)
    long tau = -1;       // tau_F value (c2, c4-nonembeddable)
    long pi = -1;        // pi_F value (c4-nonembeddable)
    int twopower_case = 1;  // which 2-power case the general-cn entry uses
};

/// The catalog of trace-ideal generator sets, keyed by theorem id, one of:
/// odd-cyclic, c2, c4-embeddable, c4-nonembeddable, twopowers-case1,
/// twopowers-case2, general-cn, zp-truncated, zhat-truncated, finite-fields.
GeneratorSet generator_catalog(const std::string& theorem, const CatalogParams& params);

struct LevelReport {
    long M = 1;
    IntLattice expected{0};
    IntLattice computed{0};
    bool equal = false;
    std::optional<std::vector<Int>> witness;  // basis vector of one side missing from the other
};

struct CheckReport {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::string theorem;
    bool pass = false;
    std::vector<LevelReport> levels;
    std::vector<CheckReport> checks;
};

/// Machine verification of a trace-ideal theorem. Supported ids:
/// finite-fields (q, N), odd-ker-card (q, N odd), zp-truncated (q, p,
/// depth), zhat-truncated (q, depth = n with modulus n! <= 120),
/// rational-quadratic (r = num/den via tau params).
VerifyReport verify_theorem(const std::string& theorem, long q, const CatalogParams& params);

/// rational-quadratic needs the rational r itself rather than CatalogParams.
VerifyReport verify_rational_quadratic(const Int& num, const Int& den);

}  // namespace tambara
