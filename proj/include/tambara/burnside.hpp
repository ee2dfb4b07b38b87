#pragma once

#include <map>
#include <vector>

#include "tambara/numtheory.hpp"

namespace tambara {

/// A level of the Burnside Tambara functor for the cyclic group C_N:
/// elements at level M (with M | N) live in the Burnside ring A(C_M).
struct Level {
    long N = 1;  // order of the ambient cyclic group
    long M = 1;  // order of the subgroup indexing the level

    bool operator==(const Level& o) const { return N == o.N && M == o.M; }
    bool operator!=(const Level& o) const { return !(*this == o); }
};

void validate_level(const Level& lv);

/// Element of A(C_M), written in the transitive-set basis { t_k : k | M }
/// where t_k = [C_M / C_{M/k}] has cardinality k and t_1 = 1.
class BurnsideElement {
public:
    explicit BurnsideElement(Level lv);

    /// The basis element t_k at the given level (requires k | M).
    static BurnsideElement basis(Level lv, long k);
    /// The constant n * t_1.
    static BurnsideElement constant(Level lv, const Int& n);

    const Level& level() const { return level_; }
    /// Nonzero coefficients only, keyed by divisor of M, ascending.
    const std::map<long, Int>& coeffs() const { return coeffs_; }
    Int coeff(long k) const;
    void set_coeff(long k, const Int& value);

    bool is_zero() const { return coeffs_.empty(); }
    bool effective() const;  // all coefficients >= 0

    BurnsideElement operator+(const BurnsideElement& o) const;
    BurnsideElement operator-(const BurnsideElement& o) const;
    BurnsideElement operator-() const;
    BurnsideElement operator*(const BurnsideElement& o) const;
    BurnsideElement scaled(const Int& c) const;
    BurnsideElement pow(long e) const;

    bool operator==(const BurnsideElement& o) const {
        return level_ == o.level_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const BurnsideElement& o) const { return !(*this == o); }

    /// Coefficient vector over divisors(M), ascending.
    std::vector<Int> to_vector() const;
    static BurnsideElement from_vector(Level lv, const std::vector<Int>& v);

private:
    Level level_;
    std::map<long, Int> coeffs_;
};

/// Cardinality homomorphism A(C_M) -> Z, t_k -> k.
Int card(const BurnsideElement& x);

/// Restriction A(C_M) -> A(C_K) for K | M: t_i -> gcd(i, M/K) t_{i / gcd(i, M/K)}.
BurnsideElement restrict_to(const BurnsideElement& x, long K);

/// Transfer A(C_K) -> A(C_M) for K | M: additive, t_i -> t_{i * M/K}.
BurnsideElement transfer_to(const BurnsideElement& x, long M);

enum class NormRoute {
    prime_chain,  // compose norms along prime steps (default)
    direct,       // single application of the coefficient recursion
};

/// Multiplicative norm A(C_K) -> A(C_M) for K | M.
///
/// One step of index k = M/K sends sum a_j t_j to sum (C(i)/i) t_i over
/// i | M, where C(i) is defined recursively by
///   C(i) = (sum_{j | lcm(i,k)/k} j a_j)^gcd(i,k) - sum_{j | i, j < i} C(j).
/// Each C(i) is divisible by i; a failure of that divisibility is a logic
/// error and throws.
BurnsideElement norm_to(const BurnsideElement& x, long M,
                        NormRoute route = NormRoute::prime_chain);

/// Truncated level of a pro-cyclic group: Z_p truncated at depth d is the
/// finite quotient C_{p^d}; the profinite completion Z-hat truncated at
/// bound m is C_m. All Burnside operations apply to the truncation as-is.
struct ProCyclicLevel {
    enum class Kind { p_adic, profinite } kind = Kind::p_adic;
    long p = 2;      // prime, for p_adic
    long depth = 1;  // truncation depth (p_adic) or modulus bound (profinite)

    /// Order of the finite truncation: p^depth, or depth itself for Z-hat.
    long modulus() const;
};

}  // namespace tambara
