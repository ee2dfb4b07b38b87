#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "tambara/numtheory.hpp"

namespace tambara {

/// Finitely generated subgroup of Z^d, stored as a canonical basis in
/// row-style Hermite normal form:
///   - basis rows are nonzero, pivot (leftmost nonzero entry) positive,
///   - pivot columns strictly increase from top to bottom,
///   - entries above each pivot are reduced into [0, pivot).
/// Two lattices are equal iff their stored bases are identical.
class IntLattice {
public:
    explicit IntLattice(std::size_t d) : dim_(d) {}

    static IntLattice from_vectors(std::size_t d, std::vector<std::vector<Int>> vectors);

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return basis_.size(); }
    const std::vector<std::vector<Int>>& basis() const { return basis_; }

    bool contains(const std::vector<Int>& v) const;
    bool contains(const IntLattice& other) const;

    /// Smallest lattice containing both operands.
    IntLattice join(const IntLattice& other) const;

    bool operator==(const IntLattice& other) const {
        return dim_ == other.dim_ && basis_ == other.basis_;
    }
    bool operator!=(const IntLattice& other) const { return !(*this == other); }

private:
    std::size_t dim_;
    std::vector<std::vector<Int>> basis_;
};

/// Kernel of the linear form v . c = 0 on Z^d, refined by the parity
/// condition sum_{i in parity} v_i = 0 (mod 2). The parity condition cuts
/// the plain kernel down by index at most 2.
IntLattice kernel_with_parity(const std::vector<Int>& c, const std::set<std::size_t>& parity);

}  // namespace tambara
