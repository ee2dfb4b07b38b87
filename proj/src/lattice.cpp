#include "tambara/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace tambara {

namespace {

/// Floor division, so the remainder a - q*b lies in [0, |b|) when b > 0.
Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

bool abs_less(const Int& a, const Int& b) {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

std::size_t pivot_column(const std::vector<Int>& row) {
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] != 0) return j;
    }
    throw std::logic_error("IntLattice: zero row has no pivot");
}

}  // namespace

IntLattice IntLattice::from_vectors(std::size_t d, std::vector<std::vector<Int>> rows) {
    for (const auto& row : rows) {
        if (row.size() != d) throw std::invalid_argument("IntLattice: vector has wrong dimension");
    }
    IntLattice result(d);
    std::size_t r = 0;  // rows [0, r) are finished pivot rows
    for (std::size_t col = 0; col < d; ++col) {
        // Gcd-eliminate within this column until at most one unfinished row
        // has a nonzero entry, always reducing by the entry of least magnitude.
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (rows[i][col] != 0 && (best == rows.size() || abs_less(rows[i][col], rows[best][col]))) {
                    best = i;
                }
            }
            if (best == rows.size()) break;  // column already clear below r
            bool leftover = false;
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (i == best || rows[i][col] == 0) continue;
                Int q = fdiv(rows[i][col], rows[best][col]);
                for (std::size_t j = col; j < d; ++j) rows[i][j] -= q * rows[best][j];
                if (rows[i][col] != 0) leftover = true;
            }
            if (!leftover) {
                std::swap(rows[best], rows[r]);
                if (rows[r][col] < 0) {
                    for (auto& x : rows[r]) x = -x;
                }
                ++r;
                break;
            }
        }
    }
    rows.resize(r);
    // Reduce the entries above each pivot into [0, pivot).
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::size_t p = pivot_column(rows[i]);
        for (std::size_t k = 0; k < i; ++k) {
            Int q = fdiv(rows[k][p], rows[i][p]);
            if (q != 0) {
                for (std::size_t j = p; j < d; ++j) rows[k][j] -= q * rows[i][j];
            }
        }
    }
    result.basis_ = std::move(rows);
    return result;
}

bool IntLattice::contains(const std::vector<Int>& v) const {
    if (v.size() != dim_) throw std::invalid_argument("IntLattice::contains: wrong dimension");
    std::vector<Int> rem = v;
    for (const auto& row : basis_) {
        std::size_t p = pivot_column(row);
        if (rem[p] == 0) continue;
        if (!mpz_divisible_p(rem[p].get_mpz_t(), row[p].get_mpz_t())) return false;
        Int q = rem[p] / row[p];
        for (std::size_t j = p; j < dim_; ++j) rem[j] -= q * row[j];
    }
    for (const auto& x : rem) {
        if (x != 0) return false;
    }
    return true;
}

bool IntLattice::contains(const IntLattice& other) const {
    if (dim_ != other.dim_) throw std::invalid_argument("IntLattice::contains: wrong dimension");
    for (const auto& row : other.basis_) {
        if (!contains(row)) return false;
    }
    return true;
}

IntLattice IntLattice::join(const IntLattice& other) const {
    if (dim_ != other.dim_) throw std::invalid_argument("IntLattice::join: dimension mismatch");
    std::vector<std::vector<Int>> rows = basis_;
    rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
    return from_vectors(dim_, std::move(rows));
}

IntLattice kernel_with_parity(const std::vector<Int>& c, const std::set<std::size_t>& parity) {
    const std::size_t d = c.size();
    for (std::size_t i : parity) {
        if (i >= d) throw std::invalid_argument("kernel_with_parity: parity index out of range");
    }
    // Unimodular column reduction: carry the standard basis along while the
    // values c . g_i are gcd-reduced down to a single nonzero slot.
    std::vector<Int> vals = c;
    std::vector<std::vector<Int>> gens(d, std::vector<Int>(d, 0));
    for (std::size_t i = 0; i < d; ++i) gens[i][i] = 1;
    while (true) {
        std::size_t best = d;
        std::size_t nonzero = 0;
        for (std::size_t i = 0; i < d; ++i) {
            if (vals[i] == 0) continue;
            ++nonzero;
            if (best == d || abs_less(vals[i], vals[best])) best = i;
        }
        if (nonzero <= 1) break;
        for (std::size_t i = 0; i < d; ++i) {
            if (i == best || vals[i] == 0) continue;
            Int q = fdiv(vals[i], vals[best]);
            vals[i] -= q * vals[best];
            for (std::size_t j = 0; j < d; ++j) gens[i][j] -= q * gens[best][j];
        }
    }
    std::vector<std::vector<Int>> kernel;
    for (std::size_t i = 0; i < d; ++i) {
        if (vals[i] == 0) kernel.push_back(std::move(gens[i]));
    }
    // Pull the parity condition back along the kernel basis: if some basis
    // vector has odd parity weight, the refined kernel has index 2.
    std::vector<int> w(kernel.size(), 0);
    std::size_t odd = kernel.size();
    for (std::size_t i = 0; i < kernel.size(); ++i) {
        Int s = 0;
        for (std::size_t j : parity) s += kernel[i][j];
        w[i] = mpz_odd_p(s.get_mpz_t()) ? 1 : 0;
        if (w[i] == 1 && odd == kernel.size()) odd = i;
    }
    if (odd == kernel.size()) return IntLattice::from_vectors(d, std::move(kernel));
    std::vector<std::vector<Int>> refined;
    for (std::size_t i = 0; i < kernel.size(); ++i) {
        if (i == odd) continue;
        std::vector<Int> v = kernel[i];
        if (w[i] == 1) {
            for (std::size_t j = 0; j < d; ++j) v[j] -= kernel[odd][j];
        }
        refined.push_back(std::move(v));
    }
    std::vector<Int> doubled = kernel[odd];
    for (auto& x : doubled) x *= 2;
    refined.push_back(std::move(doubled));
    return IntLattice::from_vectors(d, std::move(refined));
}

}  // namespace tambara
