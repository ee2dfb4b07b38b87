#include "tambara/dress.hpp"

#include <stdexcept>

namespace tambara {

long ExtensionSpec::modulus() const {
    switch (shape) {
        case Shape::finite:
            return N;
        case Shape::zp: {
            long m = 1;
            for (long i = 0; i < depth; ++i) m *= p;
            return m;
        }
        case Shape::zhat:
            return depth;
    }
    throw std::logic_error("ExtensionSpec: bad shape");
}

void validate_spec(const ExtensionSpec& spec) {
    if (!is_odd_prime_power(spec.q)) {
        throw std::invalid_argument("ExtensionSpec: q must be an odd prime power");
    }
    if (spec.depth < 1) throw std::invalid_argument("ExtensionSpec: depth must be positive");
    switch (spec.shape) {
        case ExtensionSpec::Shape::finite:
            if (spec.N < 1) throw std::invalid_argument("ExtensionSpec: N must be positive");
            break;
        case ExtensionSpec::Shape::zp:
            if (!is_prime(spec.p)) throw std::invalid_argument("ExtensionSpec: p must be prime");
            break;
        case ExtensionSpec::Shape::zhat:
            break;
    }
}

GwClass dress_map(const BurnsideElement& x, const ExtensionSpec& spec) {
    validate_spec(spec);
    const long M = x.level().M;
    if (spec.modulus() % M != 0) {
        throw std::invalid_argument("dress_map: level does not divide the extension's group order");
    }
    Int dim = 0;
    long det = 0;
    for (const auto& [i, a] : x.coeffs()) {
        dim += Int(i) * a;
        if (i % 2 == 0 && mpz_odd_p(a.get_mpz_t())) det ^= 1;
    }
    // Independent route: sum a_i * tr(<1>) along the degree-i subextension,
    // where tr(<1>) = (i, 1) for i even and (i, 0) for i odd (Witt-style
    // transfer of the unit form).
    GwClass check{spec.q, M, 0, 0};
    for (const auto& [i, a] : x.coeffs()) {
        GwClass tr_unit = gw_transfer(GwClass{spec.q, M * i, 1, 0}, i);
        tr_unit.dim *= a;
        tr_unit.det = mpz_odd_p(a.get_mpz_t()) ? tr_unit.det : 0;
        check = gw_add(check, tr_unit);
    }
    GwClass result{spec.q, M, dim, static_cast<int>(det)};
    if (result != check) throw std::logic_error("dress_map: the two evaluation routes disagree");
    return result;
}

IntLattice dress_kernel_level(const ExtensionSpec& spec, long M) {
    validate_spec(spec);
    if (M < 1 || spec.modulus() % M != 0) {
        throw std::invalid_argument("dress_kernel_level: level does not divide the group order");
    }
    auto divs = divisors(M);
    std::vector<Int> c;
    std::set<std::size_t> parity;
    for (std::size_t i = 0; i < divs.size(); ++i) {
        c.emplace_back(divs[i]);
        if (divs[i] % 2 == 0) parity.insert(i);
    }
    return kernel_with_parity(c, parity);
}

}  // namespace tambara
