#include "tambara/burnside.hpp"

#include <stdexcept>

namespace tambara {

void validate_level(const Level& lv) {
    if (lv.N < 1 || lv.M < 1 || lv.N % lv.M != 0) {
        throw std::invalid_argument("Level: require 1 <= M and M | N");
    }
}

BurnsideElement::BurnsideElement(Level lv) : level_(lv) { validate_level(lv); }

BurnsideElement BurnsideElement::basis(Level lv, long k) {
    BurnsideElement x(lv);
    x.set_coeff(k, 1);
    return x;
}

BurnsideElement BurnsideElement::constant(Level lv, const Int& n) {
    BurnsideElement x(lv);
    x.set_coeff(1, n);
    return x;
}

Int BurnsideElement::coeff(long k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Int(0) : it->second;
}

void BurnsideElement::set_coeff(long k, const Int& value) {
    if (k < 1 || level_.M % k != 0) {
        throw std::invalid_argument("BurnsideElement: basis index must divide the level");
    }
    if (value == 0) {
        coeffs_.erase(k);
    } else {
        coeffs_[k] = value;
    }
}

bool BurnsideElement::effective() const {
    for (const auto& [k, a] : coeffs_) {
        if (a < 0) return false;
    }
    return true;
}

namespace {

void require_same_level(const BurnsideElement& x, const BurnsideElement& y) {
    if (x.level() != y.level()) {
        throw std::invalid_argument("BurnsideElement: level mismatch");
    }
}

}  // namespace

BurnsideElement BurnsideElement::operator+(const BurnsideElement& o) const {
    require_same_level(*this, o);
    BurnsideElement r = *this;
    for (const auto& [k, a] : o.coeffs_) r.set_coeff(k, r.coeff(k) + a);
    return r;
}

BurnsideElement BurnsideElement::operator-(const BurnsideElement& o) const {
    return *this + (-o);
}

BurnsideElement BurnsideElement::operator-() const {
    BurnsideElement r(level_);
    for (const auto& [k, a] : coeffs_) r.coeffs_[k] = -a;
    return r;
}

BurnsideElement BurnsideElement::operator*(const BurnsideElement& o) const {
    // t_k t_j = gcd(k, j) t_{lcm(k, j)}, extended bilinearly.
    require_same_level(*this, o);
    BurnsideElement r(level_);
    for (const auto& [k, a] : coeffs_) {
        for (const auto& [j, b] : o.coeffs_) {
            long l = lcm_long(k, j);
            r.set_coeff(l, r.coeff(l) + a * b * gcd_long(k, j));
        }
    }
    return r;
}

BurnsideElement BurnsideElement::scaled(const Int& c) const {
    BurnsideElement r(level_);
    if (c == 0) return r;
    for (const auto& [k, a] : coeffs_) r.coeffs_[k] = c * a;
    return r;
}

BurnsideElement BurnsideElement::pow(long e) const {
    if (e < 0) throw std::invalid_argument("BurnsideElement::pow: negative exponent");
    BurnsideElement r = constant(level_, 1);
    for (long i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::vector<Int> BurnsideElement::to_vector() const {
    std::vector<Int> v;
    for (long d : divisors(level_.M)) v.push_back(coeff(d));
    return v;
}

BurnsideElement BurnsideElement::from_vector(Level lv, const std::vector<Int>& v) {
    auto divs = divisors(lv.M);
    if (v.size() != divs.size()) {
        throw std::invalid_argument("BurnsideElement::from_vector: wrong length");
    }
    BurnsideElement x(lv);
    for (std::size_t i = 0; i < divs.size(); ++i) x.set_coeff(divs[i], v[i]);
    return x;
}

Int card(const BurnsideElement& x) {
    Int s = 0;
    for (const auto& [k, a] : x.coeffs()) s += Int(k) * a;
    return s;
}

BurnsideElement restrict_to(const BurnsideElement& x, long K) {
    const Level lv = x.level();
    if (K < 1 || lv.M % K != 0) {
        throw std::invalid_argument("restrict_to: target must divide the source level");
    }
    const long k = lv.M / K;
    BurnsideElement r({lv.N, K});
    for (const auto& [i, a] : x.coeffs()) {
        long d = gcd_long(i, k);
        r.set_coeff(i / d, r.coeff(i / d) + a * d);
    }
    return r;
}

BurnsideElement transfer_to(const BurnsideElement& x, long M) {
    const Level lv = x.level();
    if (M < 1 || M % lv.M != 0 || lv.N % M != 0) {
        throw std::invalid_argument("transfer_to: target must be a multiple of the level dividing N");
    }
    const long k = M / lv.M;
    BurnsideElement r({lv.N, M});
    for (const auto& [i, a] : x.coeffs()) r.set_coeff(i * k, a);
    return r;
}

namespace {

Int int_pow(const Int& base, long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

/// One application of the coefficient recursion for the norm of index k.
BurnsideElement norm_step(const BurnsideElement& x, long M) {
    const Level lv = x.level();
    const long k = M / lv.M;
    BurnsideElement r({lv.N, M});
    std::map<long, Int> C;
    for (long i : divisors(M)) {
        Int s = 0;
        for (long j : divisors(lcm_long(i, k) / k)) s += Int(j) * x.coeff(j);
        Int c = int_pow(s, gcd_long(i, k));
        for (long j : divisors(i)) {
            if (j < i) c -= C.at(j);
        }
        C[i] = c;
        if (!mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(i))) {
            throw std::logic_error("norm_to: coefficient recursion produced a non-integral term");
        }
        r.set_coeff(i, c / i);
    }
    return r;
}

}  // namespace

BurnsideElement norm_to(const BurnsideElement& x, long M, NormRoute route) {
    const Level lv = x.level();
    if (M < 1 || M % lv.M != 0 || lv.N % M != 0) {
        throw std::invalid_argument("norm_to: target must be a multiple of the level dividing N");
    }
    if (route == NormRoute::direct) return norm_step(x, M);
    BurnsideElement r = x;
    for (auto [p, e] : factorize(M / lv.M).factors) {
        for (int i = 0; i < e; ++i) r = norm_step(r, r.level().M * p);
    }
    return r;
}

long ProCyclicLevel::modulus() const {
    if (depth < 1) throw std::invalid_argument("ProCyclicLevel: depth must be positive");
    if (kind == Kind::profinite) return depth;
    if (!is_prime(p)) throw std::invalid_argument("ProCyclicLevel: p must be prime");
    long m = 1;
    for (long i = 0; i < depth; ++i) m *= p;
    return m;
}

}  // namespace tambara
