#include "tambara/ideals.hpp"

#include <algorithm>
#include <stdexcept>

namespace tambara {

namespace {

long two_adic_valuation(long n) {
    long v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    return v;
}

std::vector<long> odd_prime_divisors(long n) {
    std::vector<long> ps;
    for (long p : prime_divisors(n)) {
        if (p != 2) ps.push_back(p);
    }
    return ps;
}

/// Re-attach an element to the modulus N it will live under.
BurnsideElement rehome(const BurnsideElement& x, long N) {
    BurnsideElement y({N, x.level().M});
    for (const auto& [k, a] : x.coeffs()) y.set_coeff(k, a);
    return y;
}

IntLattice span_of(const std::vector<BurnsideElement>& xs) {
    if (xs.empty()) throw std::invalid_argument("span_of: empty");
    std::vector<std::vector<Int>> rows;
    for (const auto& x : xs) rows.push_back(x.to_vector());
    return IntLattice::from_vectors(rows[0].size(), rows);
}

}  // namespace

TambaraIdeal TambaraIdeal::zero(long N) {
    if (N < 1) throw std::invalid_argument("TambaraIdeal: modulus must be positive");
    TambaraIdeal I;
    I.modulus = N;
    for (long M : divisors(N)) I.levels.emplace(M, IntLattice(divisors(M).size()));
    return I;
}

const IntLattice& TambaraIdeal::level(long M) const {
    auto it = levels.find(M);
    if (it == levels.end()) throw std::invalid_argument("TambaraIdeal: no such level");
    return it->second;
}

TambaraIdeal saturate(long N, const GeneratorSet& gens) {
    TambaraIdeal I = TambaraIdeal::zero(N);
    for (const auto& g : gens.elements) {
        if (N % g.level().M != 0) {
            throw std::invalid_argument("saturate: generator level does not divide the modulus");
        }
        BurnsideElement x = rehome(g, N);
        auto v = x.to_vector();
        IntLattice& L = I.levels.at(x.level().M);
        L = L.join(IntLattice::from_vectors(v.size(), {v}));
    }
    const auto divs = divisors(N);
    bool changed = true;
    while (changed) {
        changed = false;
        auto grow = [&](long M, const BurnsideElement& x) {
            auto v = x.to_vector();
            IntLattice& L = I.levels.at(M);
            if (!L.contains(v)) {
                L = L.join(IntLattice::from_vectors(v.size(), {v}));
                changed = true;
            }
        };
        // Close each level under multiplication by the t_j.
        for (long M : divs) {
            auto basis = I.levels.at(M).basis();
            for (const auto& v : basis) {
                BurnsideElement x = BurnsideElement::from_vector({N, M}, v);
                for (long j : divisors(M)) {
                    if (j > 1) grow(M, BurnsideElement::basis({N, M}, j) * x);
                }
            }
        }
        // Push restrictions along prime steps, ascending levels.
        for (long M : divs) {
            auto basis = I.levels.at(M).basis();
            for (const auto& v : basis) {
                BurnsideElement x = BurnsideElement::from_vector({N, M}, v);
                for (long p : prime_divisors(M)) grow(M / p, restrict_to(x, M / p));
            }
        }
        // Push transfers and norms along prime steps, descending levels.
        for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
            long K = *it;
            auto basis = I.levels.at(K).basis();
            for (const auto& v : basis) {
                BurnsideElement x = BurnsideElement::from_vector({N, K}, v);
                for (long p : prime_divisors(N / K)) {
                    grow(K * p, transfer_to(x, K * p));
                    grow(K * p, norm_to(x, K * p));
                }
            }
        }
    }
    std::string why;
    if (!closure_invariant_holds(I, &why)) {
        throw std::logic_error("saturate: closure invariant failed: " + why);
    }
    return I;
}

bool member(const TambaraIdeal& I, long M, const BurnsideElement& x) {
    if (x.level().M != M) throw std::invalid_argument("member: element lives at a different level");
    return I.level(M).contains(rehome(x, I.modulus).to_vector());
}

bool equals(const TambaraIdeal& a, const TambaraIdeal& b) {
    if (a.modulus != b.modulus) throw std::invalid_argument("equals: modulus mismatch");
    return a.levels == b.levels;
}

bool contains(const TambaraIdeal& outer, const TambaraIdeal& inner) {
    long common = gcd_long(outer.modulus, inner.modulus);
    for (long M : divisors(common)) {
        if (!outer.level(M).contains(inner.level(M))) return false;
    }
    return true;
}

bool closure_invariant_holds(const TambaraIdeal& I, std::string* reason) {
    auto fail = [&](long M, const std::string& what) {
        if (reason) *reason = "level " + std::to_string(M) + ": " + what;
        return false;
    };
    for (const auto& [M, L] : I.levels) {
        for (const auto& v : L.basis()) {
            BurnsideElement x = BurnsideElement::from_vector({I.modulus, M}, v);
            for (long j : divisors(M)) {
                if (!L.contains((BurnsideElement::basis({I.modulus, M}, j) * x).to_vector())) {
                    return fail(M, "not closed under multiplication by t_" + std::to_string(j));
                }
            }
            for (long p : prime_divisors(M)) {
                if (!I.level(M / p).contains(restrict_to(x, M / p).to_vector())) {
                    return fail(M, "restriction to " + std::to_string(M / p) + " escapes");
                }
            }
            for (long p : prime_divisors(I.modulus / M)) {
                if (!I.level(M * p).contains(transfer_to(x, M * p).to_vector())) {
                    return fail(M, "transfer to " + std::to_string(M * p) + " escapes");
                }
                if (!I.level(M * p).contains(norm_to(x, M * p).to_vector())) {
                    return fail(M, "norm to " + std::to_string(M * p) + " escapes");
                }
            }
        }
    }
    return true;
}

TambaraIdeal trace_ideal(const ExtensionSpec& spec) {
    validate_spec(spec);
    const long N = spec.modulus();
    TambaraIdeal I;
    I.modulus = N;
    for (long M : divisors(N)) I.levels.emplace(M, dress_kernel_level(spec, M));
    std::string why;
    if (!closure_invariant_holds(I, &why)) {
        throw std::logic_error("trace_ideal: kernel family is not closed: " + why);
    }
    return I;
}

TambaraIdeal trace_ideal_finite_field(const ExtensionSpec& spec) {
    if (spec.shape != ExtensionSpec::Shape::finite) {
        throw std::invalid_argument("trace_ideal_finite_field: spec must be Finite(N)");
    }
    return trace_ideal(spec);
}

namespace {

/// t_4 - t_2 - 2 at the given level.
BurnsideElement c4_generator(Level lv) {
    BurnsideElement x(lv);
    x.set_coeff(4, 1);
    x.set_coeff(2, -1);
    x.set_coeff(1, -2);
    return x;
}

/// c * (t_k - k) at the given level.
BurnsideElement scaled_trace_gap(Level lv, long k, long c) {
    BurnsideElement x(lv);
    x.set_coeff(k, c);
    x.set_coeff(1, Int(-k) * c);
    return x;
}

void require_param(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("generator_catalog: " + what);
}

}  // namespace

GeneratorSet generator_catalog(const std::string& theorem, const CatalogParams& params) {
    GeneratorSet g;
    if (theorem == "odd-cyclic") {
        require_param(params.N >= 1 && params.N % 2 == 1, "odd-cyclic needs odd N");
        long rad = 1;
        for (long p : prime_divisors(params.N)) rad *= p;
        BurnsideElement x({params.N, rad});
        for (long p : prime_divisors(params.N)) x = x + scaled_trace_gap({params.N, rad}, p, 1);
        g.elements.push_back(x);
    } else if (theorem == "c2") {
        require_param(params.tau >= 0, "c2 needs tau");
        g.elements.push_back(scaled_trace_gap({2, 2}, 2, params.tau));
    } else if (theorem == "c4-embeddable") {
        g.elements.push_back(c4_generator({4, 4}));
    } else if (theorem == "c4-nonembeddable") {
        require_param(params.tau >= 0 && params.pi >= 0, "c4-nonembeddable needs tau and pi");
        g.elements.push_back(scaled_trace_gap({4, 4}, 2, 2));
        g.elements.push_back(scaled_trace_gap({4, 4}, 4, params.pi));
        g.elements.push_back(scaled_trace_gap({4, 2}, 2, params.tau));
    } else if (theorem == "twopowers-case1") {
        require_param(params.N >= 4 && params.N % 4 == 0, "twopowers-case1 needs 4 | N");
        g.elements.push_back(c4_generator({params.N, 4}));
    } else if (theorem == "twopowers-case2") {
        require_param(params.N >= 8 && params.N % 8 == 0, "twopowers-case2 needs 8 | N");
        BurnsideElement x({params.N, 8});
        x.set_coeff(4, 1);
        x.set_coeff(2, -1);
        x.set_coeff(1, -2);
        g.elements.push_back(x);
    } else if (theorem == "general-cn") {
        require_param(params.N >= 2 && params.N % 2 == 0, "general-cn handles even N");
        auto odd_ps = odd_prime_divisors(params.N);
        if (!odd_ps.empty()) {
            long rad = 1;
            for (long p : odd_ps) rad *= p;
            BurnsideElement x({params.N, rad});
            for (long p : odd_ps) x = x + scaled_trace_gap({params.N, rad}, p, 1);
            g.elements.push_back(x);
        }
        long mu = two_adic_valuation(params.N);
        if (mu == 1) {
            require_param(params.tau >= 0, "general-cn with mu=1 needs tau");
            g.elements.push_back(scaled_trace_gap({params.N, 2}, 2, params.tau));
        } else if (params.twopower_case == 1) {
            g.elements.push_back(c4_generator({params.N, 4}));
        } else {
            require_param(params.twopower_case == 2, "general-cn supports 2-power cases 1 and 2");
            require_param(params.N % 8 == 0, "general-cn case 2 needs 8 | N");
            BurnsideElement x({params.N, 8});
            x.set_coeff(4, 1);
            x.set_coeff(2, -1);
            x.set_coeff(1, -2);
            g.elements.push_back(x);
        }
    } else if (theorem == "zp-truncated") {
        require_param(is_prime(params.p) && params.depth >= 1, "zp-truncated needs prime p and depth");
        long modulus = 1;
        for (long i = 0; i < params.depth; ++i) modulus *= params.p;
        if (params.p == 2) {
            g.elements.push_back(scaled_trace_gap({modulus, 2}, 2, 2));
            long lvl = 4;
            for (long i = 2; i <= params.depth; ++i, lvl *= 2) {
                g.elements.push_back(c4_generator({modulus, lvl}));
            }
        } else {
            long lvl = params.p;
            for (long i = 1; i <= params.depth; ++i, lvl *= params.p) {
                g.elements.push_back(scaled_trace_gap({modulus, lvl}, params.p, 1));
            }
        }
    } else if (theorem == "zhat-truncated") {
        require_param(params.depth >= 4, "zhat-truncated needs n >= 4");
        long m = 1;
        for (long i = 2; i <= params.depth; ++i) {
            m *= i;
            require_param(m <= 120, "zhat-truncated capped at modulus 120");
        }
        BurnsideElement x = c4_generator({m, m});
        for (long p = 3; p < params.depth; ++p) {
            if (is_prime(p)) x = x + scaled_trace_gap({m, m}, p, 1);
        }
        g.elements.push_back(x);
    } else if (theorem == "finite-fields") {
        require_param(params.N >= 1, "finite-fields needs N >= 1");
        long mu = two_adic_valuation(params.N);
        auto odd_ps = odd_prime_divisors(params.N);
        long hat = mu >= 2 ? 4 : (mu == 1 ? 2 : 1);
        for (long p : odd_ps) hat *= p;
        BurnsideElement x({params.N, hat});
        if (mu >= 2) {
            x = x + c4_generator({params.N, hat});
        } else if (mu == 1) {
            x = x + scaled_trace_gap({params.N, hat}, 2, 2);
        }
        for (long p : odd_ps) x = x + scaled_trace_gap({params.N, hat}, p, 1);
        g.elements.push_back(x);
    } else {
        throw std::invalid_argument("generator_catalog: unknown theorem id '" + theorem + "'");
    }
    return g;
}

namespace {

LevelReport report_level(long M, const IntLattice& expected, const IntLattice& computed) {
    LevelReport r;
    r.M = M;
    r.expected = expected;
    r.computed = computed;
    r.equal = expected == computed;
    if (!r.equal) {
        for (const auto& v : computed.basis()) {
            if (!expected.contains(v)) {
                r.witness = v;
                break;
            }
        }
        if (!r.witness) {
            for (const auto& v : expected.basis()) {
                if (!computed.contains(v)) {
                    r.witness = v;
                    break;
                }
            }
        }
    }
    return r;
}

void report_ideal_comparison(VerifyReport& rep, const TambaraIdeal& expected,
                             const TambaraIdeal& computed) {
    for (const auto& [M, L] : expected.levels) {
        rep.levels.push_back(report_level(M, L, computed.level(M)));
    }
}

void add_check(VerifyReport& rep, const std::string& name, bool pass,
               const std::string& detail = "") {
    rep.checks.push_back({name, pass, detail});
}

bool all_good(const VerifyReport& rep) {
    for (const auto& l : rep.levels) {
        if (!l.equal) return false;
    }
    for (const auto& c : rep.checks) {
        if (!c.pass) return false;
    }
    return true;
}

}  // namespace

VerifyReport verify_theorem(const std::string& theorem, long q, const CatalogParams& params) {
    VerifyReport rep;
    rep.theorem = theorem;
    if (theorem == "finite-fields") {
        TambaraIdeal expected = trace_ideal(ExtensionSpec::finite(q, params.N));
        TambaraIdeal computed = saturate(params.N, generator_catalog("finite-fields", params));
        report_ideal_comparison(rep, expected, computed);
    } else if (theorem == "odd-ker-card") {
        require_param(params.N % 2 == 1, "odd-ker-card needs odd N");
        ExtensionSpec spec = ExtensionSpec::finite(q, params.N);
        TambaraIdeal expected = trace_ideal(spec);
        // At odd levels the parity set is empty, so the Dress kernel must be
        // the plain card kernel.
        for (long M : divisors(params.N)) {
            std::vector<Int> c;
            for (long d : divisors(M)) c.emplace_back(d);
            add_check(rep, "card-kernel level " + std::to_string(M),
                      kernel_with_parity(c, {}) == expected.level(M));
        }
        TambaraIdeal computed = saturate(params.N, generator_catalog("odd-cyclic", params));
        report_ideal_comparison(rep, expected, computed);
    } else if (theorem == "zp-truncated") {
        require_param(params.depth >= 1 && is_prime(params.p), "zp-truncated needs p, depth");
        TambaraIdeal previous = TambaraIdeal::zero(1);
        for (long d = 1; d <= params.depth; ++d) {
            CatalogParams pd = params;
            pd.depth = d;
            TambaraIdeal expected = trace_ideal(ExtensionSpec::zp(q, params.p, d));
            TambaraIdeal computed = saturate(expected.modulus, generator_catalog("zp-truncated", pd));
            add_check(rep, "depth " + std::to_string(d) + " equals Dress kernel",
                      equals(expected, computed));
            add_check(rep, "chain ascends at depth " + std::to_string(d),
                      contains(computed, previous));
            if (d == params.depth) report_ideal_comparison(rep, expected, computed);
            previous = computed;
        }
        // Generator membership at every applicable level of the top ideal.
        for (long M : divisors(previous.modulus)) {
            if (M == 1) continue;
            BurnsideElement gen =
                params.p == 2 ? (M % 4 == 0 ? c4_generator({previous.modulus, M})
                                            : scaled_trace_gap({previous.modulus, M}, 2, 2))
                              : scaled_trace_gap({previous.modulus, M}, params.p, 1);
            add_check(rep, "generator member at level " + std::to_string(M),
                      member(previous, M, gen));
        }
    } else if (theorem == "zhat-truncated") {
        require_param(params.depth >= 4, "zhat-truncated needs n >= 4");
        GeneratorSet gens = generator_catalog("zhat-truncated", params);
        const long m = gens.elements[0].level().N;
        TambaraIdeal computed = saturate(m, gens);
        TambaraIdeal kernel = trace_ideal(ExtensionSpec::zhat(q, m));
        add_check(rep, "contained in Dress kernel", contains(kernel, computed));
        add_check(rep, "generator member at level " + std::to_string(m),
                  member(computed, m, gens.elements[0]));
        if (params.depth > 4) {
            CatalogParams prev = params;
            prev.depth = params.depth - 1;
            GeneratorSet pg = generator_catalog("zhat-truncated", prev);
            TambaraIdeal previous = saturate(pg.elements[0].level().N, pg);
            add_check(rep, "chain ascends from n-1", contains(computed, previous));
        }
        // The truncated ideals of the chain are strictly smaller than the
        // truncated Dress kernel (the union only exhausts it in the limit),
        // so the per-level comparison below is informational: the verdict
        // for this theorem is carried by the checks alone.
        report_ideal_comparison(rep, kernel, computed);
        rep.pass = true;
        for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
        return rep;
    } else {
        throw std::invalid_argument("verify_theorem: unknown theorem id '" + theorem + "'");
    }
    rep.pass = all_good(rep);
    return rep;
}

VerifyReport verify_rational_quadratic(const Int& num, const Int& den) {
    VerifyReport rep;
    rep.theorem = "rational-quadratic";
    long tau = tau_rational(num, den);
    CatalogParams params;
    params.tau = tau;
    TambaraIdeal computed = saturate(2, generator_catalog("c2", params));
    // Thm c2: the level-2 lattice is spanned by tau * (t_2 - 2); for
    // non-squares this is the corollary's trichotomy 0 / 2t_2-4 / 4t_2-8.
    TambaraIdeal expected = TambaraIdeal::zero(2);
    if (tau != 0) {
        expected.levels.at(2) = span_of({scaled_trace_gap({2, 2}, 2, tau)});
    }
    report_ideal_comparison(rep, expected, computed);
    Int ab = abs(num * den);
    bool square = mpz_perfect_square_p(ab.get_mpz_t()) != 0 && num * den > 0;
    if (!square) {
        long expected_tau = (num * den < 0) ? 0 : (is_sum_of_two_squares(ab.get_si()) ? 2 : 4);
        add_check(rep, "trichotomy tau", tau == expected_tau,
                  "tau = " + std::to_string(tau));
    }
    rep.pass = all_good(rep);
    return rep;
}

}  // namespace tambara
