#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "brauerkit/brauer_complete.hpp"
#include "brauerkit/brauer_global.hpp"
#include "brauerkit/characters.hpp"
#include "brauerkit/lift.hpp"

// End-to-end recipes.  Two ways to build an indecomposable division algebra
// of period q^e and index q^i over the completed field (1 <= e <= i <= 2e-1),
// plus the parameter arithmetic that locates admissible period/index pairs
// for noncrossed products.  The latter stays at the level of parameters; no
// noncrossed product algebra is constructed here.

namespace brauerkit {

struct IndecomposableSpec {
    uint64_t q;
    uint32_t e;
    uint32_t i;

    IndecomposableSpec(uint64_t q_, uint32_t e_, uint32_t i_) : q(q_), e(e_), i(i_) {
        if (q < 2 || !is_prime_u64(q)) throw std::invalid_argument("q must be prime");
        if (!(1 <= e && e <= i && i <= 2 * static_cast<uint64_t>(e) - 1))
            throw std::invalid_argument("need 1 <= e <= i <= 2e-1");
    }

    uint32_t t() const { return 2 * e - i; }
};

inline uint64_t default_search_degree(uint64_t q, uint32_t e) {
    return 2 * ipow_checked(q, e, "search degree overflow") * e;
}

struct IndecomposableResult {
    CompletedClass gamma;
    GrunwaldWitnesses witnesses;
    IndecompCertificate certificate;
    LiftedClass lifted;
    IndexReport report;
};

// Two-point recipe: a constant character theta of order q^e with local order
// q^t at two places v1, v2 of matching degree, combined with the residue
// class having invariants +-1/q^e there.  The Witt pair (alpha0, theta) then
// has period q^e and index q^(2e-t) = q^i.
inline IndecomposableResult build_indecomposable(PrimeField base, const IndecomposableSpec& spec,
                                                 uint64_t search_degree) {
    uint32_t t = spec.t();
    GrunwaldWitnesses w = grunwald_constant_witnesses(base, spec.q, spec.e, t, search_degree);
    int64_t qe = static_cast<int64_t>(ipow_checked(spec.q, spec.e, "period overflow"));
    GlobalBrauerClass alpha0 = GlobalBrauerClass::from_invariants(
        base, {{w.v1, QmodZ::of(1, qe)}, {w.v2, QmodZ::of(-1, qe)}});
    CompletedClass gamma = CompletedClass(alpha0, w.theta)
                               .with_prescribed_local_order(ipow_checked(spec.q, t));
    IndecompCertificate cert = certify_indecomposable(gamma, spec.q, search_degree);
    LiftedClass lifted = lift_class(gamma, VLift::canonical(base));
    IndexReport rep = index_report(lifted, search_degree);
    return {std::move(gamma), std::move(w), std::move(cert), std::move(lifted), std::move(rep)};
}

inline IndecomposableResult build_indecomposable(PrimeField base, const IndecomposableSpec& spec) {
    return build_indecomposable(base, spec, default_search_degree(spec.q, spec.e));
}

struct SymbolRecipeResult {
    CompletedClass gamma;
    Place x0;
    CyclicCharacter xi;
    SymbolPresentation presentation;
    std::vector<std::pair<Place, QmodZ>> residue_table;
    IndecompCertificate certificate;
    LiftedClass lifted;
    IndexReport report;
};

// Single-symbol recipe over the projective line: pick the first finite place
// x0 of degree q^(e-t), let xi be the constant character of order q^(2e-t),
// and set alpha0 = (xi, pi_x0), theta0 = q^(e-t) * xi.  The residues of
// alpha0 vanish away from {x0, inf}, and the Witt pair (alpha0, theta0) has
// period q^e, index q^(2e-t), with the index certified against the character
// order bound |theta0| * (|xi| / |theta0|).
inline SymbolRecipeResult build_symbol_indecomposable(PrimeField base, uint64_t q, uint32_t e,
                                                      uint32_t t, uint64_t search_degree) {
    if (q < 2 || !is_prime_u64(q)) throw std::invalid_argument("q must be prime");
    if (q == base.p) throw std::invalid_argument("q must differ from p");
    if (!(1 <= t && t <= e)) throw std::invalid_argument("need 1 <= t <= e");
    uint64_t x0_degree = ipow_checked(q, e - t, "place degree overflow");
    if (x0_degree > search_degree)
        throw SearchBoundExhausted("insufficient places below degree bound");
    std::vector<Poly> irr = first_monic_irreducibles(base, x0_degree, 1);
    if (irr.empty()) throw SearchBoundExhausted("insufficient places below degree bound");
    Place x0 = Place::finite_unchecked(irr[0]);

    int64_t xi_order = static_cast<int64_t>(ipow_checked(q, 2 * static_cast<uint64_t>(e) - t,
                                                         "character order overflow"));
    CyclicCharacter xi = CyclicCharacter::constant(base, QmodZ::of(1, xi_order));
    CyclicCharacter theta0 = xi.scaled(static_cast<int64_t>(x0_degree)); // order q^e

    SymbolPresentation pres(base);
    pres.add_term(xi, RationalFunction::from_place(x0));
    GlobalBrauerClass alpha0 = pres.to_class();

    CompletedClass gamma = CompletedClass(alpha0, theta0)
                               .with_prescribed_local_order(ipow_checked(q, t));
    IndecompCertificate cert = certify_indecomposable(gamma, q, search_degree);
    LiftedClass lifted = lift_class(gamma, VLift::canonical(base));
    IndexReport rep = index_report(lifted, search_degree);
    std::vector<std::pair<Place, QmodZ>> table = pres.residue_table();
    return {std::move(gamma), std::move(x0), std::move(xi), std::move(pres),
            std::move(table), std::move(cert), std::move(lifted), std::move(rep)};
}

struct NcpBaseParams {
    uint64_t r; // largest r with q^r | p^m0 - 1
    uint64_t s; // largest s with q^s | p^(m0 d) - 1, d the order of p^m0 mod q^(r+1)
    uint64_t d; // that multiplicative order

    bool operator==(const NcpBaseParams&) const = default;
};

// Root-of-unity bookkeeping for the constant field F_(p^m0): r measures the
// q-power roots of unity already present, s the ones appearing after
// adjoining a primitive q^(r+1)-th root.
inline NcpBaseParams ncp_parameters(uint64_t q, PrimeField base, uint64_t m0) {
    if (q < 2 || !is_prime_u64(q)) throw std::invalid_argument("q must be prime");
    if (q == base.p) throw std::invalid_argument("q must differ from p");
    if (m0 < 1) throw std::invalid_argument("need m0 >= 1");
    uint64_t x = ipow_checked(base.p, m0, "constant field exceeds machine word");
    uint64_t r = padic_valuation(q, x - 1);
    uint64_t qr1 = ipow_checked(q, r + 1, "modulus overflow");
    uint64_t d = 1;
    {
        uint64_t acc = x % qr1;
        while (acc != 1) {
            acc = mulmod_u64(acc, x % qr1, qr1);
            ++d;
            if (d > qr1) throw std::logic_error("order computation diverged");
        }
    }
    // s = v_q(x^d - 1), found by pushing the modulus up one power at a time
    uint64_t s = 1;
    while (true) {
        __uint128_t next = static_cast<__uint128_t>(1);
        for (uint64_t k = 0; k <= s; ++k) next *= q;
        if (next > (static_cast<__uint128_t>(1) << 62))
            throw std::overflow_error("q-power modulus exceeds machine word");
        if (powmod_u64(x, d, static_cast<uint64_t>(next)) != 1) break;
        ++s;
    }
    return {r, s, d};
}

struct NcpParams {
    uint64_t q, m0;
    uint64_t r, s;
    uint64_t n, m, l, a;
    uint64_t index_value;  // q^(l+a)
    uint64_t period_value; // q^l
    bool m_is_zero;        // m = 0 is admitted only in the r = 0 regime

    bool operator==(const NcpParams&) const = default;

    // Re-check every constraint from scratch.
    bool validate() const {
        if (n < 1 || n < m) return false;
        auto admissible_exponent = [&](uint64_t k) { return k == r || k >= s; };
        if (!admissible_exponent(n) || !admissible_exponent(m)) return false;
        if (m == 0 && r != 0) return false;
        if (l < n + m + 1) return false;
        if (a > l - n) return false;
        return index_value == ipow_checked(q, l + a) && period_value == ipow_checked(q, l);
    }
};

// All admissible (n, m, l, a) with l <= l_max, each tagged with the
// period/index pair (q^l, q^(l+a)) it certifies.  Deterministic order:
// lexicographic in (n, m, l, a).
inline std::vector<NcpParams> ncp_admissible(uint64_t q, PrimeField base, uint64_t m0,
                                             uint64_t l_max) {
    NcpBaseParams bp = ncp_parameters(q, base, m0);
    std::vector<NcpParams> out;
    if (l_max < 1) return out;
    auto admissible_exponent = [&](uint64_t k) { return k == bp.r || k >= bp.s; };
    for (uint64_t n = 1; n + 1 <= l_max; ++n) {
        if (!admissible_exponent(n)) continue;
        for (uint64_t m = 0; m <= n && n + m + 1 <= l_max; ++m) {
            if (!admissible_exponent(m)) continue;
            for (uint64_t l = n + m + 1; l <= l_max; ++l) {
                for (uint64_t a = 0; a <= l - n; ++a) {
                    NcpParams params{q,
                                     m0,
                                     bp.r,
                                     bp.s,
                                     n,
                                     m,
                                     l,
                                     a,
                                     ipow_checked(q, l + a, "index overflow"),
                                     ipow_checked(q, l, "period overflow"),
                                     m == 0};
                    out.push_back(params);
                }
            }
        }
    }
    return out;
}

} // namespace brauerkit
