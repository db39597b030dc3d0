#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "brauerkit/places.hpp"
#include "brauerkit/qmodz.hpp"
#include "brauerkit/rational.hpp"

// Cyclic characters of F_p(t) of order prime to p, in the two shapes the
// constructions need: constant (unramified everywhere, cut out by a constant
// field extension) and Kummer (cut out by an n-th root of a rational
// function, with mu_n in F_p).  Each place gets splitting data (e, f, g)
// with e*f*g = order: ramification, inertia, number of places above.

namespace brauerkit {

// Thrown when a degree-bounded search runs out of places; the CLI maps this
// to its own exit code.
struct SearchBoundExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SplittingData {
    uint64_t e, f, g;
    bool operator==(const SplittingData&) const = default;
};

class CyclicCharacter {
public:
    enum class Kind { Constant, Kummer };

    // Constant character, pinned down by where Frobenius goes in (1/n)Z/Z.
    static CyclicCharacter constant(PrimeField base, QmodZ frobenius_image) {
        uint64_t n = frobenius_image.order();
        if (std::gcd(n, base.p) != 1)
            throw std::invalid_argument("character order must be coprime to p");
        CyclicCharacter chi;
        chi.base_ = base;
        chi.order_ = n;
        chi.data_ = frobenius_image;
        return chi;
    }

    static CyclicCharacter trivial(PrimeField base) { return constant(base, QmodZ()); }

    // Kummer character t -> n-th root of rad; needs mu_n in F_p and a
    // radicand of exact order n modulo n-th powers.
    static CyclicCharacter kummer(PrimeField base, uint64_t n, RationalFunction radicand) {
        if (n == 0) throw std::invalid_argument("character order must be positive");
        if (std::gcd(n, base.p) != 1)
            throw std::invalid_argument("character order must be coprime to p");
        if ((base.p - 1) % n != 0)
            throw std::invalid_argument("Kummer character needs mu_n in the constant field");
        if (radicand.is_zero()) throw std::invalid_argument("zero radicand");
        if (n > 1 && !kummer_has_exact_order(base, n, radicand))
            throw std::invalid_argument("radicand does not have exact order n");
        CyclicCharacter chi;
        chi.base_ = base;
        chi.order_ = n;
        chi.data_ = std::move(radicand);
        return chi;
    }

    const PrimeField& base() const { return base_; }
    uint64_t order() const { return order_; }
    Kind kind() const {
        return std::holds_alternative<QmodZ>(data_) ? Kind::Constant : Kind::Kummer;
    }
    bool is_trivial() const { return order_ == 1; }

    const QmodZ& frobenius_image() const {
        if (kind() != Kind::Constant) throw std::domain_error("not a constant character");
        return std::get<QmodZ>(data_);
    }
    const RationalFunction& radicand() const {
        if (kind() != Kind::Kummer) throw std::domain_error("not a Kummer character");
        return std::get<RationalFunction>(data_);
    }

    // k-fold multiple in the character group.
    CyclicCharacter scaled(int64_t k) const {
        if (kind() == Kind::Constant) return constant(base_, frobenius_image().scaled(k));
        uint64_t n = order_;
        uint64_t kr = static_cast<uint64_t>(((k % static_cast<int64_t>(n)) + static_cast<int64_t>(n)) % static_cast<int64_t>(n));
        uint64_t g = std::gcd(kr, n);
        if (g == n) return trivial(base_); // includes k = 0 mod n
        uint64_t n2 = n / g;
        // k*chi has order n2 and kernel field K(rad^{(k/g)/n2}); reduce the
        // exponent mod n2 since rad^{n2} is an n2-th power.  kr/g is coprime
        // to n2, so the reduced exponent is never zero here.
        return kummer(base_, n2, radicand().pow((kr / g) % n2));
    }

    bool operator==(const CyclicCharacter& o) const {
        return base_ == o.base_ && order_ == o.order_ && data_ == o.data_;
    }

private:
    CyclicCharacter() : base_(2), order_(1) {}

    // rad has exact order n modulo n-th powers iff it is not an ell-th power
    // for any prime ell | n.  F_p(t)^x splits as F_p^x times the free group
    // on monic irreducibles, so ell-th powers are recognized from the factor
    // multiplicities and the constant part (ell | n | p-1 throughout).
    static bool kummer_has_exact_order(PrimeField base, uint64_t n, const RationalFunction& rad) {
        auto num_factors = factor(rad.numerator());
        auto den_factors = factor(rad.denominator());
        uint64_t c = base.mul(rad.numerator().leading_coeff(),
                              base.inv(rad.denominator().leading_coeff()));
        for (uint64_t ell = 2; ell <= n; ++ell) {
            if (n % ell != 0) continue;
            bool prime = true;
            for (uint64_t k = 2; k * k <= ell; ++k)
                if (ell % k == 0) { prime = false; break; }
            if (!prime) continue;
            bool ellth_power = true;
            for (const auto& pf : num_factors)
                if (pf.multiplicity % ell != 0) { ellth_power = false; break; }
            if (ellth_power)
                for (const auto& pf : den_factors)
                    if (pf.multiplicity % ell != 0) { ellth_power = false; break; }
            if (ellth_power && powmod_u64(c, (base.p - 1) / ell, base.p) != 1) ellth_power = false;
            if (ellth_power) return false;
        }
        return true;
    }

    PrimeField base_;
    uint64_t order_;
    std::variant<QmodZ, RationalFunction> data_;
};

// Splitting data of the cyclic extension cut out by chi at the place v.
inline SplittingData splitting_at(const CyclicCharacter& chi, const Place& v) {
    uint64_t n = chi.order();
    if (n == 1) return {1, 1, 1};
    if (chi.kind() == CyclicCharacter::Kind::Constant) {
        // constant extensions are unramified; Frobenius at v acts as the
        // deg(v)-th power of the global Frobenius
        uint64_t g = std::gcd(n, v.degree());
        return {1, n / g, g};
    }
    const RationalFunction& rad = chi.radicand();
    int64_t a = valuation(rad, v);
    uint64_t a_mod = static_cast<uint64_t>(((a % static_cast<int64_t>(n)) + static_cast<int64_t>(n)) % static_cast<int64_t>(n));
    uint64_t e = n / std::gcd(n, a_mod == 0 ? n : a_mod);
    // Inertia comes from the residue of the unit part, measured modulo
    // (n/e)-th powers: that quotient does not feel the uniformizer choice,
    // since a is divisible by n/e.
    RationalFunction unit = unit_part_at(rad, v);
    Poly img = residue_image(unit, v);
    uint64_t f = detail::order_in_unit_quotient(img, v, n / e);
    return {e, f, n / (e * f)};
}

inline uint64_t local_order(const CyclicCharacter& chi, const Place& v) {
    SplittingData s = splitting_at(chi, v);
    return s.e * s.f;
}

// Places where chi ramifies, in canonical order.  Constant characters are
// unramified everywhere; a Kummer character ramifies exactly where the
// radicand's valuation is nonzero mod n (infinity included).  search_degree
// only bounds the factor degrees we are willing to certify.
inline std::vector<Place> ramification_locus(const CyclicCharacter& chi, uint64_t search_degree) {
    std::vector<Place> out;
    if (chi.kind() == CyclicCharacter::Kind::Constant) return out;
    uint64_t n = chi.order();
    const RationalFunction& rad = chi.radicand();
    std::vector<Place> support;
    for (const auto& pf : factor(rad.numerator())) {
        if (static_cast<uint64_t>(pf.factor.degree()) > search_degree)
            throw SearchBoundExhausted("radicand factor exceeds degree bound");
        support.push_back(Place::finite_unchecked(pf.factor));
    }
    for (const auto& pf : factor(rad.denominator())) {
        if (static_cast<uint64_t>(pf.factor.degree()) > search_degree)
            throw SearchBoundExhausted("radicand factor exceeds degree bound");
        support.push_back(Place::finite_unchecked(pf.factor));
    }
    support.push_back(Place::infinite(chi.base()));
    std::sort(support.begin(), support.end());
    for (const Place& v : support) {
        int64_t a = valuation(rad, v);
        if (a % static_cast<int64_t>(n) != 0) out.push_back(v);
    }
    return out;
}

struct GrunwaldWitnesses {
    CyclicCharacter theta;
    Place v1, v2;
};

// A constant character theta of order q^e together with the first two places
// where theta has local order exactly q^t, i.e. places whose degree has
// q-adic valuation e - t.  This is the constant-character specialization of
// prescribing local orders at finitely many places.
inline GrunwaldWitnesses grunwald_constant_witnesses(PrimeField base, uint64_t q, uint32_t e,
                                                     uint32_t t, uint64_t search_degree) {
    if (q < 2 || !is_prime_u64(q)) throw std::invalid_argument("q must be prime");
    if (q == base.p) throw std::invalid_argument("q must differ from p");
    if (e < 1 || t < 1 || t > e) throw std::invalid_argument("need 1 <= t <= e");
    uint64_t qe = ipow_checked(q, e, "character order overflow");
    CyclicCharacter theta = CyclicCharacter::constant(base, QmodZ::of(1, static_cast<int64_t>(qe)));
    uint64_t want = e - t;
    auto pred = [&](uint64_t d) { return padic_valuation(q, d) == want; };
    std::vector<Place> found = first_places_with_degree(base, search_degree, 2, pred);
    if (found.size() < 2)
        throw SearchBoundExhausted("insufficient places below degree bound");
    return {std::move(theta), std::move(found[0]), std::move(found[1])};
}

} // namespace brauerkit
