#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "brauerkit/characters.hpp"
#include "brauerkit/places.hpp"
#include "brauerkit/qmodz.hpp"
#include "brauerkit/rational.hpp"

// Brauer classes of F_p(t) prime to p, represented by their local invariant
// vectors: finitely many places carry a nonzero value in Q/Z and the values
// sum to zero.  Over a global function field this data is the whole class,
// and period = index = lcm of the local orders.

namespace brauerkit {

struct PeriodIndex {
    uint64_t period, index;
    bool operator==(const PeriodIndex&) const = default;
};

namespace detail {

inline uint64_t lcm_checked(uint64_t a, uint64_t b) {
    uint64_t g = std::gcd(a, b);
    __uint128_t l = static_cast<__uint128_t>(a / g) * b;
    if (l > UINT64_MAX) throw std::overflow_error("index overflow");
    return static_cast<uint64_t>(l);
}

template <typename Map>
PeriodIndex period_index_of(const Map& inv) {
    uint64_t l = 1;
    for (const auto& [v, x] : inv) l = lcm_checked(l, x.order());
    return {l, l};
}

template <typename Map>
void check_reciprocity(const Map& inv) {
    QmodZ sum;
    for (const auto& [v, x] : inv) sum = sum + x;
    if (!sum.is_zero()) throw std::invalid_argument("reciprocity violated");
}

} // namespace detail

class GlobalBrauerClass {
public:
    static GlobalBrauerClass zero(PrimeField base) { return GlobalBrauerClass(base, {}); }

    static GlobalBrauerClass from_invariants(PrimeField base,
                                             const std::vector<std::pair<Place, QmodZ>>& entries) {
        std::map<Place, QmodZ> inv;
        for (const auto& [v, x] : entries) {
            if (inv.count(v)) throw std::invalid_argument("duplicate place");
            if (x.is_zero()) continue;
            if (std::gcd(x.order(), base.p) != 1)
                throw std::invalid_argument("invariant order must be coprime to p");
            inv.emplace(v, x);
        }
        detail::check_reciprocity(inv);
        return GlobalBrauerClass(base, std::move(inv));
    }

    const PrimeField& base() const { return base_; }
    const std::map<Place, QmodZ>& invariants() const { return inv_; }
    bool is_zero() const { return inv_.empty(); }

    QmodZ invariant_at(const Place& v) const {
        auto it = inv_.find(v);
        return it == inv_.end() ? QmodZ() : it->second;
    }

    uint64_t max_support_degree() const {
        uint64_t d = 0;
        for (const auto& [v, x] : inv_) d = std::max(d, v.degree());
        return d;
    }

    GlobalBrauerClass operator+(const GlobalBrauerClass& o) const {
        if (!(base_ == o.base_)) throw std::invalid_argument("mixed characteristics");
        std::map<Place, QmodZ> inv = inv_;
        for (const auto& [v, x] : o.inv_) {
            QmodZ s = invariant_at(v) + x;
            if (s.is_zero()) inv.erase(v);
            else inv[v] = s;
        }
        return GlobalBrauerClass(base_, std::move(inv));
    }

    GlobalBrauerClass scaled(int64_t k) const {
        std::map<Place, QmodZ> inv;
        for (const auto& [v, x] : inv_) {
            QmodZ s = x.scaled(k);
            if (!s.is_zero()) inv.emplace(v, s);
        }
        return GlobalBrauerClass(base_, std::move(inv));
    }

    PeriodIndex period_index() const { return detail::period_index_of(inv_); }

    bool operator==(const GlobalBrauerClass& o) const {
        return base_ == o.base_ && inv_ == o.inv_;
    }

private:
    GlobalBrauerClass(PrimeField base, std::map<Place, QmodZ> inv)
        : base_(base), inv_(std::move(inv)) {}

    PrimeField base_;
    std::map<Place, QmodZ> inv_; // canonical place order; values all nonzero
};

inline GlobalBrauerClass scale_class(int64_t k, const GlobalBrauerClass& alpha) {
    return alpha.scaled(k);
}

// The class of the cyclic symbol (chi, f) for a constant character chi with
// Frobenius image c: its invariant at v is v(f) * deg(v) * c.  The residue
// at v is the character res(chi)^{v(f)} of k(v), encoded by the same value;
// with this sign convention residues and invariants agree place by place.
inline QmodZ symbol_invariant_at(const CyclicCharacter& chi, const RationalFunction& f,
                                 const Place& v) {
    if (chi.kind() != CyclicCharacter::Kind::Constant)
        throw std::domain_error("symbol invariants implemented for constant characters only");
    int64_t a = valuation(f, v);
    return chi.frobenius_image().scaled(a * static_cast<int64_t>(v.degree()));
}

inline GlobalBrauerClass symbol_class(const CyclicCharacter& chi, const RationalFunction& f) {
    if (chi.kind() != CyclicCharacter::Kind::Constant)
        throw std::domain_error("symbol invariants implemented for constant characters only");
    if (f.is_zero()) throw std::domain_error("symbol needs a nonzero function");
    PrimeField base = chi.base();
    std::vector<std::pair<Place, QmodZ>> entries;
    std::vector<Place> support;
    for (const auto& pf : factor(f.numerator()))
        support.push_back(Place::finite_unchecked(pf.factor));
    for (const auto& pf : factor(f.denominator()))
        support.push_back(Place::finite_unchecked(pf.factor));
    support.push_back(Place::infinite(base));
    for (const Place& v : support)
        entries.emplace_back(v, symbol_invariant_at(chi, f, v));
    return GlobalBrauerClass::from_invariants(base, entries);
}

// A sum of constant-character symbols; keeps the presentation so residues
// can be read off term by term.
class SymbolPresentation {
public:
    explicit SymbolPresentation(PrimeField base) : base_(base) {}

    void add_term(CyclicCharacter chi, RationalFunction f) {
        if (chi.kind() != CyclicCharacter::Kind::Constant)
            throw std::domain_error("symbol invariants implemented for constant characters only");
        if (!(chi.base() == base_)) throw std::invalid_argument("mixed characteristics");
        terms_.emplace_back(std::move(chi), std::move(f));
    }

    const std::vector<std::pair<CyclicCharacter, RationalFunction>>& terms() const {
        return terms_;
    }

    GlobalBrauerClass to_class() const {
        GlobalBrauerClass acc = GlobalBrauerClass::zero(base_);
        for (const auto& [chi, f] : terms_) acc = acc + symbol_class(chi, f);
        return acc;
    }

    // Q/Z encoding of the residue character at v.
    QmodZ residue_at(const Place& v) const {
        QmodZ acc;
        for (const auto& [chi, f] : terms_) acc = acc + symbol_invariant_at(chi, f, v);
        return acc;
    }

    // Residues over the support of every term plus infinity, zeros included,
    // in canonical place order.
    std::vector<std::pair<Place, QmodZ>> residue_table() const {
        std::map<Place, QmodZ> rows;
        rows.emplace(Place::infinite(base_), QmodZ());
        for (const auto& [chi, f] : terms_) {
            for (const auto& pf : factor(f.numerator()))
                rows.emplace(Place::finite_unchecked(pf.factor), QmodZ());
            for (const auto& pf : factor(f.denominator()))
                rows.emplace(Place::finite_unchecked(pf.factor), QmodZ());
        }
        std::vector<std::pair<Place, QmodZ>> out;
        for (auto& [v, x] : rows) out.emplace_back(v, residue_at(v));
        return out;
    }

private:
    PrimeField base_;
    std::vector<std::pair<CyclicCharacter, RationalFunction>> terms_;
};

// A place of the cyclic cover cut out by a character, named by the place
// below it and a 1-based counter.
struct CoverPlace {
    Place base;
    uint64_t index;

    bool operator==(const CoverPlace&) const = default;
    std::strong_ordering operator<=>(const CoverPlace& o) const {
        if (auto c = base <=> o.base; c != 0) return c;
        return index <=> o.index;
    }
    std::string to_string() const {
        return base.to_string() + "#" + std::to_string(index);
    }
};

// Invariant vector of the restriction to the cover; same shape as a global
// class, keyed by cover places.
class RestrictedClass {
public:
    RestrictedClass(PrimeField base, std::map<CoverPlace, QmodZ> inv)
        : base_(base), inv_(std::move(inv)) {
        detail::check_reciprocity(inv_);
    }

    const std::map<CoverPlace, QmodZ>& invariants() const { return inv_; }
    PeriodIndex period_index() const { return detail::period_index_of(inv_); }
    bool is_zero() const { return inv_.empty(); }

    bool operator==(const RestrictedClass& o) const {
        return base_ == o.base_ && inv_ == o.inv_;
    }

private:
    PrimeField base_;
    std::map<CoverPlace, QmodZ> inv_;
};

// Restriction of alpha to the cyclic extension cut out by chi.  Over each
// place v of the base with splitting data (e, f, g) there are g places, and
// every one of them picks up the invariant e * f * inv_v(alpha).
inline RestrictedClass restrict_class(const GlobalBrauerClass& alpha, const CyclicCharacter& chi,
                                      uint64_t search_degree) {
    if (!(alpha.base() == chi.base())) throw std::invalid_argument("mixed characteristics");
    if (alpha.max_support_degree() > search_degree)
        throw std::invalid_argument("search degree does not cover support");
    std::map<CoverPlace, QmodZ> inv;
    for (const auto& [v, x] : alpha.invariants()) {
        SplittingData s = splitting_at(chi, v);
        QmodZ lifted = x.scaled(static_cast<int64_t>(s.e * s.f));
        if (lifted.is_zero()) continue;
        for (uint64_t i = 1; i <= s.g; ++i) inv.emplace(CoverPlace{v, i}, lifted);
    }
    return RestrictedClass(alpha.base(), std::move(inv));
}

inline RestrictedClass restrict_class(const GlobalBrauerClass& alpha, const CyclicCharacter& chi) {
    return restrict_class(alpha, chi, alpha.max_support_degree());
}

} // namespace brauerkit
