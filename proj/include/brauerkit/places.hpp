#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "brauerkit/poly.hpp"

// Places of the rational function field F_p(t): one for each monic
// irreducible polynomial, plus the degree-one place at infinity.

namespace brauerkit {

class Place {
public:
    static Place finite(Poly monic_irreducible) {
        if (!monic_irreducible.is_monic())
            throw std::invalid_argument("place polynomial must be monic");
        if (!is_irreducible(monic_irreducible))
            throw std::invalid_argument("place polynomial is not irreducible");
        return Place(std::move(monic_irreducible), false);
    }

    static Place infinite(PrimeField f) { return Place(Poly::t(f), true); }

    bool is_infinite() const { return infinite_; }
    const PrimeField& field() const { return poly_.field(); }

    uint64_t degree() const {
        return infinite_ ? 1 : static_cast<uint64_t>(poly_.degree());
    }

    const Poly& polynomial() const {
        if (infinite_) throw std::domain_error("infinite place has no polynomial");
        return poly_;
    }

    bool operator==(const Place& o) const {
        return infinite_ == o.infinite_ && (infinite_ || poly_ == o.poly_);
    }

    // (degree, infinite-before-finite, coefficients): infinity is the first
    // degree-one place, finite places follow in polynomial order.
    std::strong_ordering operator<=>(const Place& o) const {
        if (auto c = degree() <=> o.degree(); c != 0) return c;
        if (infinite_ != o.infinite_)
            return infinite_ ? std::strong_ordering::less : std::strong_ordering::greater;
        if (infinite_) return std::strong_ordering::equal;
        return poly_ <=> o.poly_;
    }

    std::string to_string() const { return infinite_ ? "inf" : poly_.to_string(); }

    static Place parse(PrimeField f, const std::string& s) {
        if (s == "inf") return infinite(f);
        return finite(Poly::parse(f, s).monic());
    }

    // Used by enumeration loops that have already proven irreducibility.
    static Place finite_unchecked(Poly monic_irreducible) {
        return Place(std::move(monic_irreducible), false);
    }

private:
    Place(Poly p, bool inf) : poly_(std::move(p)), infinite_(inf) {}

    Poly poly_;
    bool infinite_;
};

// All places of degree <= max_degree in canonical order.  Exhaustive scan;
// meant for the small degrees the test and search paths use.
inline std::vector<Place> places_up_to(PrimeField f, uint64_t max_degree) {
    std::vector<Place> out;
    if (max_degree == 0) return out;
    out.push_back(Place::infinite(f));
    for (uint64_t d = 1; d <= max_degree; ++d) {
        uint64_t count = ipow_checked(f.p, d, "place enumeration bound too large");
        std::vector<uint64_t> digits(d, 0);
        for (uint64_t k = 0; k < count; ++k) {
            std::vector<uint64_t> c(digits.begin(), digits.end());
            c.push_back(1);
            Poly cand(f, std::move(c));
            if (is_irreducible(cand)) out.push_back(Place::finite_unchecked(std::move(cand)));
            size_t i = 0;
            while (i < d && ++digits[i] == f.p) digits[i++] = 0;
        }
    }
    return out;
}

// First `count` places whose degree d satisfies pred(d), scanning degrees
// 1..max_degree in order (infinity first among degree 1).
template <typename DegreePred>
std::vector<Place> first_places_with_degree(PrimeField f, uint64_t max_degree, size_t count,
                                            DegreePred pred) {
    std::vector<Place> out;
    for (uint64_t d = 1; d <= max_degree && out.size() < count; ++d) {
        if (!pred(d)) continue;
        if (d == 1) out.push_back(Place::infinite(f));
        if (out.size() >= count) break;
        for (Poly& irr : first_monic_irreducibles(f, d, count - out.size()))
            out.push_back(Place::finite_unchecked(std::move(irr)));
    }
    if (out.size() > count)
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(count), out.end());
    return out;
}

} // namespace brauerkit
