#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "brauerkit/brauer_complete.hpp"

// Lifting classes of the completed field back to the generic fiber over the
// projective line.  The splitting map is determined by a choice of lift for
// each relevant place; the canonical choice lifts a monic irreducible
// coefficientwise to the integer polynomial with coefficients in {0,...,p-1}
// and sends the infinite place to the line at infinity.  Lifting preserves
// period and index, so reports about the lifted class are computed on the
// completed side.

namespace brauerkit {

struct LiftedPlace {
    bool infinite;
    std::vector<uint64_t> coeffs; // integer coefficients, each in {0,...,p-1}

    uint64_t degree() const {
        return infinite ? 1 : static_cast<uint64_t>(coeffs.size()) - 1;
    }

    std::string name() const {
        if (infinite) return "inf";
        std::string s;
        for (size_t i = coeffs.size(); i-- > 0;) {
            if (coeffs[i] == 0) continue;
            if (!s.empty()) s += '+';
            if (i == 0) {
                s += std::to_string(coeffs[i]);
            } else {
                if (coeffs[i] != 1) s += std::to_string(coeffs[i]);
                s += 't';
                if (i > 1) { s += '^'; s += std::to_string(i); }
            }
        }
        return s.empty() ? "0" : s;
    }

    // the lift reduces back to the place it came from
    Place reduction(PrimeField base) const {
        if (infinite) return Place::infinite(base);
        return Place::finite_unchecked(Poly(base, coeffs));
    }

    bool operator==(const LiftedPlace&) const = default;
};

class VLift {
public:
    static VLift canonical(PrimeField base) { return VLift(base); }

    const PrimeField& base() const { return base_; }

    LiftedPlace lift(const Place& v) const {
        if (!(v.field() == base_)) throw std::invalid_argument("mixed characteristics");
        if (v.is_infinite()) return {true, {}};
        return {false, v.polynomial().coeffs()};
    }

    bool operator==(const VLift&) const = default;

private:
    explicit VLift(PrimeField base) : base_(base) {}
    PrimeField base_;
};

class LiftedClass {
public:
    LiftedClass(CompletedClass source, VLift vlift)
        : source_(std::move(source)), vlift_(std::move(vlift)) {
        if (!(source_.base() == vlift_.base()))
            throw std::invalid_argument("mixed characteristics");
        std::set<Place> support;
        for (const auto& [v, x] : source_.alpha0().invariants()) support.insert(v);
        if (source_.chi0().kind() == CyclicCharacter::Kind::Kummer) {
            const RationalFunction& rad = source_.chi0().radicand();
            uint64_t bound = std::max<int64_t>({1, rad.numerator().degree(),
                                                rad.denominator().degree()});
            for (const Place& v : ramification_locus(source_.chi0(), bound)) support.insert(v);
        }
        for (const Place& v : support) lifted_support_.push_back(vlift_.lift(v));
    }

    const CompletedClass& source() const { return source_; }
    const VLift& vlift() const { return vlift_; }
    const std::vector<LiftedPlace>& lifted_support() const { return lifted_support_; }

    bool operator==(const LiftedClass& o) const {
        return source_ == o.source_ && vlift_ == o.vlift_ &&
               lifted_support_ == o.lifted_support_;
    }

private:
    CompletedClass source_;
    VLift vlift_;
    std::vector<LiftedPlace> lifted_support_; // canonical place order
};

inline LiftedClass lift_class(const CompletedClass& gamma, const VLift& vlift) {
    return LiftedClass(gamma, vlift);
}

// Right inverse of lifting: restriction back to the completed field returns
// the source exactly.
inline CompletedClass restrict_back(const LiftedClass& lifted) { return lifted.source(); }

struct IndexReport {
    uint64_t ind;      // index of the lifted class = index over the completed field
    uint64_t per;      // period, also preserved
    std::string upper_bound_check; // "pass", "fail", or "skipped"
    std::string note;  // reason when skipped
    uint64_t bound;    // the bound that was checked, 0 when skipped

    bool operator==(const IndexReport&) const = default;
};

// The splitting map preserves index, so ind equals the completed index.  For
// classes built by the construction recipes the report cross-checks the
// index against |chi0| * per(alpha0) / (local order of chi0 at the support),
// a bound that uses character orders only: the lifted class is split by an
// extension of that degree.
inline IndexReport index_report(const LiftedClass& lifted, uint64_t search_degree) {
    const CompletedClass& gamma = lifted.source();
    IndexReport rep;
    rep.ind = gamma.index(search_degree);
    rep.per = gamma.period();
    rep.bound = 0;
    if (!gamma.prescribed_local_order()) {
        rep.upper_bound_check = "skipped";
        rep.note = "no prescribed local order on this class";
        return rep;
    }
    uint64_t q_t = *gamma.prescribed_local_order();
    uint64_t per_alpha = gamma.alpha0().period_index().period;
    if (q_t == 0 || per_alpha % q_t != 0) {
        rep.upper_bound_check = "skipped";
        rep.note = "prescribed local order does not divide the residue period";
        return rep;
    }
    __uint128_t bound = static_cast<__uint128_t>(gamma.chi0().order()) * (per_alpha / q_t);
    if (bound > UINT64_MAX) throw std::overflow_error("index overflow");
    rep.bound = static_cast<uint64_t>(bound);
    rep.upper_bound_check = rep.ind == rep.bound ? "pass" : "fail";
    return rep;
}

inline IndexReport index_report(const LiftedClass& lifted) {
    return index_report(lifted, lifted.source().alpha0().max_support_degree());
}

} // namespace brauerkit
