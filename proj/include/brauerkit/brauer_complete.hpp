#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "brauerkit/brauer_global.hpp"
#include "brauerkit/characters.hpp"

// Brauer classes of the completed field K(t)((pi)) with residue field F_p(t),
// prime to p.  Every such class decomposes uniquely as alpha0 + (chi0, pi)
// with alpha0 a class of the residue function field and chi0 a cyclic
// character of it; the pair is the whole datum.  The uniformizer never needs
// a value, only a name.

namespace brauerkit {

class CompletedClass {
public:
    CompletedClass(GlobalBrauerClass alpha0, CyclicCharacter chi0, std::string uniformizer = "pi")
        : alpha0_(std::move(alpha0)), chi0_(std::move(chi0)), pi_(std::move(uniformizer)) {
        if (!(alpha0_.base() == chi0_.base()))
            throw std::invalid_argument("mixed characteristics");
        if (std::gcd(chi0_.order(), base().p) != 1)
            throw std::invalid_argument("character order must be coprime to p");
    }

    const GlobalBrauerClass& alpha0() const { return alpha0_; }
    const CyclicCharacter& chi0() const { return chi0_; }
    const std::string& uniformizer_label() const { return pi_; }
    const PrimeField& base() const { return alpha0_.base(); }

    uint64_t period() const {
        return detail::lcm_checked(alpha0_.period_index().period, chi0_.order());
    }

    // Index formula over the completed field: the ramified part contributes
    // its full order, the rest is the index of alpha0 over the residual
    // extension cut out by chi0.
    uint64_t index(uint64_t search_degree) const {
        uint64_t residual = restrict_class(alpha0_, chi0_, search_degree).period_index().index;
        __uint128_t ind = static_cast<__uint128_t>(chi0_.order()) * residual;
        if (ind > UINT64_MAX) throw std::overflow_error("index overflow");
        return static_cast<uint64_t>(ind);
    }

    uint64_t index() const { return index(alpha0_.max_support_degree()); }

    CompletedClass scaled(int64_t k) const {
        return CompletedClass(alpha0_.scaled(k), chi0_.scaled(k), pi_);
    }

    // Construction recipes record the local order they arranged for chi0 at
    // the support of alpha0; the lift report uses it for an index upper
    // bound that is independent of the invariant bookkeeping.
    const std::optional<uint64_t>& prescribed_local_order() const { return prescribed_; }
    CompletedClass with_prescribed_local_order(uint64_t q_t) const {
        CompletedClass c = *this;
        c.prescribed_ = q_t;
        return c;
    }

    bool operator==(const CompletedClass& o) const {
        return alpha0_ == o.alpha0_ && chi0_ == o.chi0_ && pi_ == o.pi_;
    }

private:
    GlobalBrauerClass alpha0_;
    CyclicCharacter chi0_;
    std::string pi_;
    std::optional<uint64_t> prescribed_;
};

inline CompletedClass scale_completed(int64_t k, const CompletedClass& gamma) {
    return gamma.scaled(k);
}

struct IndecompCertificate {
    uint64_t q;
    uint32_t e;          // period = q^e
    uint32_t t;          // index = q^(2e-t) when the Saltman window applies
    uint64_t ind;
    uint64_t ind_q;      // index of q * gamma
    std::string verdict; // "indecomposable" or "inconclusive"
    std::string branch;  // "saltman", "period=index", or "" when inconclusive

    bool operator==(const IndecompCertificate&) const = default;
};

// Decides indecomposability of the division algebra underlying gamma from
// period/index data alone.  Period q^e with index q^i is certified
// indecomposable either when i = e, or when e <= i <= 2e-1 and multiplying
// by q drops the index by exactly one factor of q (Saltman's criterion).
inline IndecompCertificate certify_indecomposable(const CompletedClass& gamma, uint64_t q,
                                                  uint64_t search_degree) {
    if (q < 2 || !is_prime_u64(q)) throw std::invalid_argument("q must be prime");
    uint64_t per = gamma.period();
    uint64_t e = 0;
    {
        uint64_t rest = per;
        while (rest % q == 0) { rest /= q; ++e; }
        if (rest != 1) throw std::invalid_argument("period not a q-power");
    }
    uint64_t ind = gamma.index(search_degree);
    uint64_t ind_q = gamma.scaled(static_cast<int64_t>(q)).index(search_degree);

    IndecompCertificate cert;
    cert.q = q;
    cert.e = static_cast<uint32_t>(e);
    cert.ind = ind;
    cert.ind_q = ind_q;

    // ind = q^i inside the window e <= i <= 2e-1 determines t = 2e - i;
    // outside of it t carries no information and stays 0
    cert.t = 0;
    {
        uint64_t rest = ind, i = 0;
        while (rest % q == 0) { rest /= q; ++i; }
        if (rest == 1 && e >= 1 && i >= e && i <= 2 * e - 1)
            cert.t = static_cast<uint32_t>(2 * e - i);
    }

    if (ind == 1) {
        cert.verdict = "inconclusive";
        cert.branch = "";
    } else if (ind == per) {
        cert.verdict = "indecomposable";
        cert.branch = "period=index";
    } else if (ind_q * q == ind && ind >= ipow_checked(q, e) &&
               ind <= ipow_checked(q, 2 * e - 1)) {
        cert.verdict = "indecomposable";
        cert.branch = "saltman";
    } else {
        cert.verdict = "inconclusive";
        cert.branch = "";
    }
    return cert;
}

inline IndecompCertificate certify_indecomposable(const CompletedClass& gamma, uint64_t q) {
    return certify_indecomposable(gamma, q, gamma.alpha0().max_support_degree());
}

} // namespace brauerkit
