#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "brauerkit/places.hpp"
#include "brauerkit/poly.hpp"

// Rational functions over F_p(t) in lowest terms with monic denominator, and
// the valuation / residue-field machinery attached to places.

namespace brauerkit {

class RationalFunction {
public:
    explicit RationalFunction(Poly num)
        : num_(std::move(num)), den_(Poly::one(num_.field())) {}

    RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("zero denominator");
        reduce();
    }

    static RationalFunction from_place(const Place& v) {
        if (v.is_infinite()) throw std::domain_error("infinite place has no polynomial");
        return RationalFunction(v.polynomial());
    }

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }
    const PrimeField& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator*(const RationalFunction& o) const {
        return RationalFunction(num_ * o.num_, den_ * o.den_);
    }
    RationalFunction operator/(const RationalFunction& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero rational function");
        return RationalFunction(num_ * o.den_, den_ * o.num_);
    }

    RationalFunction pow(uint64_t k) const {
        RationalFunction acc(Poly::one(field()));
        RationalFunction base = *this;
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string to_string() const {
        if (den_ == Poly::one(field())) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

    static RationalFunction parse(PrimeField f, const std::string& s) {
        size_t slash = s.find('/');
        if (slash == std::string::npos) return RationalFunction(Poly::parse(f, s));
        return RationalFunction(Poly::parse(f, s.substr(0, slash)),
                                Poly::parse(f, s.substr(slash + 1)));
    }

private:
    Poly num_, den_;

    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly::one(num_.field());
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        uint64_t lc = den_.leading_coeff();
        if (lc != 1) {
            uint64_t inv = num_.field().inv(lc);
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }
};

inline int64_t valuation(const Poly& f, const Place& v) {
    if (f.is_zero()) throw std::domain_error("valuation of zero undefined");
    if (v.is_infinite()) return -f.degree();
    int64_t n = 0;
    Poly rest = f;
    while (true) {
        auto [q, r] = rest.divmod(v.polynomial());
        if (!r.is_zero()) return n;
        rest = q;
        ++n;
    }
}

inline int64_t valuation(const RationalFunction& f, const Place& v) {
    if (f.is_zero()) throw std::domain_error("valuation of zero undefined");
    if (v.is_infinite()) return f.denominator().degree() - f.numerator().degree();
    // lowest terms: at most one of the two valuations is nonzero
    return valuation(f.numerator(), v) - valuation(f.denominator(), v);
}

// Image of a v-unit in the residue field k(v) = F_p[t]/(pi_v), reduced mod
// pi_v.  At infinity the residue field is F_p and the image of a function of
// valuation zero is the ratio of leading coefficients.
inline Poly residue_image(const RationalFunction& f, const Place& v) {
    PrimeField fp = f.field();
    if (valuation(f, v) != 0) throw std::domain_error("residue image needs valuation zero");
    if (v.is_infinite())
        return Poly::constant(fp, fp.mul(f.numerator().leading_coeff(),
                                         fp.inv(f.denominator().leading_coeff())));
    const Poly& pi = v.polynomial();
    Poly num = f.numerator() % pi;
    Poly den = f.denominator() % pi;
    return poly_mulmod(num, poly_invmod(den, pi), pi);
}

// Multiplicative unit part of f at v: f * pi_v^{-v(f)}, a v-unit.  At
// infinity the uniformizer is 1/t.
inline RationalFunction unit_part_at(const RationalFunction& f, const Place& v) {
    int64_t a = valuation(f, v);
    if (a == 0) return f;
    PrimeField fp = f.field();
    Poly pi_num = v.is_infinite() ? Poly::one(fp) : v.polynomial();
    Poly pi_den = v.is_infinite() ? Poly::t(fp) : Poly::one(fp);
    RationalFunction pi(pi_num, pi_den);
    RationalFunction p_abs = pi.pow(static_cast<uint64_t>(a < 0 ? -a : a));
    return a > 0 ? f / p_abs : f * p_abs;
}

namespace detail {

// Order of a nonzero residue x in k(v)^x / (k(v)^x)^n, assuming n divides
// |k(v)^x|.  The quotient is cyclic of order n, so the order is found by
// stripping primes from n.
inline uint64_t order_in_unit_quotient(const Poly& x, const Place& v, uint64_t n) {
    PrimeField fp = x.field();
    uint64_t d = v.degree();
    uint64_t q_v = ipow_checked(fp.p, d, "residue field exceeds machine word");
    if (n == 0 || (q_v - 1) % n != 0) throw std::domain_error("no n-th roots structure");
    if (v.is_infinite()) {
        if (!x.is_constant() || x.is_zero())
            throw std::domain_error("residue at infinity must be a nonzero constant");
        uint64_t y = powmod_u64(x.coeff(0), (q_v - 1) / n, fp.p);
        uint64_t j = n;
        for (uint64_t ell = 2; ell <= j; ++ell) {
            if (n % ell != 0) continue;
            bool prime = true;
            for (uint64_t k = 2; k * k <= ell; ++k)
                if (ell % k == 0) { prime = false; break; }
            if (!prime) continue;
            while (j % ell == 0 && powmod_u64(y, j / ell, fp.p) == 1) j /= ell;
        }
        return j;
    }
    const Poly& pi = v.polynomial();
    Poly y = poly_powmod(x, (q_v - 1) / n, pi);
    Poly one = Poly::one(fp);
    uint64_t j = n;
    for (uint64_t ell = 2; ell <= j; ++ell) {
        if (n % ell != 0) continue;
        bool prime = true;
        for (uint64_t k = 2; k * k <= ell; ++k)
            if (ell % k == 0) { prime = false; break; }
        if (!prime) continue;
        while (j % ell == 0 && poly_powmod(y, j / ell, pi) == one) j /= ell;
    }
    return j;
}

} // namespace detail

// Smallest j dividing n with u^{j (p^{deg v} - 1)/n} = 1 in k(v)^x, i.e. the
// order of u's residue class in k(v)^x modulo n-th powers.  At infinity u is
// read through its leading coefficient (the value after clearing the pole
// with the 1/t uniformizer).
inline uint64_t residue_field_order_of(const Place& v, const Poly& u, uint64_t n) {
    if (u.is_zero()) throw std::domain_error("unit has no residue");
    PrimeField fp = u.field();
    if (v.is_infinite())
        return detail::order_in_unit_quotient(Poly::constant(fp, u.leading_coeff()), v, n);
    Poly img = u % v.polynomial();
    if (img.is_zero()) throw std::domain_error("unit has no residue");
    return detail::order_in_unit_quotient(img, v, n);
}

} // namespace brauerkit
