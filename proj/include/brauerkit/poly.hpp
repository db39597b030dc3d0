#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "brauerkit/fp.hpp"

// Univariate polynomials over F_p.  Coefficients are stored ascending with no
// trailing zeros, so every value has exactly one representation.  The zero
// polynomial has an empty coefficient vector and degree -1.

namespace brauerkit {

class Poly {
public:
    Poly(PrimeField f, std::vector<uint64_t> coeffs) : fp_(f), c_(std::move(coeffs)) {
        for (auto& x : c_) x %= fp_.p;
        trim();
    }

    static Poly zero(PrimeField f) { return Poly(f, {}); }
    static Poly constant(PrimeField f, uint64_t c) { return Poly(f, {c}); }
    static Poly one(PrimeField f) { return constant(f, 1); }
    static Poly t(PrimeField f) { return Poly(f, {0, 1}); }

    const PrimeField& field() const { return fp_; }
    const std::vector<uint64_t>& coeffs() const { return c_; }
    int64_t degree() const { return static_cast<int64_t>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    uint64_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    uint64_t leading_coeff() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return leading_coeff() == 1; }

    bool operator==(const Poly& o) const { return fp_ == o.fp_ && c_ == o.c_; }

    Poly operator+(const Poly& o) const {
        check_field(o);
        std::vector<uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
        for (size_t i = 0; i < r.size(); ++i) r[i] = fp_.add(coeff(i), o.coeff(i));
        return Poly(fp_, std::move(r));
    }
    Poly operator-(const Poly& o) const {
        check_field(o);
        std::vector<uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
        for (size_t i = 0; i < r.size(); ++i) r[i] = fp_.sub(coeff(i), o.coeff(i));
        return Poly(fp_, std::move(r));
    }
    Poly operator*(const Poly& o) const {
        check_field(o);
        if (is_zero() || o.is_zero()) return zero(fp_);
        std::vector<uint64_t> r(c_.size() + o.c_.size() - 1, 0);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = fp_.add(r[i + j], fp_.mul(c_[i], o.c_[j]));
        }
        return Poly(fp_, std::move(r));
    }
    Poly scaled(uint64_t k) const {
        std::vector<uint64_t> r(c_);
        for (auto& x : r) x = fp_.mul(x, k);
        return Poly(fp_, std::move(r));
    }

    // Quotient and remainder; the divisor need not be monic.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        check_field(d);
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        if (degree() < d.degree()) return {zero(fp_), *this};
        std::vector<uint64_t> rem(c_);
        std::vector<uint64_t> quo(c_.size() - d.c_.size() + 1, 0);
        uint64_t lead_inv = fp_.inv(d.leading_coeff());
        for (int64_t i = degree(); i >= d.degree(); --i) {
            uint64_t coef = rem[static_cast<size_t>(i)];
            if (coef == 0) continue;
            uint64_t q = fp_.mul(coef, lead_inv);
            quo[static_cast<size_t>(i - d.degree())] = q;
            for (size_t j = 0; j < d.c_.size(); ++j) {
                size_t k = static_cast<size_t>(i - d.degree()) + j;
                rem[k] = fp_.sub(rem[k], fp_.mul(q, d.c_[j]));
            }
        }
        return {Poly(fp_, std::move(quo)), Poly(fp_, std::move(rem))};
    }
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }

    bool divides(const Poly& f) const { return !is_zero() && f.divmod(*this).second.is_zero(); }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(fp_.inv(leading_coeff()));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return zero(fp_);
        std::vector<uint64_t> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = fp_.mul(c_[i], i % fp_.p);
        return Poly(fp_, std::move(r));
    }

    uint64_t eval(uint64_t x) const {
        uint64_t acc = 0;
        for (size_t i = c_.size(); i-- > 0;) acc = fp_.add(fp_.mul(acc, x), c_[i]);
        return acc;
    }

    // Degree-first order, ties broken by coefficient value with the leading
    // coefficient most significant.  Same-degree monic polynomials compare as
    // their base-p digit strings, e.g. over F_2: t^3+t+1 < t^3+t^2+1.
    std::strong_ordering operator<=>(const Poly& o) const {
        if (auto c = degree() <=> o.degree(); c != 0) return c;
        for (size_t i = c_.size(); i-- > 0;) {
            if (auto c = c_[i] <=> o.c_[i]; c != 0) return c;
        }
        return std::strong_ordering::equal;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += '+';
            if (i == 0) {
                s += std::to_string(c_[i]);
            } else {
                if (c_[i] != 1) s += std::to_string(c_[i]);
                s += 't';
                if (i > 1) { s += '^'; s += std::to_string(i); }
            }
        }
        return s;
    }

    // Inverse of to_string; also tolerates "2*t^2" and whitespace.
    static Poly parse(PrimeField f, const std::string& text) {
        std::string s;
        for (char ch : text) {
            if (!isspace(static_cast<unsigned char>(ch))) s += ch;
        }
        if (s.empty()) throw std::invalid_argument("empty polynomial");
        std::vector<uint64_t> coeffs;
        size_t pos = 0;
        while (pos < s.size()) {
            size_t next = s.find('+', pos);
            std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
            pos = next == std::string::npos ? s.size() : next + 1;
            if (term.empty()) throw std::invalid_argument("malformed polynomial: " + text);
            uint64_t coef = 1;
            size_t i = 0;
            if (isdigit(static_cast<unsigned char>(term[0]))) {
                coef = 0;
                while (i < term.size() && isdigit(static_cast<unsigned char>(term[i]))) {
                    coef = coef * 10 + static_cast<uint64_t>(term[i] - '0');
                    if (coef > (UINT64_MAX >> 8)) throw std::invalid_argument("coefficient too large");
                    ++i;
                }
            }
            if (i < term.size() && term[i] == '*') ++i;
            uint64_t exp = 0;
            if (i < term.size()) {
                if (term[i] != 't') throw std::invalid_argument("malformed polynomial: " + text);
                ++i;
                exp = 1;
                if (i < term.size()) {
                    if (term[i] != '^') throw std::invalid_argument("malformed polynomial: " + text);
                    ++i;
                    if (i >= term.size()) throw std::invalid_argument("malformed polynomial: " + text);
                    exp = 0;
                    while (i < term.size() && isdigit(static_cast<unsigned char>(term[i]))) {
                        exp = exp * 10 + static_cast<uint64_t>(term[i] - '0');
                        ++i;
                    }
                    if (exp > 4096) throw std::invalid_argument("exponent too large");
                }
            } else if (i == 0) {
                throw std::invalid_argument("malformed polynomial: " + text);
            }
            if (i != term.size()) throw std::invalid_argument("malformed polynomial: " + text);
            if (coeffs.size() < exp + 1) coeffs.resize(exp + 1, 0);
            coeffs[exp] = f.add(coeffs[exp], coef % f.p);
        }
        return Poly(f, std::move(coeffs));
    }

private:
    PrimeField fp_;
    std::vector<uint64_t> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    void check_field(const Poly& o) const {
        if (!(fp_ == o.fp_)) throw std::invalid_argument("mixed characteristics");
    }
};

inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = b;
        b = r;
    }
    return a.monic();
}

// g = gcd(a, b) together with u satisfying u*a = g (mod b); enough to invert
// residues mod an irreducible.
inline std::pair<Poly, Poly> poly_half_ext_gcd(Poly a, const Poly& b) {
    PrimeField f = a.field();
    Poly r0 = a, r1 = b;
    Poly u0 = Poly::one(f), u1 = Poly::zero(f);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        Poly u = u0 - q * u1;
        r0 = r1; r1 = r;
        u0 = u1; u1 = (u % b);
    }
    if (r0.is_zero()) return {r0, u0};
    uint64_t lc = r0.leading_coeff();
    return {r0.monic(), u0.scaled(f.inv(lc)) % b};
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

inline Poly poly_powmod(Poly base, uint64_t exp, const Poly& m) {
    Poly acc = Poly::one(base.field());
    base = base % m;
    while (exp) {
        if (exp & 1) acc = poly_mulmod(acc, base, m);
        base = poly_mulmod(base, base, m);
        exp >>= 1;
    }
    return acc;
}

inline Poly poly_invmod(const Poly& a, const Poly& m) {
    auto [g, u] = poly_half_ext_gcd(a % m, m);
    if (g.degree() != 0) throw std::domain_error("residue not invertible");
    return u % m;
}

// t^(p^k) mod m for k = 0..count-1 by iterated Frobenius.
inline std::vector<Poly> frobenius_powers(const Poly& m, size_t count) {
    std::vector<Poly> out;
    out.reserve(count);
    Poly x = Poly::t(m.field()) % m;
    out.push_back(x);
    for (size_t k = 1; k < count; ++k) {
        x = poly_powmod(x, m.field().p, m);
        out.push_back(x);
    }
    return out;
}

inline bool is_irreducible(const Poly& f) {
    int64_t d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    if (f.coeff(0) == 0) return false; // divisible by t
    auto frob = frobenius_powers(f, static_cast<size_t>(d) + 1);
    Poly t = Poly::t(f.field());
    if (!(frob[static_cast<size_t>(d)] == (t % f))) return false;
    for (uint64_t ell = 2; ell <= static_cast<uint64_t>(d); ++ell) {
        if (static_cast<uint64_t>(d) % ell != 0) continue;
        bool prime = true;
        for (uint64_t k = 2; k * k <= ell; ++k)
            if (ell % k == 0) { prime = false; break; }
        if (!prime) continue;
        Poly diff = frob[static_cast<size_t>(d) / ell] - t;
        if (poly_gcd(diff, f).degree() != 0) return false;
    }
    return true;
}

struct PolyFactor {
    Poly factor;
    uint64_t multiplicity;
    bool operator==(const PolyFactor&) const = default;
};

namespace detail {

// Fixed-seed generator so equal-degree splitting is reproducible run to run.
struct SplitMix64 {
    uint64_t state;
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

inline Poly random_poly_below(PrimeField f, int64_t degree_bound, SplitMix64& rng) {
    std::vector<uint64_t> c(static_cast<size_t>(degree_bound));
    for (auto& x : c) x = rng.next() % f.p;
    return Poly(f, std::move(c));
}

// Cantor-Zassenhaus split of a squarefree product of irreducibles of equal
// degree d.
inline void equal_degree_split(const Poly& f, uint64_t d, std::vector<Poly>& out, SplitMix64& rng) {
    if (f.degree() == static_cast<int64_t>(d)) {
        out.push_back(f.monic());
        return;
    }
    PrimeField fp = f.field();
    while (true) {
        Poly a = random_poly_below(fp, f.degree(), rng);
        if (a.degree() < 1) continue;
        Poly g = poly_gcd(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, out, rng);
            equal_degree_split(f / g, d, out, rng);
            return;
        }
        Poly b = Poly::zero(fp);
        if (fp.p == 2) {
            // trace map over F_2
            Poly acc = a % f;
            Poly term = acc;
            for (uint64_t i = 1; i < d; ++i) {
                term = poly_mulmod(term, term, f);
                acc = acc + term;
            }
            b = acc;
        } else {
            uint64_t e = (ipow_checked(fp.p, d, "field too large for factorization") - 1) / 2;
            b = poly_powmod(a, e, f) - Poly::one(fp);
        }
        g = poly_gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, out, rng);
            equal_degree_split(f / g, d, out, rng);
            return;
        }
    }
}

inline void factor_squarefree(const Poly& f, uint64_t outer_mult, std::vector<PolyFactor>& out,
                              SplitMix64& rng) {
    // distinct-degree pass
    Poly rest = f;
    Poly x = Poly::t(f.field()) % rest;
    Poly xq = x;
    uint64_t d = 0;
    while (rest.degree() > 0) {
        ++d;
        if (rest.degree() < static_cast<int64_t>(2 * d)) {
            out.push_back({rest.monic(), outer_mult});
            break;
        }
        xq = poly_powmod(xq, f.field().p, rest);
        Poly g = poly_gcd(xq - x, rest);
        if (g.degree() > 0) {
            std::vector<Poly> pieces;
            equal_degree_split(g, d, pieces, rng);
            for (auto& piece : pieces) out.push_back({piece, outer_mult});
            rest = rest / g;
            xq = xq % rest;
            x = Poly::t(f.field()) % rest;
        }
    }
}

} // namespace detail

// Monic irreducible factorization, sorted by (degree, coefficients); the unit
// leading coefficient is dropped.  Exact for any input that fits in memory;
// tuned for the small degrees this library works at.
inline std::vector<PolyFactor> factor(const Poly& input) {
    if (input.is_zero()) throw std::domain_error("zero has no factorization");
    std::vector<PolyFactor> out;
    Poly f = input.monic();
    if (f.degree() < 1) return out;
    PrimeField fp = f.field();
    detail::SplitMix64 rng{0x5eedb0a7ull};

    // squarefree decomposition, peeling p-th powers as needed
    uint64_t power = 1;
    while (f.degree() > 0) {
        Poly deriv = f.derivative();
        if (deriv.is_zero()) {
            // f = g(t^p) = g(t)^p over F_p
            std::vector<uint64_t> c;
            for (size_t i = 0; i <= static_cast<size_t>(f.degree()); i += fp.p)
                c.push_back(f.coeff(i));
            f = Poly(fp, std::move(c));
            power *= fp.p;
            continue;
        }
        Poly rep = poly_gcd(f, deriv); // product of factors with multiplicity > 1
        Poly sqfree = f / rep;
        uint64_t mult = 1;
        while (sqfree.degree() > 0) {
            // factors of multiplicity exactly `mult` in f
            Poly next = poly_gcd(sqfree, rep);
            Poly exact = sqfree / next;
            if (exact.degree() > 0) detail::factor_squarefree(exact, mult * power, out, rng);
            if (next.degree() > 0) rep = rep / next;
            sqfree = next;
            ++mult;
        }
        // whatever remains has every multiplicity divisible by p and is
        // handled by the p-th-root branch next time around
        f = rep;
    }

    std::sort(out.begin(), out.end(),
              [](const PolyFactor& a, const PolyFactor& b) { return a.factor < b.factor; });
    // merge repeated entries that arrived through different multiplicity layers
    std::vector<PolyFactor> merged;
    for (auto& pf : out) {
        if (!merged.empty() && merged.back().factor == pf.factor)
            merged.back().multiplicity += pf.multiplicity;
        else
            merged.push_back(pf);
    }
    return merged;
}

// The monic polynomial of degree d whose base-p digit string is p^d + k.
inline Poly monic_by_rank(PrimeField f, uint64_t degree, uint64_t rank) {
    std::vector<uint64_t> c(degree + 1, 0);
    c[degree] = 1;
    for (uint64_t i = 0; i < degree && rank; ++i) {
        c[i] = rank % f.p;
        rank /= f.p;
    }
    return Poly(f, std::move(c));
}

// First `count` monic irreducibles of the given degree, in canonical order.
// Returns fewer if the degree has fewer irreducibles.
inline std::vector<Poly> first_monic_irreducibles(PrimeField f, uint64_t degree, size_t count) {
    std::vector<Poly> out;
    if (degree == 0 || count == 0) return out;
    __uint128_t total = 1;
    for (uint64_t i = 0; i < degree; ++i) {
        total *= f.p;
        if (total > (static_cast<__uint128_t>(1) << 62)) {
            total = static_cast<__uint128_t>(1) << 62;
            break;
        }
    }
    // the digit odometer walks candidates in canonical (base-p counting) order
    std::vector<uint64_t> digits(degree, 0);
    for (__uint128_t k = 0; k < total; ++k) {
        std::vector<uint64_t> c(digits.begin(), digits.end());
        c.push_back(1);
        Poly cand(f, std::move(c));
        if (is_irreducible(cand)) {
            out.push_back(std::move(cand));
            if (out.size() == count) return out;
        }
        size_t i = 0;
        while (i < degree && ++digits[i] == f.p) digits[i++] = 0;
        if (i == degree) break;
    }
    return out;
}

} // namespace brauerkit
