#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

// Arithmetic in the prime field F_p and the word-sized integer helpers the
// rest of the library leans on.  Elements of F_p are plain uint64_t residues
// in [0, p); the field object only carries p and the operations.

namespace brauerkit {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

inline uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    if (m == 1) return 0;
    uint64_t acc = 1;
    base %= m;
    while (exp) {
        if (exp & 1) acc = mulmod_u64(acc, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return acc;
}

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

// base^exp as an exact integer; throws instead of wrapping.
inline uint64_t ipow_checked(uint64_t base, uint64_t exp, const char* what = "integer power overflow") {
    uint64_t acc = 1;
    for (uint64_t i = 0; i < exp; ++i) {
        __uint128_t wide = static_cast<__uint128_t>(acc) * base;
        if (wide > UINT64_MAX) throw std::overflow_error(what);
        acc = static_cast<uint64_t>(wide);
    }
    return acc;
}

// Exponent of the largest power of q dividing n (n > 0).
inline uint64_t padic_valuation(uint64_t q, uint64_t n) {
    uint64_t v = 0;
    while (n % q == 0) { n /= q; ++v; }
    return v;
}

struct PrimeField {
    uint64_t p;

    explicit PrimeField(uint64_t p_) : p(p_) {
        if (!is_prime_u64(p)) throw std::invalid_argument("characteristic must be prime");
    }

    bool operator==(const PrimeField&) const = default;

    uint64_t reduce(int64_t a) const {
        int64_t r = a % static_cast<int64_t>(p);
        if (r < 0) r += static_cast<int64_t>(p);
        return static_cast<uint64_t>(r);
    }
    uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % p; }
    uint64_t sub(uint64_t a, uint64_t b) const { return (a + p - b % p) % p; }
    uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p - a; }
    uint64_t mul(uint64_t a, uint64_t b) const { return mulmod_u64(a, b, p); }
    uint64_t pow(uint64_t a, uint64_t e) const { return powmod_u64(a, e, p); }
    uint64_t inv(uint64_t a) const {
        if (a % p == 0) throw std::domain_error("division by zero in F_p");
        return powmod_u64(a % p, p - 2, p);
    }
};

} // namespace brauerkit
