#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

// Exact arithmetic in Q/Z.  Every element is the canonical reduced fraction
// a/n with 0 <= a < n and gcd(a, n) = 1 (zero is 0/1), so the order of a/n is
// simply n.  Denominators live in int64; overflow throws rather than wraps.

namespace brauerkit {

class QmodZ {
public:
    QmodZ() : num_(0), den_(1) {}

    static QmodZ of(int64_t a, int64_t n) {
        if (n == 0) throw std::domain_error("zero denominator in Q/Z");
        if (n < 0) { a = -a; n = -n; }
        a %= n;
        if (a < 0) a += n;
        int64_t g = std::gcd(a, n);
        if (g > 1) { a /= g; n /= g; }
        QmodZ x;
        x.num_ = a;
        x.den_ = a == 0 ? 1 : n;
        return x;
    }

    int64_t numerator() const { return num_; }
    int64_t denominator() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    uint64_t order() const { return static_cast<uint64_t>(den_); }

    QmodZ operator+(const QmodZ& o) const {
        int64_t g = std::gcd(den_, o.den_);
        int64_t lcm = mul_checked(den_ / g, o.den_);
        int64_t a = add_checked(mul_checked(num_, lcm / den_), mul_checked(o.num_, lcm / o.den_));
        return of(a, lcm);
    }

    QmodZ operator-() const { return of(-num_, den_); }
    QmodZ operator-(const QmodZ& o) const { return *this + (-o); }

    QmodZ scaled(int64_t k) const {
        int64_t kr = k % den_;
        return of(mul_checked(num_, kr), den_);
    }

    bool operator==(const QmodZ&) const = default;
    std::strong_ordering operator<=>(const QmodZ& o) const {
        // compare as rationals in [0, 1)
        __int128 lhs = static_cast<__int128>(num_) * o.den_;
        __int128 rhs = static_cast<__int128>(o.num_) * den_;
        return lhs < rhs ? std::strong_ordering::less
             : lhs > rhs ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
    }

    std::string to_string() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    static QmodZ parse(const std::string& s) {
        size_t slash = s.find('/');
        if (slash == std::string::npos) throw std::invalid_argument("malformed fraction: " + s);
        return of(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }

private:
    int64_t num_, den_;

    static int64_t mul_checked(int64_t a, int64_t b) {
        int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Q/Z denominator overflow");
        return r;
    }
    static int64_t add_checked(int64_t a, int64_t b) {
        int64_t r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Q/Z overflow");
        return r;
    }
};

} // namespace brauerkit
