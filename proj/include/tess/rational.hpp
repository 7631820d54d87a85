#ifndef TESS_RATIONAL_HPP
#define TESS_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tess {

// Exact rational arithmetic on 64-bit integers, always reduced, den > 0.
// Intermediate products go through 128-bit; anything that would not fit
// back into 64 bits throws instead of wrapping.
struct rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    rational() = default;
    rational(std::int64_t n) : num(n), den(1) {}
    rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    void assign(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n;
        __int128 b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("rational: overflow");
        num = static_cast<std::int64_t>(n);
        den = static_cast<std::int64_t>(d);
    }

    friend rational operator+(rational x, rational y) {
        rational r;
        r.assign((__int128)x.num * y.den + (__int128)y.num * x.den,
                 (__int128)x.den * y.den);
        return r;
    }
    friend rational operator-(rational x, rational y) {
        rational r;
        r.assign((__int128)x.num * y.den - (__int128)y.num * x.den,
                 (__int128)x.den * y.den);
        return r;
    }
    friend rational operator*(rational x, rational y) {
        rational r;
        r.assign((__int128)x.num * y.num, (__int128)x.den * y.den);
        return r;
    }
    friend rational operator/(rational x, rational y) {
        if (y.num == 0) throw std::domain_error("rational: divide by zero");
        rational r;
        r.assign((__int128)x.num * y.den, (__int128)x.den * y.num);
        return r;
    }
    rational operator-() const { rational r; r.num = -num; r.den = den; return r; }
    rational& operator+=(rational y) { *this = *this + y; return *this; }
    rational& operator-=(rational y) { *this = *this - y; return *this; }
    rational& operator*=(rational y) { *this = *this * y; return *this; }
    rational& operator/=(rational y) { *this = *this / y; return *this; }

    friend bool operator==(rational x, rational y) {
        return x.num == y.num && x.den == y.den;
    }
    friend bool operator!=(rational x, rational y) { return !(x == y); }
    friend bool operator<(rational x, rational y) {
        return (__int128)x.num * y.den < (__int128)y.num * x.den;
    }
    friend bool operator>(rational x, rational y) { return y < x; }
    friend bool operator<=(rational x, rational y) { return !(y < x); }
    friend bool operator>=(rational x, rational y) { return !(x < y); }

    int sign() const { return num < 0 ? -1 : num > 0 ? 1 : 0; }

    // canonical "p/q" text, "p" when q == 1
    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

inline rational rat(std::int64_t n, std::int64_t d = 1) { return rational(n, d); }

// explicit "p/q" text even for integers, the form reports and tools emit
inline std::string frac(rational r) {
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

} // namespace tess

#endif
