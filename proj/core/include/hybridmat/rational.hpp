#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "hybridmat/errors.hpp"

namespace hybridmat {

// Exact rational scalar over 64-bit components. Intermediates are widened to
// 128 bits and narrowing is checked, so overflow raises instead of wrapping.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    // Accepts "5", "-5", "3/7"; verbatim what instance files carry.
    static Rational parse(std::string_view text);

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const { return Rational(unchecked(), -num_, den_); }

    Rational operator+(const Rational& o) const {
        return reduce_wide(static_cast<__int128>(num_) * o.den_ +
                               static_cast<__int128>(o.num_) * den_,
                           static_cast<__int128>(den_) * o.den_);
    }
    Rational operator-(const Rational& o) const { return *this + (-o); }
    Rational operator*(const Rational& o) const {
        return reduce_wide(static_cast<__int128>(num_) * o.num_,
                           static_cast<__int128>(den_) * o.den_);
    }
    Rational operator/(const Rational& o) const { return *this * o.reciprocal(); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    Rational reciprocal() const {
        if (num_ == 0) throw DivisionByZero("reciprocal of zero");
        return Rational(unchecked(), num_ < 0 ? -den_ : den_, num_ < 0 ? -num_ : num_);
    }

    // Integer power; negative exponents invert (DivisionByZero on zero base).
    Rational pow(long long e) const {
        Rational base = e < 0 ? reciprocal() : *this;
        unsigned long long k = e < 0 ? -static_cast<unsigned long long>(e) : static_cast<unsigned long long>(e);
        Rational acc(1);
        while (k > 0) {
            if (k & 1) acc *= base;
            base = (k >>= 1) ? base * base : base;
        }
        return acc;
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        __int128 lhs = static_cast<__int128>(num_) * o.den_;
        __int128 rhs = static_cast<__int128>(o.num_) * den_;
        return lhs < rhs ? std::strong_ordering::less
                         : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

private:
    struct unchecked {};
    Rational(unchecked, long long n, long long d) : num_(n), den_(d) {}

    static Rational reduce_wide(__int128 n, __int128 d) {
        if (d == 0) throw DivisionByZero("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        return Rational(unchecked(), narrow(n), narrow(d));
    }

    void normalize() {
        if (den_ == 0) throw DivisionByZero("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    static long long narrow(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational component out of range");
        return static_cast<long long>(v);
    }

    long long num_;
    long long den_;
};

inline Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) -> long long {
        if (s.empty()) throw ParseError("empty integer in rational literal");
        std::size_t pos = 0;
        bool neg = s[0] == '-';
        if (s[0] == '-' || s[0] == '+') pos = 1;
        if (pos == s.size()) throw ParseError("sign without digits in rational literal");
        long long v = 0;
        for (; pos < s.size(); ++pos) {
            if (s[pos] < '0' || s[pos] > '9')
                throw ParseError("bad character in rational literal: " + std::string(s));
            v = v * 10 + (s[pos] - '0');
        }
        return neg ? -v : v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

} // namespace hybridmat
