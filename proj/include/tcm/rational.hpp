#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "tcm/errors.hpp"

namespace tcm {

// Exact rational on int64 with 128-bit intermediates. Always stored in
// lowest terms with a positive denominator. The piecewise-linear maps in
// this library only ever add, subtract, double and compare, so values
// stay small; anything that escapes the representable range throws
// OverflowError instead of silently wrapping.
class Rat {
  public:
    constexpr Rat() = default;
    Rat(std::int64_t num) : p_(num) {}
    Rat(std::int64_t num, std::int64_t den) { assign(num, den); }

    static Rat parse(const std::string& text); // "p/q" or "p"

    std::int64_t num() const { return p_; }
    std::int64_t den() const { return q_; }
    bool is_zero() const { return p_ == 0; }
    int signum() const { return p_ == 0 ? 0 : (p_ < 0 ? -1 : 1); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return from_i128(static_cast<__int128>(a.p_) * b.q_ +
                             static_cast<__int128>(b.p_) * a.q_,
                         static_cast<__int128>(a.q_) * b.q_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return from_i128(static_cast<__int128>(a.p_) * b.p_,
                         static_cast<__int128>(a.q_) * b.q_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.p_ == 0) throw DomainError("rational division by zero");
        return from_i128(static_cast<__int128>(a.p_) * b.q_,
                         static_cast<__int128>(a.q_) * b.p_);
    }
    Rat operator-() const {
        Rat r;
        r.p_ = -p_;
        r.q_ = q_;
        return r;
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return static_cast<__int128>(a.p_) * b.q_ < static_cast<__int128>(b.p_) * a.q_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    Rat abs() const { return p_ < 0 ? -*this : *this; }

    // Representative congruent mod 2 lying in [-1, 1).
    Rat mod2() const {
        __int128 two_q = static_cast<__int128>(q_) * 2;
        __int128 t = static_cast<__int128>(p_) % two_q;
        if (t < 0) t += two_q;
        if (t >= q_) t -= two_q; // now in [-q, q)
        return from_i128(t, q_);
    }

    // floor(p/q) as an exact integer.
    std::int64_t floor() const {
        std::int64_t d = p_ / q_;
        if (p_ % q_ != 0 && p_ < 0) --d;
        return d;
    }

    double to_double() const {
        return static_cast<double>(p_) / static_cast<double>(q_);
    }

    std::string to_string() const {
        return std::to_string(p_) + "/" + std::to_string(q_);
    }

  private:
    std::int64_t p_ = 0;
    std::int64_t q_ = 1;

    void assign(std::int64_t num, std::int64_t den) {
        if (den == 0) throw DomainError("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        p_ = num;
        q_ = den;
    }

    static Rat from_i128(__int128 num, __int128 den) {
        if (den == 0) throw DomainError("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 a = num < 0 ? -num : num;
        __int128 b = den;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            num /= a;
            den /= a;
        }
        constexpr __int128 lo = -(static_cast<__int128>(1) << 63);
        constexpr __int128 hi = (static_cast<__int128>(1) << 63) - 1;
        if (num < lo || num > hi || den > hi) {
            throw OverflowError("rational out of int64 range");
        }
        Rat r;
        r.p_ = static_cast<std::int64_t>(num);
        r.q_ = static_cast<std::int64_t>(den);
        return r;
    }
};

inline Rat Rat::parse(const std::string& text) {
    auto parse_int = [](const std::string& s) {
        std::size_t pos = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad rational literal: " + s);
        }
        if (pos != s.size()) throw ParseError("bad rational literal: " + s);
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(parse_int(text));
    return Rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }
inline Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }

} // namespace tcm
