#include "tcm/bigint.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <limits>

#include "tcm/errors.hpp"

namespace tcm {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Limbs = std::vector<u64>;

constexpr std::size_t kKaratsubaThreshold = 24;

void trim_mag(Limbs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int cmp_mag_impl(const Limbs& a, const Limbs& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

Limbs add_mag_impl(const Limbs& a, const Limbs& b) {
    const Limbs& lo = a.size() < b.size() ? a : b;
    const Limbs& hi = a.size() < b.size() ? b : a;
    Limbs out(hi.size() + 1, 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        u128 s = static_cast<u128>(hi[i]) + (i < lo.size() ? lo[i] : 0) + carry;
        out[i] = static_cast<u64>(s);
        carry = static_cast<u64>(s >> 64);
    }
    out[hi.size()] = carry;
    trim_mag(out);
    return out;
}

// Precondition: |a| >= |b|.
Limbs sub_mag_impl(const Limbs& a, const Limbs& b) {
    assert(cmp_mag_impl(a, b) >= 0);
    Limbs out(a.size(), 0);
    u64 borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        u64 bi = i < b.size() ? b[i] : 0;
        u64 ai = a[i];
        u64 d = ai - bi;
        u64 nb = (ai < bi) ? 1 : 0;
        u64 d2 = d - borrow;
        if (d < borrow) nb = 1;
        out[i] = d2;
        borrow = nb;
    }
    assert(borrow == 0);
    trim_mag(out);
    return out;
}

Limbs mul_school(const Limbs& a, const Limbs& b) {
    if (a.empty() || b.empty()) return {};
    Limbs out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        u64 carry = 0;
        u128 ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            u128 cur = static_cast<u128>(out[i + j]) + ai * b[j] + carry;
            out[i + j] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
        }
        out[i + b.size()] += carry;
    }
    trim_mag(out);
    return out;
}

Limbs slice_mag(const Limbs& a, std::size_t from, std::size_t len) {
    if (from >= a.size()) return {};
    std::size_t end = std::min(a.size(), from + len);
    Limbs out(a.begin() + static_cast<std::ptrdiff_t>(from),
              a.begin() + static_cast<std::ptrdiff_t>(end));
    trim_mag(out);
    return out;
}

Limbs shift_words(const Limbs& a, std::size_t words) {
    if (a.empty()) return {};
    Limbs out(a.size() + words, 0);
    std::copy(a.begin(), a.end(), out.begin() + static_cast<std::ptrdiff_t>(words));
    return out;
}

Limbs mul_karatsuba(const Limbs& a, const Limbs& b) {
    if (a.size() < kKaratsubaThreshold || b.size() < kKaratsubaThreshold) {
        return mul_school(a, b);
    }
    std::size_t half = (std::max(a.size(), b.size()) + 1) / 2;
    Limbs a0 = slice_mag(a, 0, half), a1 = slice_mag(a, half, a.size());
    Limbs b0 = slice_mag(b, 0, half), b1 = slice_mag(b, half, b.size());
    Limbs z0 = mul_karatsuba(a0, b0);
    Limbs z2 = mul_karatsuba(a1, b1);
    Limbs z1 = mul_karatsuba(add_mag_impl(a0, a1), add_mag_impl(b0, b1));
    z1 = sub_mag_impl(z1, z0);
    z1 = sub_mag_impl(z1, z2);
    Limbs out = add_mag_impl(z0, shift_words(z1, half));
    out = add_mag_impl(out, shift_words(z2, 2 * half));
    return out;
}

Limbs shift_left_bits(const Limbs& a, unsigned bits) {
    assert(bits < 64);
    if (a.empty() || bits == 0) return a;
    Limbs out(a.size() + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] |= a[i] << bits;
        out[i + 1] = a[i] >> (64 - bits);
    }
    trim_mag(out);
    return out;
}

Limbs shift_right_bits(const Limbs& a, unsigned bits) {
    assert(bits < 64);
    if (a.empty() || bits == 0) return a;
    Limbs out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] >> bits;
        if (i + 1 < a.size()) out[i] |= a[i + 1] << (64 - bits);
    }
    trim_mag(out);
    return out;
}

// Knuth algorithm D. Quotient into q, remainder into r.
void divmod_mag_impl(const Limbs& a, const Limbs& b, Limbs& q, Limbs& r) {
    assert(!b.empty());
    if (cmp_mag_impl(a, b) < 0) {
        q.clear();
        r = a;
        return;
    }
    if (b.size() == 1) {
        q.assign(a.size(), 0);
        u64 d = b[0];
        u128 rem = 0;
        for (std::size_t i = a.size(); i-- > 0;) {
            u128 cur = (rem << 64) | a[i];
            q[i] = static_cast<u64>(cur / d);
            rem = cur % d;
        }
        trim_mag(q);
        r.clear();
        if (rem != 0) r.push_back(static_cast<u64>(rem));
        return;
    }

    const unsigned shift = static_cast<unsigned>(__builtin_clzll(b.back()));
    Limbs u = shift_left_bits(a, shift);
    Limbs v = shift_left_bits(b, shift);
    const std::size_t n = v.size();
    const std::size_t m = u.size() - n; // u.size() >= n because a >= b
    u.resize(u.size() + 1, 0);          // u[m + n] slot
    q.assign(m + 1, 0);

    const u64 vtop = v[n - 1];
    const u64 vsec = v[n - 2];
    for (std::size_t j = m + 1; j-- > 0;) {
        u128 num = (static_cast<u128>(u[j + n]) << 64) | u[j + n - 1];
        u128 qhat = num / vtop;
        u128 rhat = num % vtop;
        while (qhat >> 64 != 0 ||
               qhat * vsec > ((rhat << 64) | u[j + n - 2])) {
            --qhat;
            rhat += vtop;
            if (rhat >> 64 != 0) break;
        }
        // Multiply-subtract qhat * v from u[j .. j+n].
        u128 borrow = 0;
        u128 carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            u128 p = qhat * v[i] + carry;
            carry = p >> 64;
            u64 plo = static_cast<u64>(p);
            u64 ui = u[j + i];
            u64 d = ui - plo;
            u128 nb = (ui < plo) ? 1 : 0;
            u64 d2 = d - static_cast<u64>(borrow);
            if (d < static_cast<u64>(borrow)) nb += 1;
            u[j + i] = d2;
            borrow = nb;
        }
        u128 top = static_cast<u128>(u[j + n]) - carry - borrow;
        u[j + n] = static_cast<u64>(top);
        if (top >> 64 != 0) {
            // qhat was one too large: add back.
            --qhat;
            u64 c2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                u128 s = static_cast<u128>(u[j + i]) + v[i] + c2;
                u[j + i] = static_cast<u64>(s);
                c2 = static_cast<u64>(s >> 64);
            }
            u[j + n] += c2;
        }
        q[j] = static_cast<u64>(qhat);
    }
    trim_mag(q);
    u.resize(n);
    r = shift_right_bits(u, shift);
    trim_mag(r);
}

constexpr u64 kDecChunk = 10'000'000'000'000'000'000ull; // 10^19
constexpr int kDecChunkDigits = 19;

} // namespace

int BigInt::cmp_mag(const Limbs& a, const Limbs& b) { return cmp_mag_impl(a, b); }
Limbs BigInt::add_mag(const Limbs& a, const Limbs& b) { return add_mag_impl(a, b); }
Limbs BigInt::sub_mag(const Limbs& a, const Limbs& b) { return sub_mag_impl(a, b); }
Limbs BigInt::mul_mag(const Limbs& a, const Limbs& b) { return mul_karatsuba(a, b); }
void BigInt::divmod_mag(const Limbs& a, const Limbs& b, Limbs& q, Limbs& r) {
    divmod_mag_impl(a, b, q, r);
}

BigInt::BigInt(std::int64_t v) {
    if (v == 0) return;
    negative_ = v < 0;
    u64 mag = negative_ ? (~static_cast<u64>(v) + 1) : static_cast<u64>(v);
    limbs_.push_back(mag);
}

void BigInt::trim() {
    trim_mag(limbs_);
    if (limbs_.empty()) negative_ = false;
}

BigInt BigInt::from_string(std::string_view s) {
    BigInt out;
    bool neg = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size()) throw ParseError("empty integer literal");
    // 18-digit parse chunks keep both the chunk and its scale inside int64.
    constexpr int kParseDigits = 18;
    for (; i < s.size();) {
        u64 chunk = 0;
        int taken = 0;
        while (i < s.size() && taken < kParseDigits) {
            char c = s[i];
            if (c < '0' || c > '9') throw ParseError("bad digit in integer literal");
            chunk = chunk * 10 + static_cast<u64>(c - '0');
            ++i;
            ++taken;
        }
        u64 mult = 1;
        for (int k = 0; k < taken; ++k) mult *= 10;
        out = out * BigInt(static_cast<std::int64_t>(mult)) +
              BigInt(static_cast<std::int64_t>(chunk));
    }
    out.negative_ = neg && !out.is_zero();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    if (!out.is_zero()) out.negative_ = !out.negative_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    out.negative_ = false;
    return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    BigInt out;
    if (a.negative_ == b.negative_) {
        out.limbs_ = BigInt::add_mag(a.limbs_, b.limbs_);
        out.negative_ = a.negative_;
    } else {
        int c = BigInt::cmp_mag(a.limbs_, b.limbs_);
        if (c == 0) return BigInt();
        if (c > 0) {
            out.limbs_ = BigInt::sub_mag(a.limbs_, b.limbs_);
            out.negative_ = a.negative_;
        } else {
            out.limbs_ = BigInt::sub_mag(b.limbs_, a.limbs_);
            out.negative_ = b.negative_;
        }
    }
    out.trim();
    return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt out;
    out.limbs_ = BigInt::mul_mag(a.limbs_, b.limbs_);
    out.negative_ = !out.limbs_.empty() && (a.negative_ != b.negative_);
    return out;
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    BigInt q, r;
    divmod_mag(a.limbs_, b.limbs_, q.limbs_, r.limbs_);
    q.negative_ = !q.limbs_.empty() && (a.negative_ != b.negative_);
    r.negative_ = !r.limbs_.empty() && a.negative_;
    return {q, r};
}

bool BigInt::divisible_by(const BigInt& b) const {
    return divmod(*this, b).second.is_zero();
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.negative_ != b.negative_) return a.negative_;
    int c = BigInt::cmp_mag(a.limbs_, b.limbs_);
    return a.negative_ ? c > 0 : c < 0;
}

std::size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    return limbs_.size() * 64 - static_cast<std::size_t>(__builtin_clzll(limbs_.back()));
}

double BigInt::log_e() const {
    if (signum() <= 0) throw DomainError("log of non-positive value");
    std::size_t bits = bit_length();
    if (bits <= 63) return std::log(static_cast<double>(limbs_[0]));
    // Top 64 bits as an integer m with value = m * 2^(bits-64) * (1 + eps).
    std::size_t top = limbs_.size() - 1;
    unsigned lead = 64 - static_cast<unsigned>(bits - (limbs_.size() - 1) * 64);
    u64 m = limbs_[top];
    if (lead > 0) {
        m = (m << lead) | (limbs_[top - 1] >> (64 - lead));
    }
    constexpr double kLn2 = 0.6931471805599453094;
    double exp2 = static_cast<double>(bits) - 64.0;
    return std::log(static_cast<double>(m)) + exp2 * kLn2;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    Limbs cur = limbs_;
    std::string out;
    Limbs base{kDecChunk};
    while (!cur.empty()) {
        Limbs q, r;
        divmod_mag_impl(cur, base, q, r);
        u64 chunk = r.empty() ? 0 : r[0];
        char buf[24];
        if (q.empty()) {
            std::snprintf(buf, sizeof buf, "%llu", static_cast<unsigned long long>(chunk));
        } else {
            std::snprintf(buf, sizeof buf, "%019llu", static_cast<unsigned long long>(chunk));
        }
        out.insert(0, buf);
        cur = std::move(q);
    }
    if (negative_) out.insert(0, "-");
    return out;
}

bool BigInt::fits_int64() const {
    if (limbs_.size() > 1) return false;
    if (limbs_.empty()) return true;
    u64 m = limbs_[0];
    return negative_ ? m <= (1ull << 63) : m < (1ull << 63);
}

std::int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw OverflowError("BigInt does not fit in int64");
    if (limbs_.empty()) return 0;
    return negative_ ? -static_cast<std::int64_t>(limbs_[0] - 1) - 1
                     : static_cast<std::int64_t>(limbs_[0]);
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.negative_ = false;
    b.negative_ = false;
    while (!b.is_zero()) {
        BigInt r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

} // namespace tcm
