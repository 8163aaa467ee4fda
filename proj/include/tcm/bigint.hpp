#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tcm {

// Arbitrary-precision signed integer on 64-bit limbs (little-endian,
// normalized: no trailing zero limbs, zero has an empty limb vector).
// Multiplication switches to Karatsuba above a limb threshold; division
// is Knuth algorithm D. This is enough for Markov-tree entries with a
// few million bits, which is where the depth-30 exact suite lives.
class BigInt {
  public:
    BigInt() = default;
    BigInt(std::int64_t v);
    static BigInt from_string(std::string_view decimal);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int signum() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // Truncated division (quotient rounds toward zero, remainder has the
    // dividend's sign). Throws DomainError on division by zero.
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);
    bool divisible_by(const BigInt& b) const;

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b);
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    // Number of bits in |x|; 0 for x = 0.
    std::size_t bit_length() const;

    // Natural log of a positive value. Uses the top 64 bits plus
    // bit_length * ln 2, so the relative error stays near double eps
    // independent of size. Throws DomainError for x <= 0.
    double log_e() const;

    std::string to_string() const;

    bool fits_int64() const;
    std::int64_t to_int64() const; // throws OverflowError when out of range

    static BigInt gcd(BigInt a, BigInt b);

  private:
    std::vector<std::uint64_t> limbs_;
    bool negative_ = false;

    void trim();
    static int cmp_mag(const std::vector<std::uint64_t>& a,
                       const std::vector<std::uint64_t>& b);
    static std::vector<std::uint64_t> add_mag(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b);
    static std::vector<std::uint64_t> sub_mag(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b);
    static std::vector<std::uint64_t> mul_mag(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b);
    static void divmod_mag(const std::vector<std::uint64_t>& a,
                           const std::vector<std::uint64_t>& b,
                           std::vector<std::uint64_t>& q,
                           std::vector<std::uint64_t>& r);
};

inline BigInt operator+(const BigInt& a, std::int64_t b) { return a + BigInt(b); }
inline BigInt operator*(std::int64_t a, const BigInt& b) { return BigInt(a) * b; }

} // namespace tcm
