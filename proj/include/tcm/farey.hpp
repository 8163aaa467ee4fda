#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "tcm/bigint.hpp"
#include "tcm/classical.hpp"
#include "tcm/words.hpp"

namespace tcm {

// Continued-fraction path encoding on the Farey tree, SL2(N) path
// matrices, and the Lyapunov-exponent estimators Lambda(xi).

struct FareyFraction {
    std::int64_t num, den; // nonnegative, coprime, not both zero (1/0 = infinity)

    FareyFraction(std::int64_t num_, std::int64_t den_);
};

// Mediant (p+q)/(r+s) of two Farey neighbors p/r, q/s. Inputs must
// satisfy |ps - qr| = 1 (NotNeighbors otherwise); for neighbors the
// result is automatically in lowest terms.
FareyFraction farey_mediant(const FareyFraction& a, const FareyFraction& b);

class ContinuedFraction {
  public:
    static constexpr std::size_t kNoPeriod = std::numeric_limits<std::size_t>::max();

    // digits[0] = a0 >= 0, later digits >= 1. period_start indexes the
    // first digit of the repeating tail (kNoPeriod for finite fractions).
    ContinuedFraction(std::vector<std::int64_t> digits, std::size_t period_start = kNoPeriod);

    // CLI syntax "[a0;a1,a2,...]" with "(...)" marking the periodic tail,
    // e.g. "[1;(1)]" for the golden ratio or "[0;2,(1,2)]".
    static ContinuedFraction parse(const std::string& text);

    bool is_periodic() const { return period_start_ != kNoPeriod; }
    std::size_t period_start() const { return period_start_; }
    const std::vector<std::int64_t>& digits() const { return digits_; }

    // i-th digit with the periodic tail unrolled; -1 when a finite
    // fraction has run out.
    std::int64_t digit_at(std::size_t i) const;

    std::string to_string() const;

  private:
    std::vector<std::int64_t> digits_;
    std::size_t period_start_;
};

// Word of the first n letters of R^{a0} L^{a1} R^{a2} ... . When a finite
// fraction runs out of digits, the expansion continues with the infinite
// tail of the next alternating letter (the tree path converging to the
// rational); strict = true restores the hard error instead.
PathWord cf_to_word(const ContinuedFraction& cf, std::size_t n, bool strict = false);

// 2x2 big-integer matrix; carrier for SL2(N) path products whose entries
// outgrow int64 after ~90 letters.
struct Mat2Big {
    BigInt a, b, c, d;

    static Mat2Big identity() { return {BigInt(1), BigInt(0), BigInt(0), BigInt(1)}; }
    BigInt det() const { return a * d - b * c; }
    BigInt trace() const { return a + d; }

    friend Mat2Big operator*(const Mat2Big& m, const Mat2Big& n);
    friend bool operator==(const Mat2Big& m, const Mat2Big& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }
};

// Product of L = [[1,0],[1,1]] and R = [[1,1],[0,1]] per letter, left to
// right; determinant 1 with nonnegative entries.
Mat2Big path_matrix(const PathWord& w);

// ln of the spectral radius of a det-1 path matrix, accurate to ~1e-14
// absolute even for entries with millions of bits.
double log_spectral_radius(const Mat2Big& m);

struct LambdaSeries {
    std::vector<double> values; // values[k-1] = estimate at truncation k
    double tail_estimate = 0;   // max over the last quarter of indices
};

// Lambda(xi) estimators along the path of a continued fraction / word:
// via spectral radii of path matrices, via Euclid-tree growth ln(c_k)/k,
// and via Markov-tree double-log growth ln(ln z_k)/k. Indices count
// children of the root: k = 1 is the first step. The Markov estimator
// inherits the classical depth cap (kMarkovDepthCap).
LambdaSeries lambda_via_matrices(const ContinuedFraction& cf, std::size_t n);
LambdaSeries lambda_via_matrices(const PathWord& w, std::size_t n);
LambdaSeries lambda_via_euclid(const PathWord& w, std::size_t n);
LambdaSeries lambda_via_markov(const PathWord& w, std::size_t n);

// PGL2-style reparametrizations used by the approximate invariance
// diagnostic: 1/xi and xi + 1.
ContinuedFraction cf_reciprocal(const ContinuedFraction& cf);
ContinuedFraction cf_plus_one(const ContinuedFraction& cf);

} // namespace tcm
