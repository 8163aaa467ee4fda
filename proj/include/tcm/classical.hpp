#pragma once

#include <vector>

#include "tcm/bigint.hpp"
#include "tcm/words.hpp"

namespace tcm {

// Exact big-integer Markov and Euclid tree dynamics plus the smooth
// parametrizations of the Cayley cubic x^2 + y^2 + z^2 = xyz + 4.

struct MarkovTriple {
    BigInt x, y, z;

    MarkovTriple(BigInt x_, BigInt y_, BigInt z_);

    MarkovTriple sorted() const;
    const BigInt& max_entry() const;
};

struct EuclidTriple {
    BigInt a, b, c; // a + b = c, gcd(a, b) = 1

    EuclidTriple(BigInt a_, BigInt b_, BigInt c_);

    EuclidTriple sorted() const;
    const BigInt& max_entry() const;
};

struct RealTriple {
    double x = 0, y = 0, z = 0;
};

// x^2 + y^2 + z^2 == 3xyz, exactly.
bool is_markov(const MarkovTriple& t);

// Vieta move at one coordinate: e -> 3 * (product of the others) - e.
// slot is 1-based. Applying twice at the same slot is the identity.
MarkovTriple vieta_markov(const MarkovTriple& t, int slot);

// Division form of the same move: e -> (sum of squares of the others) / e.
// Division must be exact; NotDivisible signals an off-equation input.
MarkovTriple vieta_ratio(const MarkovTriple& t, int slot);

// Exact Markov paths get a depth cap: entries at depth 30 already run
// to ~10^6 decimal digits. Callers doing longer experiments raise it
// explicitly.
inline constexpr std::size_t kMarkovDepthCap = 30;

// Tree walks from the root (1,1,2). The walker keeps the Stern-Brocot
// positional state (upper-parent weight, lower-parent weight, mediant):
// appending L narrows the Farey interval toward its lower end (keeping
// the lower parent), appending R toward the upper, matching the L/R
// matrices of path_matrix so that the same word names the same tree
// path everywhere (the matrix columns are the two parents). Returned
// triples are sorted ascending; the root is element 0. markov_path
// throws DepthExceeded past max_depth; Euclid values grow only
// single-exponentially and need no cap.
std::vector<MarkovTriple> markov_path(const PathWord& w,
                                      std::size_t max_depth = kMarkovDepthCap);
std::vector<EuclidTriple> euclid_path(const PathWord& w);

// n-th value = ln(ln z_n) / n over the given sequence (1-based), where
// z_n is the n-th max entry. Requires every max entry >= 3.
std::vector<double> loglog_growth(const std::vector<MarkovTriple>& triples);

bool is_cayley(const RealTriple& t, double tol);

RealTriple cosh_param(double a, double b); // (2cosh a, 2cosh b, 2cosh(a+b))
RealTriple cos_param(double a, double b);  // (2cos a, 2cos b, 2cos(a+b))

// Determinant of the unit-diagonal Gram matrix with off-diagonal entries
// x/2, y/2, z/2; vanishes exactly on the Cayley surface.
double gram_det(const RealTriple& t);

} // namespace tcm
