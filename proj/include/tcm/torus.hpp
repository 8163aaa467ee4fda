#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tcm/rational.hpp"
#include "tcm/tropical.hpp"
#include "tcm/words.hpp"

namespace tcm {

// The triangle-wave parametrization of the tetrahedron surface, the
// 2-to-1 folding of the torus R^2/(2Z)^2 onto it, and the integer-matrix
// torus actions it semi-conjugates. Torus coordinates are canonical in
// [-1, 1); points come in an exact rational flavor (all conjugation and
// invariance proofs) and a double flavor (long ergodic orbits). The mode
// is the type -- there is no silent coercion between the two.

struct TorusPointQ {
    Rat phi, psi;

    TorusPointQ() = default;
    TorusPointQ(Rat phi_, Rat psi_) : phi(phi_.mod2()), psi(psi_.mod2()) {}

    TorusPointQ operator-() const { return TorusPointQ(-phi, -psi); }

    friend bool operator==(const TorusPointQ& a, const TorusPointQ& b) {
        return a.phi == b.phi && a.psi == b.psi;
    }
    friend bool operator!=(const TorusPointQ& a, const TorusPointQ& b) { return !(a == b); }
};

struct TorusPointD {
    double phi = 0, psi = 0;
};

// 2x2 integer matrix with determinant +-1 (checked at construction).
struct IntMatrix2 {
    std::int64_t a, b, c, d; // row-major [[a, b], [c, d]]

    IntMatrix2(std::int64_t a_, std::int64_t b_, std::int64_t c_, std::int64_t d_);

    std::int64_t det() const { return a * d - b * c; }
    std::int64_t trace() const { return a + d; }
    bool is_hyperbolic() const { return det() == 1 && (trace() > 2 || trace() < -2); }

    static IntMatrix2 identity() { return {1, 0, 0, 1}; }

    friend IntMatrix2 operator*(const IntMatrix2& m, const IntMatrix2& n);
    friend bool operator==(const IntMatrix2& m, const IntMatrix2& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }
};

// Even triangle wave of period 2: 1 - 2|x| on [-1, 1], reduced mod 2 first.
Rat cos_t(const Rat& x);
double cos_t(double x);

// Inverse on the principal branch, in the doubled convention u = 2 cos_T(phi):
// returns phi = (2 - u)/4 in [0, 1]. DomainError for |u| > 2.
Rat acos_t(const Rat& u);

// (2 cos_T phi, 2 cos_T psi, 2 cos_T (phi + psi)) -- always lands on Psi = 2.
TropPoint3 fold(const TorusPointQ& t);
std::array<double, 3> fold(const TorusPointD& t);

// Preimages {t, -t} of a surface point; a single element at the four
// 2-torsion points (the tetrahedron vertices). The representative whose
// psi-coordinate came out of the principal branch (psi >= 0) is first.
std::vector<TorusPointQ> unfold(const TropPoint3& p);

// Standard linear action (phi, psi) -> (a phi + b psi, c phi + d psi) mod 2.
TorusPointQ torus_act(const IntMatrix2& m, const TorusPointQ& t);
TorusPointD torus_act(const IntMatrix2& m, const TorusPointD& t);

// Canonical representative of x modulo 2 in [-1, 1).
double reduce_mod2(double x);

// The action a matrix induces on the tetrahedron surface through the fold.
TropPoint3 induced_map(const IntMatrix2& m, const TropPoint3& p);

// Matrix lift of a generator word: s -> [[1,0],[0,-1]], r -> [[0,1],[-1,-1]],
// composed in application order (first letter acts first), so that
// fold(torus_act(word_to_matrix(w), t)) == apply_word(fold(t), w).
IntMatrix2 word_to_matrix(const GeneratorWord& w);

// Max component-wise deviation between the two sides of the diagram above
// over a sample set; exact rational, and exactly zero when the
// semi-conjugation holds.
Rat semiconj_residual(const GeneratorWord& w, const std::vector<TorusPointQ>& samples);

// Maximum eigenvalue modulus. det +1: (|tr| + sqrt(tr^2 - 4))/2 when
// |tr| > 2, else 1. det -1: (|tr| + sqrt(tr^2 + 4))/2.
double spectral_radius(const IntMatrix2& m);

// ln(spectral_radius); defined for hyperbolic matrices only.
double entropy(const IntMatrix2& m);

} // namespace tcm
