#pragma once

#include <vector>

#include "tcm/rational.hpp"
#include "tcm/words.hpp"

namespace tcm {

// Piecewise-linear (max-plus) Markov dynamics and the Cayley-Markov
// action on the tetrahedron surface Psi = c. Everything here is exact
// rational arithmetic: the maps only use max, +, - and doubling, so
// invariance checks are equality checks.

struct TropPoint3 {
    Rat u, v, w;

    friend bool operator==(const TropPoint3& a, const TropPoint3& b) {
        return a.u == b.u && a.v == b.v && a.w == b.w;
    }
    friend bool operator!=(const TropPoint3& a, const TropPoint3& b) { return !(a == b); }
};

// Tropicalized Vieta move (X, Y, Z) -> (X, Y, max(2X, 2Y) - Z); involutive.
TropPoint3 trop_markov_step(const TropPoint3& p);

// Invariant of trop_markov_step: max(X-Y-Z, Y-X-Z, Z-X-Y),
// equal to max(2X, 2Y, 2Z) - (X + Y + Z).
Rat phi(const TropPoint3& p);

// The piecewise-linear kernel of the tropical Vieta involution:
//   f(u,v) =  v  if  u >= |v|
//             u  if  v >= |u|
//            -v  if -u >= |v|
//            -u  if -v >= |u|
// (branches agree on overlaps). Closed form: min(max(u,-v), max(-u,v)).
Rat trop_f(const Rat& u, const Rat& v);

// sigma: (u,v,w) -> (u, v, -w + 2 f(u,v)); involutive, preserves psi.
TropPoint3 sigma(const TropPoint3& p);

// rho: (u,v,w) -> (v,w,u); order three, preserves psi.
TropPoint3 rho(const TropPoint3& p);

// Tetrahedron-surface invariant max(-u+v+w, u-v+w, u+v-w, -u-v-w).
Rat psi(const TropPoint3& p);

// psi(p) == c exactly; the level set is the surface of the regular
// tetrahedron with vertices (c,c,c), (c,-c,-c), (-c,c,-c), (-c,-c,c).
bool on_surface(const TropPoint3& p, const Rat& c);

// Apply a word over {s, r} left to right (first letter acts first).
TropPoint3 apply_word(const TropPoint3& p, const GeneratorWord& w);

enum class Sheet { plus, minus };

struct UvProjection {
    Rat u, v;
    Sheet branch;
};

// The 2-to-1 projection of the surface Psi = c onto the (u,v) square.
// branch = sign of w - f(u,v), with 0 mapped to plus; sigma flips it.
UvProjection project_uv(const TropPoint3& p, const Rat& c = Rat(2));

} // namespace tcm
