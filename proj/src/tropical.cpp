#include "tcm/tropical.hpp"

#include "tcm/errors.hpp"

namespace tcm {

TropPoint3 trop_markov_step(const TropPoint3& p) {
    Rat two(2);
    return {p.u, p.v, max(two * p.u, two * p.v) - p.w};
}

Rat phi(const TropPoint3& p) {
    return max(p.u - p.v - p.w, max(p.v - p.u - p.w, p.w - p.u - p.v));
}

Rat trop_f(const Rat& u, const Rat& v) {
    Rat au = u.abs(), av = v.abs();
    if (u >= av) return v;
    if (v >= au) return u;
    if (-u >= av) return -v;
    return -u; // -v >= |u| is the remaining case
}

TropPoint3 sigma(const TropPoint3& p) {
    return {p.u, p.v, -p.w + Rat(2) * trop_f(p.u, p.v)};
}

TropPoint3 rho(const TropPoint3& p) { return {p.v, p.w, p.u}; }

Rat psi(const TropPoint3& p) {
    Rat s = p.u + p.v + p.w;
    Rat two(2);
    // max of -u+v+w, u-v+w, u+v-w, -u-v-w written via the total sum.
    return max(max(s - two * p.u, s - two * p.v), max(s - two * p.w, -s));
}

bool on_surface(const TropPoint3& p, const Rat& c) {
    if (!(Rat(0) < c)) throw DomainError("surface level c must be positive");
    return psi(p) == c;
}

TropPoint3 apply_word(const TropPoint3& p, const GeneratorWord& w) {
    TropPoint3 q = p;
    for (char g : w) q = (g == 's') ? sigma(q) : rho(q);
    return q;
}

UvProjection project_uv(const TropPoint3& p, const Rat& c) {
    if (!on_surface(p, c)) throw NotOnSurface("project_uv input not on psi = c");
    Rat d = p.w - trop_f(p.u, p.v);
    return {p.u, p.v, d < Rat(0) ? Sheet::minus : Sheet::plus};
}

} // namespace tcm
