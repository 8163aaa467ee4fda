#include "tcm/torus.hpp"

#include <cmath>

#include "tcm/errors.hpp"

namespace tcm {

namespace {

std::int64_t checked_i64(__int128 v, const char* what) {
    constexpr __int128 lo = -(static_cast<__int128>(1) << 63);
    constexpr __int128 hi = (static_cast<__int128>(1) << 63) - 1;
    if (v < lo || v > hi) throw OverflowError(std::string(what) + " exceeds int64");
    return static_cast<std::int64_t>(v);
}

} // namespace

IntMatrix2::IntMatrix2(std::int64_t a_, std::int64_t b_, std::int64_t c_, std::int64_t d_)
    : a(a_), b(b_), c(c_), d(d_) {
    __int128 det128 = static_cast<__int128>(a) * d - static_cast<__int128>(b) * c;
    if (det128 != 1 && det128 != -1) {
        throw InvalidDeterminant("matrix determinant must be +1 or -1");
    }
}

IntMatrix2 operator*(const IntMatrix2& m, const IntMatrix2& n) {
    auto mul = [](std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t w) {
        return checked_i64(static_cast<__int128>(x) * y + static_cast<__int128>(z) * w,
                           "matrix product entry");
    };
    return {mul(m.a, n.a, m.b, n.c), mul(m.a, n.b, m.b, n.d),
            mul(m.c, n.a, m.d, n.c), mul(m.c, n.b, m.d, n.d)};
}

Rat cos_t(const Rat& x) {
    Rat r = x.mod2();
    return Rat(1) - Rat(2) * r.abs();
}

double cos_t(double x) {
    double r = reduce_mod2(x);
    return 1.0 - 2.0 * std::fabs(r);
}

Rat acos_t(const Rat& u) {
    if (u.abs() > Rat(2)) throw DomainError("acos_t argument must lie in [-2, 2]");
    return (Rat(2) - u) / Rat(4);
}

TropPoint3 fold(const TorusPointQ& t) {
    Rat two(2);
    return {two * cos_t(t.phi), two * cos_t(t.psi), two * cos_t(t.phi + t.psi)};
}

std::array<double, 3> fold(const TorusPointD& t) {
    return {2.0 * cos_t(t.phi), 2.0 * cos_t(t.psi), 2.0 * cos_t(t.phi + t.psi)};
}

std::vector<TorusPointQ> unfold(const TropPoint3& p) {
    if (!on_surface(p, Rat(2))) throw NotOnSurface("unfold input not on psi = 2");
    Rat phi0 = acos_t(p.u); // in [0, 1]
    Rat psi0 = acos_t(p.v);
    Rat two(2);
    TorusPointQ t(phi0, psi0);
    if (two * cos_t(t.phi + t.psi) != p.w) {
        t = TorusPointQ(phi0, -psi0);
        if (two * cos_t(t.phi + t.psi) != p.w) {
            throw Error("unfold: no triangle-wave preimage; surface point malformed");
        }
    }
    TorusPointQ mt = -t;
    if (mt == t) return {t};
    return {t, mt};
}

TorusPointQ torus_act(const IntMatrix2& m, const TorusPointQ& t) {
    Rat np = Rat(m.a) * t.phi + Rat(m.b) * t.psi;
    Rat nq = Rat(m.c) * t.phi + Rat(m.d) * t.psi;
    return TorusPointQ(np, nq);
}

double reduce_mod2(double x) {
    double y = x - 2.0 * std::floor((x + 1.0) * 0.5);
    if (y < -1.0) y += 2.0;
    if (y >= 1.0) y -= 2.0;
    return y;
}

TorusPointD torus_act(const IntMatrix2& m, const TorusPointD& t) {
    double np = static_cast<double>(m.a) * t.phi + static_cast<double>(m.b) * t.psi;
    double nq = static_cast<double>(m.c) * t.phi + static_cast<double>(m.d) * t.psi;
    return {reduce_mod2(np), reduce_mod2(nq)};
}

TropPoint3 induced_map(const IntMatrix2& m, const TropPoint3& p) {
    return fold(torus_act(m, unfold(p).front()));
}

IntMatrix2 word_to_matrix(const GeneratorWord& w) {
    const IntMatrix2 s{1, 0, 0, -1};
    const IntMatrix2 r{0, 1, -1, -1};
    IntMatrix2 m = IntMatrix2::identity();
    for (char g : w) m = (g == 's' ? s : r) * m;
    return m;
}

Rat semiconj_residual(const GeneratorWord& w, const std::vector<TorusPointQ>& samples) {
    IntMatrix2 m = word_to_matrix(w);
    Rat worst(0);
    for (const TorusPointQ& t : samples) {
        TropPoint3 via_torus = fold(torus_act(m, t));
        TropPoint3 via_surface = apply_word(fold(t), w);
        Rat dev = max((via_torus.u - via_surface.u).abs(),
                      max((via_torus.v - via_surface.v).abs(),
                          (via_torus.w - via_surface.w).abs()));
        worst = max(worst, dev);
    }
    return worst;
}

double spectral_radius(const IntMatrix2& m) {
    double tr = std::fabs(static_cast<double>(m.trace()));
    if (m.det() == 1) {
        if (tr <= 2.0) return 1.0;
        return (tr + std::sqrt(tr * tr - 4.0)) / 2.0;
    }
    return (tr + std::sqrt(tr * tr + 4.0)) / 2.0;
}

double entropy(const IntMatrix2& m) {
    if (!m.is_hyperbolic()) {
        throw NotHyperbolic("entropy is defined for hyperbolic matrices (det 1, |tr| > 2)");
    }
    return std::log(spectral_radius(m));
}

} // namespace tcm
