#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "tcm/kernels.hpp"
#include "tcm/random.hpp"
#include "tcm/torus.hpp"

using namespace tcm;
namespace k = tcm::kernels;

namespace {

struct ImplGuard {
    ~ImplGuard() { k::force_impl(k::Impl::Auto); }
};

std::vector<double> random_values(Xorshift64& rng, std::size_t n, double scale) {
    std::vector<double> out(n);
    for (auto& x : out) x = (rng.unit() - 0.5) * scale;
    return out;
}

} // namespace

TEST_CASE("scalar reduce/fold agree with the torus module") {
    Xorshift64 rng(kDefaultSeed);
    ImplGuard guard;
    k::force_impl(k::Impl::Scalar);
    auto phi = random_values(rng, 1001, 50.0);
    auto psi = random_values(rng, 1001, 50.0);
    std::vector<double> u(1001), v(1001), w(1001);
    k::fold_batch(phi.data(), psi.data(), 1001, u.data(), v.data(), w.data());
    for (std::size_t i = 0; i < phi.size(); ++i) {
        auto folded = fold(TorusPointD{phi[i], psi[i]});
        CHECK(u[i] == folded[0]);
        CHECK(v[i] == folded[1]);
        CHECK(w[i] == folded[2]);
    }

    auto xs = phi;
    k::reduce_mod2_batch(xs.data(), xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) CHECK(xs[i] == reduce_mod2(phi[i]));
}

TEST_CASE("avx2 variants are bit-identical to scalar") {
    if (!k::avx2_supported()) {
        MESSAGE("AVX2 not available; dispatch equivalence not exercised here");
        return;
    }
    Xorshift64 rng(123);
    ImplGuard guard;
    // sizes straddling the vector width, plus awkward remainders
    for (std::size_t n : {0ull, 1ull, 3ull, 4ull, 5ull, 63ull, 64ull, 1000ull, 4097ull}) {
        auto phi = random_values(rng, n, 40.0);
        auto psi = random_values(rng, n, 40.0);
        // seed some exact boundary values
        if (n >= 4) {
            phi[0] = -1.0;
            phi[1] = 1.0;
            phi[2] = 0.0;
            phi[3] = -0.0;
        }

        k::force_impl(k::Impl::Scalar);
        auto r_s = phi;
        k::reduce_mod2_batch(r_s.data(), n);
        std::vector<double> us(n), vs(n), ws(n);
        k::fold_batch(phi.data(), psi.data(), n, us.data(), vs.data(), ws.data());
        std::vector<std::uint64_t> hist_s(16 * 16);
        k::box_histogram(phi.data(), psi.data(), n, 16, hist_s.data());
        auto count_s = k::count_in_box(phi.data(), psi.data(), n, -0.25, 0.5, 0.0, 1.0);
        double resid_s = k::max_surface_residual(us.data(), vs.data(), ws.data(), n);

        k::force_impl(k::Impl::Avx2);
        auto r_a = phi;
        k::reduce_mod2_batch(r_a.data(), n);
        std::vector<double> ua(n), va(n), wa(n);
        k::fold_batch(phi.data(), psi.data(), n, ua.data(), va.data(), wa.data());
        std::vector<std::uint64_t> hist_a(16 * 16);
        k::box_histogram(phi.data(), psi.data(), n, 16, hist_a.data());
        auto count_a = k::count_in_box(phi.data(), psi.data(), n, -0.25, 0.5, 0.0, 1.0);
        double resid_a = k::max_surface_residual(ua.data(), va.data(), wa.data(), n);

        CHECK(std::memcmp(r_s.data(), r_a.data(), n * sizeof(double)) == 0);
        CHECK(std::memcmp(us.data(), ua.data(), n * sizeof(double)) == 0);
        CHECK(std::memcmp(vs.data(), va.data(), n * sizeof(double)) == 0);
        CHECK(std::memcmp(ws.data(), wa.data(), n * sizeof(double)) == 0);
        CHECK(hist_s == hist_a);
        CHECK(count_s == count_a);
        CHECK(resid_s == resid_a);
    }
}

TEST_CASE("histogram counts and box counts") {
    ImplGuard guard;
    for (auto impl : {k::Impl::Scalar, k::Impl::Auto}) {
        k::force_impl(impl);
        // one point per cell of a 4x4 grid: perfectly uniform
        std::vector<double> phi, psi;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                phi.push_back(-1.0 + 0.5 * i + 0.25);
                psi.push_back(-1.0 + 0.5 * j + 0.25);
            }
        }
        std::vector<std::uint64_t> hist(16);
        k::box_histogram(phi.data(), psi.data(), phi.size(), 4, hist.data());
        for (auto c : hist) CHECK(c == 1);

        CHECK(k::count_in_box(phi.data(), psi.data(), phi.size(), 0.0, 1.0, 0.0, 1.0) == 4);
        CHECK(k::count_in_box(phi.data(), psi.data(), phi.size(), -1.0, 1.0, -1.0, 1.0) == 16);
        CHECK(k::count_in_box(phi.data(), psi.data(), phi.size(), 0.9, 1.0, 0.9, 1.0) == 0);
    }
}

TEST_CASE("grid cells cover the half-open square exactly") {
    ImplGuard guard;
    k::force_impl(k::Impl::Auto);
    // boundary values land in the cell to their right/top, and 1-epsilon
    // stays in the last cell
    std::vector<double> phi{-1.0, -0.5, 0.0, 0.5, std::nextafter(1.0, 0.0)};
    std::vector<double> psi{-1.0, -1.0, -1.0, -1.0, -1.0};
    std::vector<std::uint64_t> hist(4 * 4);
    k::box_histogram(phi.data(), psi.data(), phi.size(), 4, hist.data());
    CHECK(hist[0] == 1); // -1.0
    CHECK(hist[1] == 1); // -0.5 sits on a cell boundary: right cell
    CHECK(hist[2] == 1); // 0.0
    CHECK(hist[3] == 2); // 0.5 and 1-epsilon share the last cell
}

TEST_CASE("surface residual is zero on folded points and positive off them") {
    ImplGuard guard;
    k::force_impl(k::Impl::Auto);
    Xorshift64 rng(9);
    std::size_t n = 2000;
    auto phi = random_values(rng, n, 4.0);
    auto psi = random_values(rng, n, 4.0);
    std::vector<double> u(n), v(n), w(n);
    k::fold_batch(phi.data(), psi.data(), n, u.data(), v.data(), w.data());
    CHECK(k::max_surface_residual(u.data(), v.data(), w.data(), n) <= 1e-15);

    std::vector<double> one{1.0}, zero{0.0};
    CHECK(k::max_surface_residual(one.data(), zero.data(), zero.data(), 1) ==
          doctest::Approx(1.0));
}
