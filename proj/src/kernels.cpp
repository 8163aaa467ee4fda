#include "tcm/kernels.hpp"

#include <cstring>

#include "kernels_detail.hpp"
#include "tcm/errors.hpp"

namespace tcm::kernels {

namespace {

Impl g_forced = Impl::Auto;

bool use_avx2() {
#if TCM_HAVE_AVX2_KERNELS
    if (g_forced == Impl::Scalar) return false;
    if (g_forced == Impl::Avx2) return true;
    return avx2_supported();
#else
    return false;
#endif
}

} // namespace

bool avx2_supported() {
#if TCM_HAVE_AVX2_KERNELS
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

void force_impl(Impl impl) {
    if (impl == Impl::Avx2 && !avx2_supported()) {
        throw DomainError("AVX2 kernels not available on this CPU");
    }
    g_forced = impl;
}

Impl active_impl() { return use_avx2() ? Impl::Avx2 : Impl::Scalar; }

std::string impl_name() { return use_avx2() ? "avx2" : "scalar"; }

void reduce_mod2_batch(double* xs, std::size_t n) {
#if TCM_HAVE_AVX2_KERNELS
    if (use_avx2()) {
        detail::reduce_mod2_avx2(xs, n);
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) xs[i] = detail::reduce_elem(xs[i]);
}

void fold_batch(const double* phi, const double* psi, std::size_t n,
                double* u, double* v, double* w) {
#if TCM_HAVE_AVX2_KERNELS
    if (use_avx2()) {
        detail::fold_batch_avx2(phi, psi, n, u, v, w);
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) {
        u[i] = detail::fold_elem(phi[i]);
        v[i] = detail::fold_elem(psi[i]);
        w[i] = detail::fold_elem(phi[i] + psi[i]);
    }
}

void box_histogram(const double* phi, const double* psi, std::size_t n,
                   int grid, std::uint64_t* counts) {
    if (grid < 2) throw DomainError("grid must be at least 2");
    std::memset(counts, 0, sizeof(std::uint64_t) * static_cast<std::size_t>(grid) *
                               static_cast<std::size_t>(grid));
#if TCM_HAVE_AVX2_KERNELS
    if (use_avx2()) {
        detail::box_histogram_avx2(phi, psi, n, grid, counts);
        return;
    }
#endif
    const double half_grid = 0.5 * static_cast<double>(grid);
    for (std::size_t i = 0; i < n; ++i) {
        int ix = detail::cell_index(phi[i], half_grid, grid);
        int iy = detail::cell_index(psi[i], half_grid, grid);
        ++counts[static_cast<std::size_t>(iy) * static_cast<std::size_t>(grid) +
                 static_cast<std::size_t>(ix)];
    }
}

std::uint64_t count_in_box(const double* phi, const double* psi, std::size_t n,
                           double x0, double x1, double y0, double y1) {
#if TCM_HAVE_AVX2_KERNELS
    if (use_avx2()) return detail::count_in_box_avx2(phi, psi, n, x0, x1, y0, y1);
#endif
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (phi[i] >= x0 && phi[i] < x1 && psi[i] >= y0 && psi[i] < y1) ++count;
    }
    return count;
}

double max_surface_residual(const double* u, const double* v, const double* w,
                            std::size_t n) {
#if TCM_HAVE_AVX2_KERNELS
    if (use_avx2()) return detail::max_surface_residual_avx2(u, v, w, n);
#endif
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        worst = std::fmax(worst, detail::surface_residual_elem(u[i], v[i], w[i]));
    }
    return worst;
}

} // namespace tcm::kernels
