#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>

// Internal: shared per-element definitions and the AVX2 entry points.
// The scalar helpers are inline here so the scalar kernels and the AVX2
// tail loops are guaranteed to round identically.

namespace tcm::kernels::detail {

inline double reduce_elem(double x) {
    double y = x - 2.0 * std::floor((x + 1.0) * 0.5);
    if (y < -1.0) y += 2.0;
    if (y >= 1.0) y -= 2.0;
    return y;
}

inline double fold_elem(double x) {
    double r = reduce_elem(x);
    return 2.0 * (1.0 - 2.0 * std::fabs(r));
}

inline int cell_index(double x, double half_grid, int grid) {
    double t = std::floor((x + 1.0) * half_grid);
    if (t < 0.0) t = 0.0;
    double cap = static_cast<double>(grid - 1);
    if (t > cap) t = cap;
    return static_cast<int>(t);
}

inline double surface_residual_elem(double u, double v, double w) {
    double m1 = -u + v + w;
    double m2 = u - v + w;
    double m3 = u + v - w;
    double m4 = -u - v - w;
    double p = std::fmax(std::fmax(m1, m2), std::fmax(m3, m4));
    return std::fabs(p - 2.0);
}

// AVX2 variants (defined in kernels_avx2.cpp, compiled with -mavx2).
#if defined(__x86_64__) || defined(__i386__)
#define TCM_HAVE_AVX2_KERNELS 1
void reduce_mod2_avx2(double* xs, std::size_t n);
void fold_batch_avx2(const double* phi, const double* psi, std::size_t n,
                     double* u, double* v, double* w);
void box_histogram_avx2(const double* phi, const double* psi, std::size_t n,
                        int grid, std::uint64_t* counts);
std::uint64_t count_in_box_avx2(const double* phi, const double* psi, std::size_t n,
                                double x0, double x1, double y0, double y1);
double max_surface_residual_avx2(const double* u, const double* v, const double* w,
                                 std::size_t n);
#else
#define TCM_HAVE_AVX2_KERNELS 0
#endif

} // namespace tcm::kernels::detail
