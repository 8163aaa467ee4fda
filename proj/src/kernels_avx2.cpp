#include "kernels_detail.hpp"

#if TCM_HAVE_AVX2_KERNELS

#include <immintrin.h>

// AVX2 kernels. Every lane performs the same operation sequence as the
// scalar reference in kernels_detail.hpp, so outputs are bit-identical;
// the equivalence suite enforces that.

namespace tcm::kernels::detail {

namespace {

const __m256d kOne = _mm256_set1_pd(1.0);
const __m256d kTwo = _mm256_set1_pd(2.0);
const __m256d kHalf = _mm256_set1_pd(0.5);
const __m256d kAbsMask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7FFFFFFFFFFFFFFFll));

inline __m256d reduce_vec(__m256d x) {
    __m256d f = _mm256_floor_pd(_mm256_mul_pd(_mm256_add_pd(x, kOne), kHalf));
    __m256d y = _mm256_sub_pd(x, _mm256_mul_pd(kTwo, f));
    __m256d neg1 = _mm256_set1_pd(-1.0);
    __m256d lt = _mm256_cmp_pd(y, neg1, _CMP_LT_OQ);
    y = _mm256_blendv_pd(y, _mm256_add_pd(y, kTwo), lt);
    __m256d ge = _mm256_cmp_pd(y, kOne, _CMP_GE_OQ);
    y = _mm256_blendv_pd(y, _mm256_sub_pd(y, kTwo), ge);
    return y;
}

inline __m256d fold_vec(__m256d x) {
    __m256d r = reduce_vec(x);
    __m256d a = _mm256_and_pd(r, kAbsMask);
    return _mm256_mul_pd(kTwo, _mm256_sub_pd(kOne, _mm256_mul_pd(kTwo, a)));
}

} // namespace

void reduce_mod2_avx2(double* xs, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(xs + i, reduce_vec(_mm256_loadu_pd(xs + i)));
    }
    for (; i < n; ++i) xs[i] = reduce_elem(xs[i]);
}

void fold_batch_avx2(const double* phi, const double* psi, std::size_t n,
                     double* u, double* v, double* w) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d p = _mm256_loadu_pd(phi + i);
        __m256d q = _mm256_loadu_pd(psi + i);
        _mm256_storeu_pd(u + i, fold_vec(p));
        _mm256_storeu_pd(v + i, fold_vec(q));
        _mm256_storeu_pd(w + i, fold_vec(_mm256_add_pd(p, q)));
    }
    for (; i < n; ++i) {
        u[i] = fold_elem(phi[i]);
        v[i] = fold_elem(psi[i]);
        w[i] = fold_elem(phi[i] + psi[i]);
    }
}

void box_histogram_avx2(const double* phi, const double* psi, std::size_t n,
                        int grid, std::uint64_t* counts) {
    const double half_grid = 0.5 * static_cast<double>(grid);
    const __m256d hg = _mm256_set1_pd(half_grid);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d cap = _mm256_set1_pd(static_cast<double>(grid - 1));
    std::size_t i = 0;
    alignas(32) double ix[4], iy[4];
    for (; i + 4 <= n; i += 4) {
        __m256d tx = _mm256_floor_pd(_mm256_mul_pd(
            _mm256_add_pd(_mm256_loadu_pd(phi + i), kOne), hg));
        __m256d ty = _mm256_floor_pd(_mm256_mul_pd(
            _mm256_add_pd(_mm256_loadu_pd(psi + i), kOne), hg));
        tx = _mm256_min_pd(_mm256_max_pd(tx, zero), cap);
        ty = _mm256_min_pd(_mm256_max_pd(ty, zero), cap);
        _mm256_store_pd(ix, tx);
        _mm256_store_pd(iy, ty);
        for (int lane = 0; lane < 4; ++lane) {
            ++counts[static_cast<std::size_t>(iy[lane]) * static_cast<std::size_t>(grid) +
                     static_cast<std::size_t>(ix[lane])];
        }
    }
    for (; i < n; ++i) {
        int cx = cell_index(phi[i], half_grid, grid);
        int cy = cell_index(psi[i], half_grid, grid);
        ++counts[static_cast<std::size_t>(cy) * static_cast<std::size_t>(grid) +
                 static_cast<std::size_t>(cx)];
    }
}

std::uint64_t count_in_box_avx2(const double* phi, const double* psi, std::size_t n,
                                double x0, double x1, double y0, double y1) {
    const __m256d vx0 = _mm256_set1_pd(x0), vx1 = _mm256_set1_pd(x1);
    const __m256d vy0 = _mm256_set1_pd(y0), vy1 = _mm256_set1_pd(y1);
    std::uint64_t count = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d p = _mm256_loadu_pd(phi + i);
        __m256d q = _mm256_loadu_pd(psi + i);
        __m256d in = _mm256_and_pd(
            _mm256_and_pd(_mm256_cmp_pd(p, vx0, _CMP_GE_OQ), _mm256_cmp_pd(p, vx1, _CMP_LT_OQ)),
            _mm256_and_pd(_mm256_cmp_pd(q, vy0, _CMP_GE_OQ), _mm256_cmp_pd(q, vy1, _CMP_LT_OQ)));
        count += static_cast<unsigned>(__builtin_popcount(
            static_cast<unsigned>(_mm256_movemask_pd(in))));
    }
    for (; i < n; ++i) {
        if (phi[i] >= x0 && phi[i] < x1 && psi[i] >= y0 && psi[i] < y1) ++count;
    }
    return count;
}

double max_surface_residual_avx2(const double* u, const double* v, const double* w,
                                 std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d du = _mm256_loadu_pd(u + i);
        __m256d dv = _mm256_loadu_pd(v + i);
        __m256d dw = _mm256_loadu_pd(w + i);
        __m256d m1 = _mm256_add_pd(_mm256_add_pd(_mm256_sub_pd(_mm256_setzero_pd(), du), dv), dw);
        __m256d m2 = _mm256_add_pd(_mm256_sub_pd(du, dv), dw);
        __m256d m3 = _mm256_sub_pd(_mm256_add_pd(du, dv), dw);
        __m256d m4 = _mm256_sub_pd(_mm256_sub_pd(_mm256_sub_pd(_mm256_setzero_pd(), du), dv), dw);
        __m256d p = _mm256_max_pd(_mm256_max_pd(m1, m2), _mm256_max_pd(m3, m4));
        __m256d r = _mm256_and_pd(_mm256_sub_pd(p, kTwo), kAbsMask);
        acc = _mm256_max_pd(acc, r);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double worst = std::fmax(std::fmax(lanes[0], lanes[1]), std::fmax(lanes[2], lanes[3]));
    for (; i < n; ++i) {
        worst = std::fmax(worst, surface_residual_elem(u[i], v[i], w[i]));
    }
    return worst;
}

} // namespace tcm::kernels::detail

#endif // TCM_HAVE_AVX2_KERNELS
