#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace tcm::kernels {

// Bulk float kernels for orbit post-processing: mod-2 canonicalization,
// torus -> tetrahedron folding, grid histograms and box counts. Each
// kernel has a scalar reference implementation and an AVX2 variant; the
// active one is picked at runtime from CPU capabilities and can be
// forced for equivalence testing. The AVX2 variants perform the exact
// same rounding sequence per element as the scalar code, so results are
// required (and tested) to be bit-identical.

enum class Impl { Auto, Scalar, Avx2 };

bool avx2_supported();

// Force a specific implementation (testing hook). Throws DomainError if
// the requested one is unavailable on this machine.
void force_impl(Impl impl);

// The implementation that will actually run.
Impl active_impl();
std::string impl_name();

// Canonicalize each value into [-1, 1) modulo 2, in place.
void reduce_mod2_batch(double* xs, std::size_t n);

// (phi, psi) -> (2 cos_T phi, 2 cos_T psi, 2 cos_T (phi + psi)).
void fold_batch(const double* phi, const double* psi, std::size_t n,
                double* u, double* v, double* w);

// Count points per cell of the grid x grid partition of [-1,1)^2.
// counts must hold grid*grid entries; layout is row-major in the psi
// index: counts[iy * grid + ix].
void box_histogram(const double* phi, const double* psi, std::size_t n,
                   int grid, std::uint64_t* counts);

// Number of points with x0 <= phi < x1 and y0 <= psi < y1.
std::uint64_t count_in_box(const double* phi, const double* psi, std::size_t n,
                           double x0, double x1, double y0, double y1);

// max over points of |max-form Psi(u,v,w) - 2|.
double max_surface_residual(const double* u, const double* v, const double* w,
                            std::size_t n);

} // namespace tcm::kernels
