#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tcm/torus.hpp"

namespace tcm {

// Orbit generation on the torus (and folded to the tetrahedron surface),
// Lyapunov-exponent estimation, equidistribution diagnostics and exact
// periodicity detection.

enum class Mode { exact, floating };

struct OrbitRecord {
    Mode mode = Mode::floating;
    bool folded = false;
    IntMatrix2 matrix = IntMatrix2::identity();
    std::size_t length = 0;

    // exact mode
    std::vector<TorusPointQ> exact_points;
    std::vector<TropPoint3> exact_folded;

    // float mode, structure-of-arrays so the kernels can chew on it
    std::vector<double> phi, psi;
    std::vector<double> u, v, w;
};

struct EstimatorReport {
    double estimate = 0;
    std::size_t n = 0;
    std::optional<double> reference;
    std::optional<double> rel_error;
};

// n iterates of the matrix action starting at `start` (the start is
// point 0, so the record holds n points). With fold = true the folded
// coordinates are filled in alongside the torus ones.
OrbitRecord orbit(const IntMatrix2& m, const TorusPointQ& start, std::size_t n,
                  bool fold = false);
OrbitRecord orbit(const IntMatrix2& m, const TorusPointD& start, std::size_t n,
                  bool fold = false);

// Benettin cocycle estimate of the top Lyapunov exponent: push a fixed
// unit tangent vector through the matrix, renormalize every step, and
// average the log stretches. Reference value is entropy(m) when m is
// hyperbolic.
EstimatorReport benettin_lyapunov(const IntMatrix2& m, const TorusPointD& start,
                                  std::size_t n);

// Arithmetic mean of an observable over the torus points of an orbit.
double birkhoff_average(const OrbitRecord& rec,
                        const std::function<double(double, double)>& observable);

// Max over grid cells of |empirical frequency - 1/grid^2| on [-1,1)^2.
double box_discrepancy(const OrbitRecord& rec, int grid);

// Least n >= 1 with M^n(start) = start, by exact iteration. Rational
// starts with reduced common denominator q return within (2q)^2 steps;
// CapExceeded signals a cap below that bound.
std::size_t period_detect(const IntMatrix2& m, const TorusPointQ& start, std::size_t cap);

enum class ExportFormat { csv, jsonl };

// Write an orbit to disk (atomically: temp file + rename). CSV columns
// are n,phi,psi for torus records and n,u,v,w for folded ones; exact
// points print as "p/q".
void export_orbit(const OrbitRecord& rec, const std::string& path, ExportFormat format);

// Fixed double-precision stand-ins for irrational starts: "sqrt2",
// "sqrt3", "golden". Chosen constants, documented in the README.
TorusPointD named_start(const std::string& name);

// Every start name accepted by named_start, in the order the statistical
// suites use them.
const std::vector<std::string>& named_start_list();

} // namespace tcm
