#include "tcm/ergodic.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "tcm/errors.hpp"
#include "tcm/kernels.hpp"

namespace tcm {

OrbitRecord orbit(const IntMatrix2& m, const TorusPointQ& start, std::size_t n, bool fold_flag) {
    if (n < 1) throw DomainError("orbit length must be >= 1");
    OrbitRecord rec;
    rec.mode = Mode::exact;
    rec.folded = fold_flag;
    rec.matrix = m;
    rec.length = n;
    rec.exact_points.reserve(n);
    TorusPointQ p = start;
    for (std::size_t i = 0; i < n; ++i) {
        rec.exact_points.push_back(p);
        if (i + 1 < n) p = torus_act(m, p);
    }
    if (fold_flag) {
        rec.exact_folded.reserve(n);
        for (const auto& t : rec.exact_points) rec.exact_folded.push_back(fold(t));
    }
    return rec;
}

OrbitRecord orbit(const IntMatrix2& m, const TorusPointD& start, std::size_t n, bool fold_flag) {
    if (n < 1) throw DomainError("orbit length must be >= 1");
    OrbitRecord rec;
    rec.mode = Mode::floating;
    rec.folded = fold_flag;
    rec.matrix = m;
    rec.length = n;
    rec.phi.resize(n);
    rec.psi.resize(n);
    TorusPointD p{reduce_mod2(start.phi), reduce_mod2(start.psi)};
    for (std::size_t i = 0; i < n; ++i) {
        rec.phi[i] = p.phi;
        rec.psi[i] = p.psi;
        if (i + 1 < n) p = torus_act(m, p);
    }
    if (fold_flag) {
        rec.u.resize(n);
        rec.v.resize(n);
        rec.w.resize(n);
        kernels::fold_batch(rec.phi.data(), rec.psi.data(), n,
                            rec.u.data(), rec.v.data(), rec.w.data());
    }
    return rec;
}

EstimatorReport benettin_lyapunov(const IntMatrix2& m, const TorusPointD& start,
                                  std::size_t n) {
    if (n < 1) throw DomainError("benettin needs n >= 1");
    // Fixed non-axis tangent vector; not an eigenvector of any matrix in
    // the test set.
    double vx = 0.8, vy = 0.6;
    TorusPointD p{reduce_mod2(start.phi), reduce_mod2(start.psi)};
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double nx = static_cast<double>(m.a) * vx + static_cast<double>(m.b) * vy;
        double ny = static_cast<double>(m.c) * vx + static_cast<double>(m.d) * vy;
        double norm = std::hypot(nx, ny);
        acc += std::log(norm);
        vx = nx / norm;
        vy = ny / norm;
        p = torus_act(m, p); // advance the base point alongside the cocycle
    }
    EstimatorReport rep;
    rep.estimate = acc / static_cast<double>(n);
    rep.n = n;
    if (m.is_hyperbolic()) {
        rep.reference = entropy(m);
        rep.rel_error = std::fabs(rep.estimate - *rep.reference) / std::fabs(*rep.reference);
    }
    return rep;
}

double birkhoff_average(const OrbitRecord& rec,
                        const std::function<double(double, double)>& observable) {
    if (rec.length == 0) throw DomainError("birkhoff average of an empty orbit");
    double acc = 0.0;
    if (rec.mode == Mode::floating) {
        for (std::size_t i = 0; i < rec.length; ++i) acc += observable(rec.phi[i], rec.psi[i]);
    } else {
        for (const auto& t : rec.exact_points) {
            acc += observable(t.phi.to_double(), t.psi.to_double());
        }
    }
    return acc / static_cast<double>(rec.length);
}

double box_discrepancy(const OrbitRecord& rec, int grid) {
    if (grid < 2) throw DomainError("discrepancy grid must be >= 2");
    if (rec.length == 0) throw DomainError("discrepancy of an empty orbit");
    std::vector<std::uint64_t> counts;
    counts.resize(static_cast<std::size_t>(grid) * static_cast<std::size_t>(grid));
    if (rec.mode == Mode::floating) {
        kernels::box_histogram(rec.phi.data(), rec.psi.data(), rec.length, grid,
                               counts.data());
    } else {
        std::vector<double> xs(rec.length), ys(rec.length);
        for (std::size_t i = 0; i < rec.length; ++i) {
            xs[i] = rec.exact_points[i].phi.to_double();
            ys[i] = rec.exact_points[i].psi.to_double();
        }
        kernels::box_histogram(xs.data(), ys.data(), rec.length, grid, counts.data());
    }
    const double uniform = 1.0 / (static_cast<double>(grid) * static_cast<double>(grid));
    const double total = static_cast<double>(rec.length);
    double worst = 0.0;
    for (std::uint64_t c : counts) {
        worst = std::fmax(worst, std::fabs(static_cast<double>(c) / total - uniform));
    }
    return worst;
}

std::size_t period_detect(const IntMatrix2& m, const TorusPointQ& start, std::size_t cap) {
    TorusPointQ p = start;
    for (std::size_t i = 1; i <= cap; ++i) {
        p = torus_act(m, p);
        if (p == start) return i;
    }
    throw CapExceeded("no return to start within the iteration cap");
}

namespace {

void write_rows(std::ostream& os, const OrbitRecord& rec, ExportFormat format) {
    char buf[512];
    const bool folded = rec.folded;
    if (format == ExportFormat::csv) {
        os << (folded ? "n,u,v,w\n" : "n,phi,psi\n");
    }
    for (std::size_t i = 0; i < rec.length; ++i) {
        if (rec.mode == Mode::exact) {
            if (folded) {
                const TropPoint3& t = rec.exact_folded[i];
                if (format == ExportFormat::csv) {
                    os << i << ',' << t.u.to_string() << ',' << t.v.to_string() << ','
                       << t.w.to_string() << '\n';
                } else {
                    os << "{\"n\":" << i << ",\"u\":\"" << t.u.to_string() << "\",\"v\":\""
                       << t.v.to_string() << "\",\"w\":\"" << t.w.to_string() << "\"}\n";
                }
            } else {
                const TorusPointQ& t = rec.exact_points[i];
                if (format == ExportFormat::csv) {
                    os << i << ',' << t.phi.to_string() << ',' << t.psi.to_string() << '\n';
                } else {
                    os << "{\"n\":" << i << ",\"phi\":\"" << t.phi.to_string()
                       << "\",\"psi\":\"" << t.psi.to_string() << "\"}\n";
                }
            }
        } else {
            if (folded) {
                if (format == ExportFormat::csv) {
                    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g\n", i, rec.u[i],
                                  rec.v[i], rec.w[i]);
                } else {
                    std::snprintf(buf, sizeof buf,
                                  "{\"n\":%zu,\"u\":%.17g,\"v\":%.17g,\"w\":%.17g}\n", i,
                                  rec.u[i], rec.v[i], rec.w[i]);
                }
                os << buf;
            } else {
                if (format == ExportFormat::csv) {
                    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", i, rec.phi[i],
                                  rec.psi[i]);
                } else {
                    std::snprintf(buf, sizeof buf, "{\"n\":%zu,\"phi\":%.17g,\"psi\":%.17g}\n",
                                  i, rec.phi[i], rec.psi[i]);
                }
                os << buf;
            }
        }
    }
}

} // namespace

void export_orbit(const OrbitRecord& rec, const std::string& path, ExportFormat format) {
    std::string tmp = path + ".tmp";
    std::error_code ec;
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw IoError("cannot open " + tmp + " for writing");
        write_rows(os, rec, format);
        os.flush();
        if (!os) {
            os.close();
            std::filesystem::remove(tmp, ec);
            throw IoError("write failed for " + tmp);
        }
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot rename " + tmp + " to " + path);
    }
}

TorusPointD named_start(const std::string& name) {
    // Fractional parts of a few quadratic irrationals; fixed so that
    // "generic" runs are reproducible bit for bit.
    if (name == "sqrt2") return {std::sqrt(2.0) - 1.0, std::sqrt(3.0) - 1.0};
    if (name == "sqrt3") return {std::sqrt(3.0) - 1.0, std::sqrt(5.0) - 2.0};
    if (name == "golden") return {(std::sqrt(5.0) + 1.0) / 2.0 - 1.0, std::sqrt(2.0) - 1.0};
    throw ParseError("unknown named start: " + name);
}

const std::vector<std::string>& named_start_list() {
    static const std::vector<std::string> names{"sqrt2", "sqrt3", "golden"};
    return names;
}

} // namespace tcm
