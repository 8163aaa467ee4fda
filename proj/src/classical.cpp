#include "tcm/classical.hpp"

#include <algorithm>
#include <cmath>

#include "tcm/errors.hpp"

namespace tcm {

namespace {

void require_positive(const BigInt& v, const char* what) {
    if (v.signum() <= 0) throw DomainError(std::string(what) + " must be positive");
}

} // namespace

MarkovTriple::MarkovTriple(BigInt x_, BigInt y_, BigInt z_)
    : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {
    require_positive(x, "Markov entry");
    require_positive(y, "Markov entry");
    require_positive(z, "Markov entry");
}

MarkovTriple MarkovTriple::sorted() const {
    BigInt v[3] = {x, y, z};
    std::sort(v, v + 3);
    return MarkovTriple(v[0], v[1], v[2]);
}

const BigInt& MarkovTriple::max_entry() const {
    const BigInt* m = &x;
    if (*m < y) m = &y;
    if (*m < z) m = &z;
    return *m;
}

EuclidTriple::EuclidTriple(BigInt a_, BigInt b_, BigInt c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    require_positive(a, "Euclid entry");
    require_positive(b, "Euclid entry");
    require_positive(c, "Euclid entry");
    BigInt v[3] = {a, b, c};
    std::sort(v, v + 3);
    if (v[0] + v[1] != v[2]) throw DomainError("Euclid triple must satisfy a + b = c");
    if (BigInt::gcd(v[0], v[1]) != BigInt(1)) throw DomainError("Euclid triple must be coprime");
}

EuclidTriple EuclidTriple::sorted() const {
    BigInt v[3] = {a, b, c};
    std::sort(v, v + 3);
    return EuclidTriple(v[0], v[1], v[2]);
}

const BigInt& EuclidTriple::max_entry() const {
    const BigInt* m = &a;
    if (*m < b) m = &b;
    if (*m < c) m = &c;
    return *m;
}

bool is_markov(const MarkovTriple& t) {
    return t.x * t.x + t.y * t.y + t.z * t.z == BigInt(3) * t.x * t.y * t.z;
}

MarkovTriple vieta_markov(const MarkovTriple& t, int slot) {
    const BigInt three(3);
    switch (slot) {
        case 1: return MarkovTriple(three * t.y * t.z - t.x, t.y, t.z);
        case 2: return MarkovTriple(t.x, three * t.x * t.z - t.y, t.z);
        case 3: return MarkovTriple(t.x, t.y, three * t.x * t.y - t.z);
        default: throw DomainError("vieta slot must be 1, 2 or 3");
    }
}

MarkovTriple vieta_ratio(const MarkovTriple& t, int slot) {
    auto replace = [](const BigInt& u, const BigInt& v, const BigInt& e) {
        auto [q, r] = BigInt::divmod(u * u + v * v, e);
        if (!r.is_zero()) throw NotDivisible("sum of squares not divisible; input off-equation");
        return q;
    };
    switch (slot) {
        case 1: return MarkovTriple(replace(t.y, t.z, t.x), t.y, t.z);
        case 2: return MarkovTriple(t.x, replace(t.x, t.z, t.y), t.z);
        case 3: return MarkovTriple(t.x, t.y, replace(t.x, t.y, t.z));
        default: throw DomainError("vieta slot must be 1, 2 or 3");
    }
}

namespace {

// Shared positional walker. The state is (hi, lo, med): med is the value
// at the current vertex, hi/lo the weights of its upper/lower Farey
// parents (the columns of the corresponding path matrix). L replaces the
// upper parent by the mediant, R the lower one. next(keep1, keep2, drop)
// computes the child value from the two kept entries and the dropped one.
template <class Emit, class Next>
void walk_tree(const PathWord& w, BigInt hi, BigInt lo, BigInt med, Emit&& emit,
               Next&& next) {
    emit(hi, lo, med);
    for (char c : w) {
        if (c == 'L') {
            BigInt child = next(med, lo, hi);
            hi = std::move(med);
            med = std::move(child);
        } else {
            BigInt child = next(hi, med, lo);
            lo = std::move(med);
            med = std::move(child);
        }
        emit(hi, lo, med);
    }
}

} // namespace

std::vector<MarkovTriple> markov_path(const PathWord& w, std::size_t max_depth) {
    if (w.size() > max_depth) {
        throw DepthExceeded("markov_path word exceeds the depth cap of " +
                            std::to_string(max_depth));
    }
    std::vector<MarkovTriple> out;
    out.reserve(w.size() + 1);
    walk_tree(
        w, BigInt(1), BigInt(1), BigInt(2),
        [&](const BigInt& a, const BigInt& b, const BigInt& m) {
            out.push_back(MarkovTriple(a, b, m).sorted());
        },
        [](const BigInt& keep1, const BigInt& keep2, const BigInt& drop) {
            return BigInt(3) * keep1 * keep2 - drop;
        });
    return out;
}

std::vector<EuclidTriple> euclid_path(const PathWord& w) {
    std::vector<EuclidTriple> out;
    out.reserve(w.size() + 1);
    walk_tree(
        w, BigInt(1), BigInt(1), BigInt(2),
        [&](const BigInt& a, const BigInt& b, const BigInt& m) {
            out.push_back(EuclidTriple(a, b, m).sorted());
        },
        [](const BigInt& keep1, const BigInt& keep2, const BigInt&) {
            return keep1 + keep2;
        });
    return out;
}

std::vector<double> loglog_growth(const std::vector<MarkovTriple>& triples) {
    std::vector<double> out;
    out.reserve(triples.size());
    for (std::size_t n = 1; n <= triples.size(); ++n) {
        const BigInt& z = triples[n - 1].max_entry();
        if (z < BigInt(3)) throw DomainError("loglog_growth needs max entries >= 3");
        out.push_back(std::log(z.log_e()) / static_cast<double>(n));
    }
    return out;
}

bool is_cayley(const RealTriple& t, double tol) {
    if (tol < 0) throw DomainError("tolerance must be nonnegative");
    double lhs = t.x * t.x + t.y * t.y + t.z * t.z - t.x * t.y * t.z - 4.0;
    return std::fabs(lhs) <= tol;
}

RealTriple cosh_param(double a, double b) {
    return {2.0 * std::cosh(a), 2.0 * std::cosh(b), 2.0 * std::cosh(a + b)};
}

RealTriple cos_param(double a, double b) {
    return {2.0 * std::cos(a), 2.0 * std::cos(b), 2.0 * std::cos(a + b)};
}

double gram_det(const RealTriple& t) {
    const double hx = t.x / 2, hy = t.y / 2, hz = t.z / 2;
    // det [[1, hx, hy], [hx, 1, hz], [hy, hz, 1]] by cofactor expansion.
    return 1.0 * (1.0 - hz * hz) - hx * (hx - hz * hy) + hy * (hx * hz - hy);
}

} // namespace tcm
