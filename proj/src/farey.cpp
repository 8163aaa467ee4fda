#include "tcm/farey.hpp"

#include <cmath>
#include <numeric>

#include "tcm/errors.hpp"

namespace tcm {

FareyFraction::FareyFraction(std::int64_t num_, std::int64_t den_) : num(num_), den(den_) {
    if (num < 0 || den < 0) throw DomainError("Farey fraction entries must be nonnegative");
    if (num == 0 && den == 0) throw DomainError("Farey fraction 0/0");
    if (std::gcd(num, den) > 1) throw DomainError("Farey fraction must be in lowest terms");
}

FareyFraction farey_mediant(const FareyFraction& a, const FareyFraction& b) {
    __int128 cross = static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den;
    if (cross != 1 && cross != -1) throw NotNeighbors("mediant requires Farey neighbors");
    return FareyFraction(a.num + b.num, a.den + b.den);
}

ContinuedFraction::ContinuedFraction(std::vector<std::int64_t> digits, std::size_t period_start)
    : digits_(std::move(digits)), period_start_(period_start) {
    if (digits_.empty()) throw DomainError("continued fraction needs at least a0");
    if (digits_[0] < 0) throw DomainError("a0 must be nonnegative");
    for (std::size_t i = 1; i < digits_.size(); ++i) {
        if (digits_[i] < 1) throw DomainError("continued-fraction digits past a0 must be >= 1");
    }
    if (period_start_ != kNoPeriod && period_start_ >= digits_.size()) {
        throw DomainError("periodic tail must be nonempty");
    }
    if (period_start_ == 0) throw DomainError("a0 cannot be part of the periodic tail");
}

ContinuedFraction ContinuedFraction::parse(const std::string& text) {
    if (text.size() < 3 || text.front() != '[' || text.back() != ']') {
        throw ParseError("continued fraction must look like [a0;a1,...]");
    }
    std::string body = text.substr(1, text.size() - 2);
    std::vector<std::int64_t> digits;
    std::size_t period_start = kNoPeriod;

    auto semi = body.find(';');
    std::string head = semi == std::string::npos ? body : body.substr(0, semi);
    auto parse_digit = [](const std::string& s) {
        std::size_t pos = 0;
        std::int64_t v;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad continued-fraction digit: " + s);
        }
        if (pos != s.size()) throw ParseError("bad continued-fraction digit: " + s);
        return v;
    };
    digits.push_back(parse_digit(head));

    if (semi != std::string::npos) {
        std::string tail = body.substr(semi + 1);
        std::string cur;
        bool in_period = false;
        bool period_seen = false;
        auto flush = [&]() {
            if (!cur.empty()) {
                digits.push_back(parse_digit(cur));
                cur.clear();
            }
        };
        for (char ch : tail) {
            if (ch == ',') {
                flush();
            } else if (ch == '(') {
                if (in_period || period_seen) throw ParseError("nested or repeated periodic group");
                flush();
                in_period = true;
                period_start = digits.size();
            } else if (ch == ')') {
                if (!in_period) throw ParseError("unmatched ) in continued fraction");
                flush();
                if (digits.size() == period_start) throw ParseError("empty periodic group");
                in_period = false;
                period_seen = true;
            } else if (ch == ' ') {
                // ignore
            } else {
                if (period_seen) throw ParseError("digits after the periodic tail");
                cur.push_back(ch);
            }
        }
        if (in_period) throw ParseError("unterminated periodic group");
        flush();
        if (period_seen && period_start == digits.size()) period_start = kNoPeriod;
    }
    return ContinuedFraction(std::move(digits), period_start);
}

std::int64_t ContinuedFraction::digit_at(std::size_t i) const {
    if (i < digits_.size()) return digits_[i];
    if (!is_periodic()) return -1;
    std::size_t len = digits_.size() - period_start_;
    return digits_[period_start_ + (i - period_start_) % len];
}

std::string ContinuedFraction::to_string() const {
    std::string out = "[" + std::to_string(digits_[0]) + ";";
    for (std::size_t i = 1; i < digits_.size(); ++i) {
        if (i > 1) out += ",";
        if (i == period_start_) out += "(";
        out += std::to_string(digits_[i]);
    }
    if (is_periodic()) out += ")";
    out += "]";
    return out;
}

PathWord cf_to_word(const ContinuedFraction& cf, std::size_t n, bool strict) {
    std::string letters;
    letters.reserve(n);
    std::size_t block = 0;
    while (letters.size() < n) {
        std::int64_t digit = cf.digit_at(block);
        char letter = (block % 2 == 0) ? 'R' : 'L';
        if (digit < 0) {
            if (strict) {
                throw InsufficientDigits("continued fraction too short for requested length");
            }
            // Finite fraction: continue along the path converging to it.
            letters.append(n - letters.size(), letter);
            break;
        }
        std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(digit),
                                                 n - letters.size());
        letters.append(take, letter);
        ++block;
    }
    return PathWord(letters);
}

Mat2Big operator*(const Mat2Big& m, const Mat2Big& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

Mat2Big path_matrix(const PathWord& w) {
    const Mat2Big L{BigInt(1), BigInt(0), BigInt(1), BigInt(1)};
    const Mat2Big R{BigInt(1), BigInt(1), BigInt(0), BigInt(1)};
    Mat2Big m = Mat2Big::identity();
    for (char c : w) m = m * (c == 'L' ? L : R);
    return m;
}

double log_spectral_radius(const Mat2Big& m) {
    BigInt tr = m.trace();
    BigInt atr = tr.abs();
    if (atr <= BigInt(2)) return 0.0; // elliptic or parabolic: radius 1
    if (atr.bit_length() <= 52) {
        double t = static_cast<double>(atr.to_int64());
        return std::log((t + std::sqrt(t * t - 4.0)) / 2.0);
    }
    // (|tr| + sqrt(tr^2 - 4))/2 = |tr| (1 + sqrt(1 - 4/tr^2))/2; for
    // |tr| >= 2^52 the bracket differs from 1 by < 2^-104.
    return atr.log_e();
}

namespace {

double tail_max(const std::vector<double>& values) {
    if (values.empty()) return 0.0;
    std::size_t from = values.size() - (values.size() + 3) / 4; // last quarter, rounded up
    double best = values[from];
    for (std::size_t i = from + 1; i < values.size(); ++i) best = std::max(best, values[i]);
    return best;
}

} // namespace

LambdaSeries lambda_via_matrices(const ContinuedFraction& cf, std::size_t n) {
    if (n < 1) throw DomainError("lambda estimators need n >= 1");
    return lambda_via_matrices(cf_to_word(cf, n), n);
}

LambdaSeries lambda_via_matrices(const PathWord& w, std::size_t n) {
    if (n < 1) throw DomainError("lambda estimators need n >= 1");
    if (w.size() < n) throw DomainError("word shorter than requested length");
    const Mat2Big L{BigInt(1), BigInt(0), BigInt(1), BigInt(1)};
    const Mat2Big R{BigInt(1), BigInt(1), BigInt(0), BigInt(1)};
    LambdaSeries out;
    out.values.reserve(n);
    Mat2Big m = Mat2Big::identity();
    for (std::size_t k = 1; k <= n; ++k) {
        m = m * (w[k - 1] == 'L' ? L : R);
        out.values.push_back(log_spectral_radius(m) / static_cast<double>(k));
    }
    out.tail_estimate = tail_max(out.values);
    return out;
}

LambdaSeries lambda_via_euclid(const PathWord& w, std::size_t n) {
    if (n < 1) throw DomainError("lambda estimators need n >= 1");
    if (w.size() < n) throw DomainError("word shorter than requested length");
    auto path = euclid_path(w.prefix(n));
    LambdaSeries out;
    out.values.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
        out.values.push_back(path[k].max_entry().log_e() / static_cast<double>(k));
    }
    out.tail_estimate = tail_max(out.values);
    return out;
}

LambdaSeries lambda_via_markov(const PathWord& w, std::size_t n) {
    if (n < 1) throw DomainError("lambda estimators need n >= 1");
    if (n > kMarkovDepthCap) throw DepthExceeded("lambda_via_markov depth cap is 30");
    if (w.size() < n) throw DomainError("word shorter than requested length");
    auto path = markov_path(w.prefix(n));
    std::vector<MarkovTriple> children(path.begin() + 1, path.end());
    LambdaSeries out;
    out.values = loglog_growth(children);
    out.tail_estimate = tail_max(out.values);
    return out;
}

ContinuedFraction cf_reciprocal(const ContinuedFraction& cf) {
    const auto& d = cf.digits();
    std::size_t ps = ContinuedFraction::kNoPeriod;
    std::vector<std::int64_t> out;
    if (d[0] == 0) {
        // 1/[0;a1,a2,...] = [a1;a2,...]
        if (d.size() < 2) throw DomainError("reciprocal of zero");
        out.assign(d.begin() + 1, d.end());
        if (cf.is_periodic()) {
            if (cf.period_start() >= 2) {
                ps = cf.period_start() - 1;
            } else {
                // [0;(b1..bk)]: keep b1 as a0 and unroll one period behind it.
                std::size_t len = d.size() - 1;
                out.insert(out.end(), d.begin() + 1, d.end());
                ps = out.size() - len;
            }
        }
    } else {
        out.push_back(0);
        out.insert(out.end(), d.begin(), d.end());
        if (cf.is_periodic()) ps = cf.period_start() + 1;
    }
    return ContinuedFraction(std::move(out), ps);
}

ContinuedFraction cf_plus_one(const ContinuedFraction& cf) {
    std::vector<std::int64_t> out = cf.digits();
    out[0] += 1;
    return ContinuedFraction(std::move(out), cf.period_start());
}

} // namespace tcm
