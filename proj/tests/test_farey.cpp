#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include "tcm/errors.hpp"
#include "tcm/farey.hpp"
#include "tcm/random.hpp"

using namespace tcm;

namespace {

const double kLnPhi = std::log((1.0 + std::sqrt(5.0)) / 2.0);

PathWord random_word(Xorshift64& rng, std::size_t len) {
    std::string s;
    for (std::size_t i = 0; i < len; ++i) s.push_back(rng.next() & 1 ? 'L' : 'R');
    return PathWord(s);
}

} // namespace

TEST_CASE("farey_mediant") {
    FareyFraction m = farey_mediant({0, 1}, {1, 1});
    CHECK(m.num == 1);
    CHECK(m.den == 2);
    m = farey_mediant({1, 2}, {1, 1});
    CHECK(m.num == 2);
    CHECK(m.den == 3);
    m = farey_mediant({1, 3}, {1, 2});
    CHECK(m.num == 2);
    CHECK(m.den == 5);
    CHECK_THROWS_AS(farey_mediant({1, 3}, {2, 3}), NotNeighbors);
    CHECK_THROWS_AS(FareyFraction(2, 4), DomainError);
    CHECK_THROWS_AS(FareyFraction(0, 0), DomainError);
    // infinity is a legal endpoint
    m = farey_mediant({1, 0}, {1, 1});
    CHECK(m.num == 2);
    CHECK(m.den == 1);

    // mediant of neighbors stays a neighbor of both inputs
    Xorshift64 rng(4);
    FareyFraction lo(0, 1), hi(1, 0);
    for (int step = 0; step < 40; ++step) {
        FareyFraction mid = farey_mediant(lo, hi);
        CHECK((static_cast<__int128>(lo.num) * mid.den -
               static_cast<__int128>(mid.num) * lo.den) == -1);
        CHECK((static_cast<__int128>(mid.num) * hi.den -
               static_cast<__int128>(hi.num) * mid.den) == -1);
        if (rng.next() & 1) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

TEST_CASE("continued fraction parse and print") {
    auto golden = ContinuedFraction::parse("[1;(1)]");
    CHECK(golden.is_periodic());
    CHECK(golden.digit_at(0) == 1);
    CHECK(golden.digit_at(100) == 1);
    CHECK(golden.to_string() == "[1;(1)]");

    auto two = ContinuedFraction::parse("[2]");
    CHECK_FALSE(two.is_periodic());
    CHECK(two.digit_at(0) == 2);
    CHECK(two.digit_at(1) == -1);

    auto zero = ContinuedFraction::parse("[0;]");
    CHECK(zero.digits().size() == 1);

    auto mixed = ContinuedFraction::parse("[0;2,(1,2)]");
    CHECK(mixed.digit_at(0) == 0);
    CHECK(mixed.digit_at(1) == 2);
    CHECK(mixed.digit_at(2) == 1);
    CHECK(mixed.digit_at(3) == 2);
    CHECK(mixed.digit_at(4) == 1); // periodic tail cycles
    CHECK(mixed.to_string() == "[0;2,(1,2)]");

    CHECK_THROWS_AS(ContinuedFraction::parse("1;1"), ParseError);
    CHECK_THROWS_AS(ContinuedFraction::parse("[1;0]"), DomainError);
    CHECK_THROWS_AS(ContinuedFraction::parse("[1;(2]"), ParseError);
    CHECK_THROWS_AS(ContinuedFraction::parse("[1;()]"), ParseError);
}

TEST_CASE("cf_to_word") {
    auto golden = ContinuedFraction::parse("[1;(1)]");
    CHECK(cf_to_word(golden, 6).str() == "RLRLRL");
    CHECK(cf_to_word(golden, 0).str() == "");

    auto two = ContinuedFraction::parse("[2]");
    CHECK(cf_to_word(two, 2).str() == "RR");
    // finite fraction continues along the converging tail...
    CHECK(cf_to_word(two, 4).str() == "RRLL");
    // ...unless strict mode restores the hard error
    CHECK_THROWS_AS(cf_to_word(two, 3, /*strict=*/true), InsufficientDigits);

    auto zero = ContinuedFraction::parse("[0;]");
    CHECK(cf_to_word(zero, 3).str() == "LLL");

    auto sqrt2 = ContinuedFraction::parse("[1;(2)]");
    CHECK(cf_to_word(sqrt2, 5).str() == "RLLRR");
}

TEST_CASE("path_matrix values") {
    CHECK(path_matrix(PathWord("")) == Mat2Big::identity());

    Mat2Big rl = path_matrix(PathWord("RL"));
    CHECK(rl.a == BigInt(2));
    CHECK(rl.b == BigInt(1));
    CHECK(rl.c == BigInt(1));
    CHECK(rl.d == BigInt(1));

    Mat2Big r3 = path_matrix(PathWord("RRR"));
    CHECK(r3.a == BigInt(1));
    CHECK(r3.b == BigInt(3));
    CHECK(r3.c == BigInt(0));
    CHECK(r3.d == BigInt(1));

    Xorshift64 rng(kDefaultSeed);
    for (int iter = 0; iter < 40; ++iter) {
        Mat2Big m = path_matrix(random_word(rng, rng.below(65)));
        CHECK(m.det() == BigInt(1));
        CHECK(m.a >= BigInt(0));
        CHECK(m.b >= BigInt(0));
        CHECK(m.c >= BigInt(0));
        CHECK(m.d >= BigInt(0));
    }
}

TEST_CASE("path_matrix columns are the Farey parents") {
    Xorshift64 rng(77);
    for (int iter = 0; iter < 30; ++iter) {
        PathWord w = random_word(rng, 1 + rng.below(40));
        // independent walk down the Stern-Brocot tree
        FareyFraction lo(0, 1), hi(1, 0);
        for (char c : w) {
            FareyFraction med = farey_mediant(lo, hi);
            if (c == 'L') {
                hi = med;
            } else {
                lo = med;
            }
        }
        Mat2Big m = path_matrix(w);
        CHECK(m.a.to_int64() == hi.num);
        CHECK(m.c.to_int64() == hi.den);
        CHECK(m.b.to_int64() == lo.num);
        CHECK(m.d.to_int64() == lo.den);
    }
}

TEST_CASE("log spectral radius of path matrices") {
    CHECK(log_spectral_radius(path_matrix(PathWord("R"))) == 0.0); // parabolic
    CHECK(log_spectral_radius(path_matrix(PathWord("RL"))) ==
          doctest::Approx(std::log((3.0 + std::sqrt(5.0)) / 2.0)).epsilon(1e-14));
    // (RL)^50: trace is huge; ln rho must still be ~2*50*ln(phi)
    std::string w;
    for (int i = 0; i < 50; ++i) w += "RL";
    CHECK(log_spectral_radius(path_matrix(PathWord(w))) ==
          doctest::Approx(100.0 * kLnPhi).epsilon(1e-13));
}

TEST_CASE("lambda via matrices on the golden path") {
    auto golden = ContinuedFraction::parse("[1;(1)]");
    auto series = lambda_via_matrices(golden, 200);
    REQUIRE(series.values.size() == 200);
    CHECK(series.values[0] == 0.0); // single R is parabolic
    for (std::size_t k = 2; k <= 200; k += 2) {
        CHECK(std::fabs(series.values[k - 1] - kLnPhi) <= 1e-12);
    }
    CHECK(series.tail_estimate == doctest::Approx(kLnPhi).epsilon(1e-10));

    auto one = ContinuedFraction::parse("[1]");
    CHECK(lambda_via_matrices(one, 1).values[0] == 0.0);
}

TEST_CASE("lambda via euclid") {
    auto golden = ContinuedFraction::parse("[1;(1)]");
    PathWord w = cf_to_word(golden, 200);
    auto series = lambda_via_euclid(w, 200);
    REQUIRE(series.values.size() == 200);
    CHECK(series.values[0] == doctest::Approx(std::log(3.0)).epsilon(1e-13));
    // c_10 = F_13 = 233
    CHECK(series.values[9] == doctest::Approx(std::log(233.0) / 10.0).epsilon(1e-13));
    // converges to ln(phi) within 1% by n = 200
    CHECK(std::fabs(series.values[199] - kLnPhi) / kLnPhi < 0.01);

    // the two estimators agree on the same path asymptotically
    auto mats = lambda_via_matrices(golden, 200);
    CHECK(std::fabs(series.values[199] - mats.values[199]) <= 0.01);

    // constant word: linear growth, estimator goes to zero
    std::string rs(60, 'R');
    auto linear = lambda_via_euclid(PathWord(rs), 60);
    CHECK(linear.values[59] == doctest::Approx(std::log(62.0) / 60.0).epsilon(1e-12));

    CHECK_THROWS_AS(lambda_via_euclid(PathWord("RL"), 3), DomainError);
}

TEST_CASE("lambda via markov") {
    auto golden = ContinuedFraction::parse("[1;(1)]");
    PathWord w = cf_to_word(golden, 30);
    auto series = lambda_via_markov(w, 5);
    REQUIRE(series.values.size() == 5);
    // independent oracle: exact small z values 5, 29, 433, 37666, 48928105
    CHECK(series.values[0] == doctest::Approx(std::log(std::log(5.0))).epsilon(1e-13));
    CHECK(series.values[1] == doctest::Approx(std::log(std::log(29.0)) / 2.0).epsilon(1e-13));
    CHECK(series.values[4] ==
          doctest::Approx(std::log(std::log(48928105.0)) / 5.0).epsilon(1e-13));

    CHECK_THROWS_AS(lambda_via_markov(w, 31), DepthExceeded);
    CHECK_THROWS_AS(lambda_via_markov(PathWord("RL"), 5), DomainError);
}

TEST_CASE("reparametrizations for the invariance diagnostic") {
    auto golden = ContinuedFraction::parse("[1;(1)]");
    CHECK(cf_reciprocal(golden).to_string() == "[0;1,(1)]");
    CHECK(cf_plus_one(golden).to_string() == "[2;(1)]");
    auto invphi = ContinuedFraction::parse("[0;(1)]");
    CHECK(cf_reciprocal(invphi).to_string() == "[1;(1)]");

    // Lambda is approximately PGL2-invariant at finite truncation.
    double base = lambda_via_matrices(golden, 200).tail_estimate;
    double recip = lambda_via_matrices(cf_reciprocal(golden), 200).tail_estimate;
    double shift = lambda_via_matrices(cf_plus_one(golden), 200).tail_estimate;
    CHECK(std::fabs(base - recip) <= 0.02);
    CHECK(std::fabs(base - shift) <= 0.02);
}

TEST_CASE("tail estimate is the max over the last quarter") {
    auto series = lambda_via_euclid(PathWord(std::string(40, 'R')), 40);
    double expect = 0.0;
    for (std::size_t k = 31; k <= 40; ++k) { // ceil(40/4) = 10 trailing indices
        expect = std::max(expect, series.values[k - 1]);
    }
    CHECK(series.tail_estimate == expect);
}
