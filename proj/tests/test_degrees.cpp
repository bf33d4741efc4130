#include "doctest.h"
#include "frobstrat/degrees.hpp"

using namespace frobstrat;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InvalidParameters;
}

}  // namespace

TEST_CASE("pushforward type") {
    CHECK(pushforward_type(1, -1, 3, 2) == RankDegree{3, 1});
    CHECK(pushforward_type(1, -2, 3, 2) == RankDegree{3, 0});
    CHECK(pushforward_type(1, 0, 2, 2) == RankDegree{2, 1});
    CHECK(pushforward_type(2, 1, 5, 3) == RankDegree{10, 17});
    CHECK(code_of([] { pushforward_type(0, 0, 3, 2); }) == ErrorCode::InvalidParameters);
    CHECK(code_of([] { pushforward_type(1, 0, 4, 2); }) == ErrorCode::InvalidParameters);
}

TEST_CASE("filtration degrees") {
    const auto f = filtration_degrees(3, 2, -1);
    CHECK(f == std::vector<RankDegree>{{1, -1}, {1, 1}, {1, 3}});
    CHECK(filtration_degrees(2, 2, 0) == std::vector<RankDegree>{{1, 0}, {1, 2}});
    CHECK(filtration_step_degree(3, 2, -1, 2) == 3);
    CHECK(filtration_step_degree(3, 2, -1, 1) == 4);
    CHECK(filtration_step_degree(3, 2, -1, 0) == 3);
    CHECK(filtration_step_degree(3, 2, -1, 3) == 0);
    CHECK(code_of([] { filtration_step_degree(3, 2, -1, 4); }) == ErrorCode::InvalidLevel);

    // total degree is p * deg F_*L
    for (std::int64_t p : {2, 3, 5, 7})
        for (std::int64_t g : {2, 3, 4})
            for (std::int64_t degL = -3; degL <= 3; ++degL) {
                std::int64_t sum = 0;
                for (const auto& piece : filtration_degrees(p, g, degL)) {
                    CHECK(piece.rank == 1);
                    sum += piece.degree;
                }
                CHECK(sum == p * pushforward_type(1, degL, p, g).degree);
                CHECK(sum == p * degL + p * (p - 1) * (g - 1));
            }
}

TEST_CASE("pull-back of a pushforward has the canonical polygon") {
    for (std::int64_t p : {2, 3, 5})
        for (std::int64_t g : {2, 3, 4})
            for (std::int64_t degL = -3; degL <= 3; ++degL) {
                const auto push = pushforward_type(1, degL, p, g);
                const auto pg = pullback_pushforward_polygon(p, g, degL);
                CHECK(pg == canonical_polygon(p, g, 1, push.degree));
                CHECK(is_canonical(pg, p, g));
            }
}

TEST_CASE("slope bound for subsheaves of the pushforward") {
    CHECK(sun_slope_bound(3, 2, -1, 1) == Rational(-1, 3));
    CHECK(sun_slope_bound(3, 2, -1, 2) == Rational(0));
    CHECK(sun_slope_bound(3, 2, -1, 3) == Rational(1, 3));
    for (std::int64_t rk : {1, 2}) CHECK(sun_slope_bound(3, 2, -1, rk) <= Rational(0));
    // increasing in the rank, and equal to mu(F_*L) at full rank
    for (std::int64_t p : {2, 3, 5})
        for (std::int64_t g : {2, 3})
            for (std::int64_t degL = -2; degL <= 2; ++degL) {
                const auto push = pushforward_type(1, degL, p, g);
                CHECK(sun_slope_bound(p, g, degL, p) == Rational(push.degree, push.rank));
                for (std::int64_t rk = 1; rk < p; ++rk)
                    CHECK(sun_slope_bound(p, g, degL, rk) < sun_slope_bound(p, g, degL, rk + 1));
            }
    CHECK(code_of([] { sun_slope_bound(3, 2, -1, 0); }) == ErrorCode::InvalidParameters);
    CHECK(code_of([] { sun_slope_bound(3, 2, -1, 4); }) == ErrorCode::InvalidParameters);
}

TEST_CASE("canonical stratum dimension") {
    CHECK(canonical_stratum_dim(1, 2) == 2);
    CHECK(canonical_stratum_dim(2, 2) == 5);
    CHECK(canonical_stratum_dim(1, 3) == 3);
    CHECK(code_of([] { canonical_stratum_dim(0, 2); }) == ErrorCode::InvalidParameters);
    CHECK(code_of([] { canonical_stratum_dim(1, 1); }) == ErrorCode::InvalidParameters);
}

TEST_CASE("splitting criterion") {
    CHECK_FALSE(b1_splits(3, 2));
    CHECK(b1_splits(3, 4));
    CHECK(b1_splits(5, 6));
    CHECK_FALSE(b1_splits(5, 5));
    CHECK(code_of([] { b1_splits(2, 3); }) == ErrorCode::UnsupportedCharacteristic);
    CHECK(code_of([] { b1_splits(9, 3); }) == ErrorCode::InvalidParameters);
    CHECK(code_of([] { b1_splits(3, 1); }) == ErrorCode::InvalidParameters);
}
