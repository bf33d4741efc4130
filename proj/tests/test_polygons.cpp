#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "frobstrat/polygons.hpp"
#include "oracles.hpp"

using namespace frobstrat;

namespace {

const LatticePolygon P1 = make_polygon({{0, 0}, {1, 1}, {3, 0}});
const LatticePolygon P2 = make_polygon({{0, 0}, {2, 1}, {3, 0}});
const LatticePolygon P3 = make_polygon({{0, 0}, {1, 1}, {2, 1}, {3, 0}});
const LatticePolygon P4 = make_polygon({{0, 0}, {1, 2}, {2, 2}, {3, 0}});

oracle::Points points(const LatticePolygon& pg) {
    oracle::Points out;
    for (const auto& v : pg.vertices()) out.emplace_back(v.rank, v.degree);
    return out;
}

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

TEST_CASE("make_polygon canonicalizes and validates") {
    CHECK(make_polygon({{0, 0}, {1, 0}, {3, 0}}).vertices() == std::vector<Vertex>{{0, 0}, {3, 0}});
    CHECK(make_polygon({{0, 0}, {1, 1}, {3, 0}}).vertices() == std::vector<Vertex>{{0, 0}, {1, 1}, {3, 0}});
    CHECK(make_polygon({{0, 0}, {1, 2}, {2, 4}, {3, 5}}).vertices() == std::vector<Vertex>{{0, 0}, {2, 4}, {3, 5}});

    CHECK(code_of([] { make_polygon({{0, 0}, {1, 0}, {2, 1}}); }) == ErrorCode::NotConvex);
    CHECK(code_of([] { make_polygon({{0, 1}, {2, 0}}); }) == ErrorCode::BadStart);
    CHECK(code_of([] { make_polygon({{0, 0}, {2, 1}, {2, 0}}); }) == ErrorCode::InvalidParameters);
    CHECK(code_of([] { make_polygon({{0, 0}}); }) == ErrorCode::InvalidParameters);
}

TEST_CASE("slopes and heights") {
    CHECK(slopes(P1) == std::vector<Rational>{Rational(1), Rational(-1, 2)});
    CHECK(slopes(P4) == std::vector<Rational>{Rational(2), Rational(0), Rational(-2)});
    CHECK(slopes(make_polygon({{0, 0}, {3, 0}})) == std::vector<Rational>{Rational(0)});
    CHECK(slope_spread(P4) == Rational(4));
    CHECK(slope_spread(make_polygon({{0, 0}, {3, 0}})) == Rational(0));
    CHECK(integer_heights(P1) == std::vector<Rational>{0, 1, Rational(1, 2), 0});
    CHECK(integer_heights(P2) == std::vector<Rational>{0, Rational(1, 2), 1, 0});
    CHECK(height_at(P1, Rational(3, 2)) == Rational(3, 4));

    std::ostringstream os;
    os << P3;
    CHECK(os.str() == "[(0,0),(1,1),(2,1),(3,0)]");
}

TEST_CASE("domination on the rank 3 polygons") {
    CHECK(dominates(P4, P3));
    CHECK(dominates(P3, P2));
    CHECK(dominates(P3, P1));
    CHECK(dominates(P4, P1));
    CHECK_FALSE(dominates(P1, P2));
    CHECK_FALSE(dominates(P2, P1));
    CHECK_FALSE(dominates(P3, P4));
    for (const auto& pg : {P1, P2, P3, P4}) CHECK(dominates(pg, pg));

    // the vertex-only test accepts both directions between P1 and P2
    CHECK(vertices_above(P1, P2));
    CHECK(vertices_above(P2, P1));
    CHECK_FALSE(vertices_above(P3, P4));

    const auto other = make_polygon({{0, 0}, {1, 1}, {2, 0}});
    CHECK(code_of([&] { (void)dominates(P1, other); }) == ErrorCode::EndpointMismatch);
    CHECK(code_of([&] { (void)vertices_above(P1, other); }) == ErrorCode::EndpointMismatch);
}

TEST_CASE("enumeration for (3,2,3,0) gives the four polygons") {
    const auto set = enumerate_frobenius_polygons(3, 2, 3, 0);
    REQUIRE(set.polygons.size() == 4);
    const std::set<std::vector<Vertex>> got{set.polygons[0].vertices(), set.polygons[1].vertices(),
                                            set.polygons[2].vertices(), set.polygons[3].vertices()};
    const std::set<std::vector<Vertex>> want{P1.vertices(), P2.vertices(), P3.vertices(), P4.vertices()};
    CHECK(got == want);

    CHECK(polygon_label(set, P1) == "P1");
    CHECK(polygon_label(set, P2) == "P2");
    CHECK(polygon_label(set, P3) == "P3");
    CHECK(polygon_label(set, P4) == "P4");
    CHECK(code_of([&] { (void)polygon_label(set, make_polygon({{0, 0}, {3, 0}})); }) == ErrorCode::InvalidParameters);

    const auto& table = rank3_char3_genus2_polygons();
    REQUIRE(table.size() == 4);
    CHECK(table[0].first == "P1");
    CHECK(table[0].second == P1);
    CHECK(table[3].second == P4);
}

TEST_CASE("enumeration for other parameters") {
    const auto rank2 = enumerate_frobenius_polygons(2, 2, 2, 0);
    REQUIRE(rank2.polygons.size() == 1);
    CHECK(rank2.polygons[0] == make_polygon({{0, 0}, {1, 1}, {2, 0}}));
    CHECK(polygon_label(rank2, rank2.polygons[0]) == "Q1");

    // degree 3 polygons are the degree 0 ones sheared by slope 3
    const auto base = enumerate_frobenius_polygons(3, 2, 3, 0).polygons;
    const auto sheared = enumerate_frobenius_polygons(3, 2, 3, 3);
    REQUIRE(sheared.polygons.size() == 4);
    for (const auto& pg : sheared.polygons) {
        CHECK(pg.degree() == 9);
        CHECK(std::ranges::find(base, shear(pg, -3)) != base.end());
    }
    CHECK(polygon_label(sheared, shear(P4, 3)) == "P4");

    // degree 1: pd/r = 1 is integral, still labelled P1..P4
    const auto d1 = enumerate_frobenius_polygons(3, 2, 3, 1);
    CHECK(d1.polygons.size() == 4);
    CHECK(polygon_label(d1, shear(P2, 1)) == "P2");

    CHECK(code_of([] { enumerate_frobenius_polygons(4, 2, 3, 0); }) == ErrorCode::InvalidParameters);
    CHECK(code_of([] { enumerate_frobenius_polygons(3, 1, 3, 0); }) == ErrorCode::InvalidParameters);
    CHECK(code_of([] { enumerate_frobenius_polygons(3, 2, 1, 0); }) == ErrorCode::InvalidParameters);
}

TEST_CASE("enumeration agrees with the brute-force oracle") {
    struct Case {
        std::int64_t p, g, r, d;
    };
    for (const Case c : {Case{2, 2, 2, 0}, Case{2, 2, 2, 1}, Case{2, 3, 2, 0}, Case{3, 2, 3, 0}, Case{3, 2, 3, 1},
                         Case{3, 2, 3, -2}, Case{3, 2, 2, 0}, Case{3, 3, 3, 0}, Case{5, 2, 3, 0}, Case{3, 2, 4, 0},
                         Case{2, 2, 4, 1}, Case{5, 2, 4, 1}}) {
        CAPTURE(c.p);
        CAPTURE(c.g);
        CAPTURE(c.r);
        CAPTURE(c.d);
        const auto set = enumerate_frobenius_polygons(c.p, c.g, c.r, c.d);
        std::set<oracle::Points> got;
        for (const auto& pg : set.polygons) got.insert(points(pg));
        CHECK(got.size() == set.polygons.size());
        CHECK(got == oracle::admissible_polygons(c.p, c.g, c.r, c.d));
    }
}

TEST_CASE("enumerated polygons satisfy the admissibility constraints") {
    for (std::int64_t p : {2, 3, 5})
        for (std::int64_t g : {2, 3})
            for (std::int64_t r : {2, 3, 4})
                for (std::int64_t d : {-1, 0, 1}) {
                    const auto set = enumerate_frobenius_polygons(p, g, r, d);
                    for (std::size_t i = 0; i < set.polygons.size(); ++i) {
                        const auto& pg = set.polygons[i];
                        CHECK(pg.segment_count() >= 2);
                        CHECK(pg.rank() == r);
                        CHECK(pg.degree() == p * d);
                        CHECK(slope_gaps_within(pg, g));
                        CHECK(slope_spread_within(pg, p, g));
                        CHECK(is_frobenius_admissible(pg, p, g));
                        // round trip through make_polygon leaves it unchanged
                        CHECK(make_polygon(pg.vertices()) == pg);
                        // strictly above the chord somewhere
                        bool above = false;
                        for (std::int64_t x = 1; x < r; ++x)
                            above = above || height_at(pg, Rational(x)) > Rational(p * d * x, r);
                        CHECK(above);
                        // sorted so that dominated polygons come first
                        for (std::size_t j = i + 1; j < set.polygons.size(); ++j) {
                            CHECK(integer_heights(pg) < integer_heights(set.polygons[j]));
                            CHECK_FALSE(dominates(pg, set.polygons[j]));
                        }
                    }
                }
}

TEST_CASE("dominates is a partial order matching the oracle") {
    const auto set = enumerate_frobenius_polygons(3, 2, 3, 0);
    const auto& ps = set.polygons;
    for (const auto& a : ps)
        for (const auto& b : ps) {
            CHECK(dominates(a, b) == oracle::dominates(points(a), points(b)));
            if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
            for (const auto& c : ps)
                if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
        }

    // larger set, oracle agreement plus antisymmetry and transitivity
    const auto big = enumerate_frobenius_polygons(5, 2, 4, 0).polygons;
    REQUIRE(big.size() > 4);
    for (const auto& a : big)
        for (const auto& b : big) {
            CHECK(dominates(a, b) == oracle::dominates(points(a), points(b)));
            if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
            for (const auto& c : big)
                if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
        }
}

TEST_CASE("greatest lower bound of P1 and P2 is P3") {
    // the polygons dominating both P1 and P2 are P3 and P4, and P3 is the least of them
    std::vector<LatticePolygon> above_both;
    for (const auto& pg : {P1, P2, P3, P4})
        if (dominates(pg, P1) && dominates(pg, P2)) above_both.push_back(pg);
    REQUIRE(above_both.size() == 2);
    for (const auto& pg : above_both) CHECK(dominates(pg, P3));
}

TEST_CASE("dual polygon") {
    CHECK(dual_polygon(P1) == P2);
    CHECK(dual_polygon(P2) == P1);
    CHECK(dual_polygon(P3) == P3);
    CHECK(dual_polygon(P4) == P4);
    const auto flat = make_polygon({{0, 0}, {3, 0}});
    CHECK(dual_polygon(flat) == flat);
    const auto tilted = make_polygon({{0, 0}, {1, 3}, {4, 5}});
    CHECK(dual_polygon(tilted).vertices() == std::vector<Vertex>{{0, 0}, {3, -2}, {4, -5}});

    // involution with endpoint (r, -D), on random valid polygons
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::int64_t> width(1, 3), drop(1, 4), start(-5, 5);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Vertex> pts{{0, 0}};
        std::int64_t slope = start(rng);
        for (int s = 0; s <= trial % 4; ++s) {
            const std::int64_t w = width(rng);
            pts.push_back({pts.back().rank + w, pts.back().degree + slope * w});
            slope -= drop(rng);
        }
        const auto pg = make_polygon(pts);
        const auto dual = dual_polygon(pg);
        CHECK(dual.rank() == pg.rank());
        CHECK(dual.degree() == -pg.degree());
        CHECK(dual_polygon(dual) == pg);
    }
}

TEST_CASE("canonical polygon") {
    CHECK(canonical_polygon(3, 2, 1, 0) == P4);
    CHECK(canonical_polygon(2, 2, 1, 0).vertices() == std::vector<Vertex>{{0, 0}, {1, 1}, {2, 0}});
    CHECK(canonical_polygon(3, 2, 2, 0).vertices() == std::vector<Vertex>{{0, 0}, {2, 4}, {4, 4}, {6, 0}});
    // endpoint (rp, pd)
    const auto c = canonical_polygon(3, 2, 2, 1);
    CHECK(c.rank() == 6);
    CHECK(c.degree() == 3);

    CHECK(is_canonical(P4, 3, 2));
    CHECK_FALSE(is_canonical(P3, 3, 2));
    CHECK_FALSE(is_canonical(P1, 3, 2));
    CHECK_FALSE(is_canonical(P2, 3, 2));
    CHECK_FALSE(is_canonical(make_polygon({{0, 0}, {3, 0}}), 3, 2));

    for (std::int64_t p : {2, 3, 5})
        for (std::int64_t g : {2, 3, 4})
            for (std::int64_t r : {1, 2, 3})
                for (std::int64_t d : {-2, 0, 1}) {
                    const auto pg = canonical_polygon(p, g, r, d);
                    CHECK(is_canonical(pg, p, g));
                    CHECK(pg.segment_count() == static_cast<std::size_t>(p));
                    const auto s = slopes(pg);
                    for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i - 1] - s[i] == Rational(2 * g - 2));
                    CHECK(slope_gaps_within(pg, g));
                    CHECK(dual_polygon(pg) == canonical_polygon(p, g, r, -d));
                }

    CHECK(code_of([] { canonical_polygon(4, 2, 1, 0); }) == ErrorCode::InvalidParameters);
    CHECK(code_of([] { canonical_polygon(3, 1, 1, 0); }) == ErrorCode::InvalidParameters);
    CHECK(code_of([] { canonical_polygon(3, 2, 0, 0); }) == ErrorCode::InvalidParameters);
}

TEST_CASE("canonical polygon is the top of its enumerated set") {
    for (std::int64_t p : {2, 3})
        for (std::int64_t g : {2, 3}) {
            const auto set = enumerate_frobenius_polygons(p, g, p, 0);
            const auto can = canonical_polygon(p, g, 1, 0);
            REQUIRE(std::ranges::find(set.polygons, can) != set.polygons.end());
            for (const auto& pg : set.polygons) {
                CHECK(dominates(can, pg));
                CHECK(is_canonical(pg, p, g) == (pg == can));
            }
        }
}
