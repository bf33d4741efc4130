#ifndef FROBSTRAT_POLYGONS_HPP
#define FROBSTRAT_POLYGONS_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "frobstrat/error.hpp"

namespace frobstrat {

using Rational = boost::rational<std::int64_t>;

/* A point (rank, degree) of the rank-degree plane. */
struct Vertex {
    std::int64_t rank;
    std::int64_t degree;

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/*
 * Integral convex polygon from (0,0) to (rank, degree), stored in canonical
 * form: ranks strictly increasing, segment slopes strictly decreasing, no
 * collinear interior vertex. Only make_polygon() builds one, so every
 * instance satisfies these invariants.
 */
class LatticePolygon {
   public:
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    std::size_t segment_count() const noexcept { return vertices_.size() - 1; }
    std::int64_t rank() const noexcept { return vertices_.back().rank; }
    std::int64_t degree() const noexcept { return vertices_.back().degree; }

    friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;

   private:
    friend LatticePolygon make_polygon(std::span<const Vertex> points);
    explicit LatticePolygon(std::vector<Vertex> v) : vertices_(std::move(v)) {}

    std::vector<Vertex> vertices_;
};

/* Throws BadStart, NotConvex, or InvalidParameters (fewer than two points,
 * ranks not strictly increasing). */
LatticePolygon make_polygon(std::span<const Vertex> points);
LatticePolygon make_polygon(std::initializer_list<Vertex> points);

std::ostream& operator<<(std::ostream& os, const LatticePolygon& pg);

/* Slopes of the successive segments, strictly decreasing. */
std::vector<Rational> slopes(const LatticePolygon& pg);

/* mu_max - mu_min; zero for a single segment. */
Rational slope_spread(const LatticePolygon& pg);

/* Height of the polygon over rank x, 0 <= x <= rank(). */
Rational height_at(const LatticePolygon& pg, Rational x);

/* Heights at the integer ranks 0..rank(). */
std::vector<Rational> integer_heights(const LatticePolygon& pg);

/*
 * Pointwise domination: a lies on or above b over the whole rank interval.
 * Both polygons have integral vertex ranks, so comparing at integer ranks is
 * exact. This is a genuine partial order. Throws EndpointMismatch.
 */
bool dominates(const LatticePolygon& a, const LatticePolygon& b);

/*
 * The literal vertex test "every vertex of a lies on or above b". Not
 * antisymmetric: two distinct polygons can each pass it against the other.
 * Kept for comparison with dominates(). Throws EndpointMismatch.
 */
bool vertices_above(const LatticePolygon& a, const LatticePolygon& b);

/* Adjacent slope drops are all <= 2g-2. */
bool slope_gaps_within(const LatticePolygon& pg, std::int64_t g);
/* mu_max - mu_min <= min(r-1, p-1)(2g-2), r = rank of the polygon. */
bool slope_spread_within(const LatticePolygon& pg, std::int64_t p, std::int64_t g);
/* At least two segments and both bounds above: an admissible HN polygon of a
 * Frobenius pull-back of a Frobenius-destabilized semistable bundle. */
bool is_frobenius_admissible(const LatticePolygon& pg, std::int64_t p, std::int64_t g);

struct PolygonSet {
    std::int64_t p;
    std::int64_t g;
    std::int64_t r;
    std::int64_t d;
    std::vector<LatticePolygon> polygons;
};

/*
 * All admissible polygons from (0,0) to (r, p*d), sorted ascending by the
 * lexicographic order on integer_heights(). If a dominates b then b sorts
 * first, so the order extends the domination order.
 */
PolygonSet enumerate_frobenius_polygons(std::int64_t p, std::int64_t g, std::int64_t r, std::int64_t d);

/* Polygon of the dual bundle: vertices (r - a, b - D), reversed. */
LatticePolygon dual_polygon(const LatticePolygon& pg);

/* Adds s*x to the height over x (tensoring by a line bundle of degree s). */
LatticePolygon shear(const LatticePolygon& pg, std::int64_t s);

/* Vertices (i*r, d*i + r*i*(p-i)*(g-1)) for 0 <= i <= p; ends at (r*p, p*d). */
LatticePolygon canonical_polygon(std::int64_t p, std::int64_t g, std::int64_t r, std::int64_t d);

/* Slope spread equals (p-1)(2g-2) exactly. */
bool is_canonical(const LatticePolygon& pg, std::int64_t p, std::int64_t g);

/* The four admissible polygons for (p,g,r,d) = (3,2,3,0), labelled P1..P4. */
const std::vector<std::pair<std::string, LatticePolygon>>& rank3_char3_genus2_polygons();

/*
 * Label of a member of `set`: P1..P4 when (p,g,r) = (3,2,3) and p*d is a
 * multiple of r (the polygons are then shears of the degree-0 ones),
 * otherwise Q<k> with k its 1-based position in the set. Throws
 * InvalidParameters when pg is not in the set.
 */
std::string polygon_label(const PolygonSet& set, const LatticePolygon& pg);

}  // namespace frobstrat

#endif
