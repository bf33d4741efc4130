#ifndef FROBSTRAT_DEGREES_HPP
#define FROBSTRAT_DEGREES_HPP

#include <cstdint>
#include <vector>

#include "frobstrat/polygons.hpp"

namespace frobstrat {

struct RankDegree {
    std::int64_t rank;
    std::int64_t degree;

    friend bool operator==(const RankDegree&, const RankDegree&) = default;
};

/* Type of F_*(E) for E of type (r, d): (r*p, d + r*(p-1)*(g-1)). */
RankDegree pushforward_type(std::int64_t r, std::int64_t d, std::int64_t p, std::int64_t g);

/*
 * Graded pieces of the canonical filtration of F^*F_*(L), deg L = degL:
 * the l-th piece is Omega^l (x) L, so (1, degL + l*(2g-2)) for l = 0..p-1.
 */
std::vector<RankDegree> filtration_degrees(std::int64_t p, std::int64_t g, std::int64_t degL);

/* Degree of the filtration step E_l = V_l, the sum of graded pieces l..p-1. */
std::int64_t filtration_step_degree(std::int64_t p, std::int64_t g, std::int64_t degL, std::int64_t l);

/* HN polygon of F^*F_*(L), assembled from the graded pieces in slope order. */
LatticePolygon pullback_pushforward_polygon(std::int64_t p, std::int64_t g, std::int64_t degL);

/*
 * Upper bound on mu(G) for a subsheaf G of rank rkG in F_*(L):
 * mu(F_*L) - ((p - rkG)/p)(g - 1). rkG = p gives mu(F_*L) itself.
 */
Rational sun_slope_bound(std::int64_t p, std::int64_t g, std::int64_t degL, std::int64_t rkG);

/* Dimension r^2(g-1)+1 of the stratum with canonical polygon in rank r*p. */
std::int64_t canonical_stratum_dim(std::int64_t r, std::int64_t g);

/* Whether F^*(B^1) splits as a sum of Omega^i: p | (g-1). Needs p > 2. */
bool b1_splits(std::int64_t p, std::int64_t g);

}  // namespace frobstrat

#endif
