#include "frobstrat/degrees.hpp"

#include "frobstrat/algebra.hpp"

namespace frobstrat {

namespace {

void check_curve(std::int64_t p, std::int64_t g) {
    if (!is_prime(p)) throw Error(ErrorCode::InvalidParameters, "p must be prime");
    if (g < 2) throw Error(ErrorCode::InvalidParameters, "genus must be at least 2");
}

}  // namespace

RankDegree pushforward_type(std::int64_t r, std::int64_t d, std::int64_t p, std::int64_t g) {
    check_curve(p, g);
    if (r < 1) throw Error(ErrorCode::InvalidParameters, "rank must be positive");
    return {r * p, d + r * (p - 1) * (g - 1)};
}

std::vector<RankDegree> filtration_degrees(std::int64_t p, std::int64_t g, std::int64_t degL) {
    check_curve(p, g);
    std::vector<RankDegree> out;
    for (std::int64_t l = 0; l < p; ++l) out.push_back({1, degL + l * (2 * g - 2)});
    return out;
}

std::int64_t filtration_step_degree(std::int64_t p, std::int64_t g, std::int64_t degL, std::int64_t l) {
    if (l < 0 || l > p) throw Error(ErrorCode::InvalidLevel, "filtration level out of range");
    std::int64_t sum = 0;
    const auto pieces = filtration_degrees(p, g, degL);
    for (std::int64_t m = l; m < p; ++m) sum += pieces[m].degree;
    return sum;
}

LatticePolygon pullback_pushforward_polygon(std::int64_t p, std::int64_t g, std::int64_t degL) {
    const auto pieces = filtration_degrees(p, g, degL);
    std::vector<Vertex> pts{{0, 0}};
    for (std::int64_t l = p - 1; l >= 0; --l)
        pts.push_back({pts.back().rank + 1, pts.back().degree + pieces[l].degree});
    return make_polygon(pts);
}

Rational sun_slope_bound(std::int64_t p, std::int64_t g, std::int64_t degL, std::int64_t rkG) {
    check_curve(p, g);
    if (rkG < 1 || rkG > p) throw Error(ErrorCode::InvalidParameters, "subsheaf rank must lie in [1, p]");
    const auto push = pushforward_type(1, degL, p, g);
    return Rational(push.degree, push.rank) - Rational(p - rkG, p) * (g - 1);
}

std::int64_t canonical_stratum_dim(std::int64_t r, std::int64_t g) {
    if (r < 1 || g < 2) throw Error(ErrorCode::InvalidParameters, "need r >= 1 and g >= 2");
    return r * r * (g - 1) + 1;
}

bool b1_splits(std::int64_t p, std::int64_t g) {
    if (!is_prime(p)) throw Error(ErrorCode::InvalidParameters, "p must be prime");
    if (p <= 2) throw Error(ErrorCode::UnsupportedCharacteristic, "splitting criterion needs p > 2");
    if (g < 2) throw Error(ErrorCode::InvalidParameters, "genus must be at least 2");
    return (g - 1) % p == 0;
}

}  // namespace frobstrat
