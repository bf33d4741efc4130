#include "frobstrat/polygons.hpp"

#include <algorithm>
#include <functional>

#include "frobstrat/algebra.hpp"

namespace frobstrat {

namespace {

Rational segment_slope(const Vertex& a, const Vertex& b) {
    return Rational(b.degree - a.degree, b.rank - a.rank);
}

void require_same_endpoint(const LatticePolygon& a, const LatticePolygon& b) {
    if (a.vertices().back() != b.vertices().back())
        throw Error(ErrorCode::EndpointMismatch, "polygons end at different points");
}

std::int64_t floor_div(const Rational& q) {
    std::int64_t f = q.numerator() / q.denominator();
    if (q.numerator() % q.denominator() != 0 && q.numerator() < 0) --f;
    return f;
}

std::int64_t ceil_div(const Rational& q) { return -floor_div(-q); }

void check_curve_parameters(std::int64_t p, std::int64_t g) {
    if (!is_prime(p)) throw Error(ErrorCode::InvalidParameters, "p must be prime");
    if (g < 2) throw Error(ErrorCode::InvalidParameters, "genus must be at least 2");
}

}  // namespace

LatticePolygon make_polygon(std::span<const Vertex> points) {
    if (points.size() < 2) throw Error(ErrorCode::InvalidParameters, "a polygon needs at least two points");
    if (points.front() != Vertex{0, 0}) throw Error(ErrorCode::BadStart, "polygon must start at (0,0)");
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i].rank <= points[i - 1].rank)
            throw Error(ErrorCode::InvalidParameters, "ranks must be strictly increasing");

    std::vector<Vertex> kept{points.front()};
    for (std::size_t i = 1; i < points.size(); ++i) {
        // drop the previous vertex when it sits on the line through its neighbours
        if (kept.size() >= 2 &&
            segment_slope(kept[kept.size() - 2], kept.back()) == segment_slope(kept.back(), points[i]))
            kept.pop_back();
        kept.push_back(points[i]);
    }
    for (std::size_t i = 2; i < kept.size(); ++i)
        if (segment_slope(kept[i - 1], kept[i]) >= segment_slope(kept[i - 2], kept[i - 1]))
            throw Error(ErrorCode::NotConvex, "segment slopes must be strictly decreasing");
    return LatticePolygon(std::move(kept));
}

LatticePolygon make_polygon(std::initializer_list<Vertex> points) {
    return make_polygon(std::span<const Vertex>(points.begin(), points.size()));
}

std::ostream& operator<<(std::ostream& os, const LatticePolygon& pg) {
    os << "[";
    for (std::size_t i = 0; i < pg.vertices().size(); ++i) {
        if (i) os << ",";
        os << "(" << pg.vertices()[i].rank << "," << pg.vertices()[i].degree << ")";
    }
    return os << "]";
}

std::vector<Rational> slopes(const LatticePolygon& pg) {
    const auto& v = pg.vertices();
    std::vector<Rational> out;
    out.reserve(v.size() - 1);
    for (std::size_t i = 1; i < v.size(); ++i) out.push_back(segment_slope(v[i - 1], v[i]));
    return out;
}

Rational slope_spread(const LatticePolygon& pg) {
    const auto s = slopes(pg);
    return s.front() - s.back();
}

Rational height_at(const LatticePolygon& pg, Rational x) {
    const auto& v = pg.vertices();
    if (x < 0 || x > Rational(pg.rank())) throw Error(ErrorCode::InvalidParameters, "rank outside polygon");
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (x <= Rational(v[i].rank))
            return Rational(v[i - 1].degree) + segment_slope(v[i - 1], v[i]) * (x - Rational(v[i - 1].rank));
    }
    return Rational(pg.degree());
}

std::vector<Rational> integer_heights(const LatticePolygon& pg) {
    std::vector<Rational> out;
    for (std::int64_t x = 0; x <= pg.rank(); ++x) out.push_back(height_at(pg, Rational(x)));
    return out;
}

bool dominates(const LatticePolygon& a, const LatticePolygon& b) {
    require_same_endpoint(a, b);
    const auto ha = integer_heights(a), hb = integer_heights(b);
    for (std::size_t x = 0; x < ha.size(); ++x)
        if (ha[x] < hb[x]) return false;
    return true;
}

bool vertices_above(const LatticePolygon& a, const LatticePolygon& b) {
    require_same_endpoint(a, b);
    return std::ranges::all_of(a.vertices(), [&](const Vertex& v) {
        return Rational(v.degree) >= height_at(b, Rational(v.rank));
    });
}

bool slope_gaps_within(const LatticePolygon& pg, std::int64_t g) {
    const auto s = slopes(pg);
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] - s[i] > Rational(2 * g - 2)) return false;
    return true;
}

bool slope_spread_within(const LatticePolygon& pg, std::int64_t p, std::int64_t g) {
    return slope_spread(pg) <= Rational(std::min(pg.rank() - 1, p - 1) * (2 * g - 2));
}

bool is_frobenius_admissible(const LatticePolygon& pg, std::int64_t p, std::int64_t g) {
    return pg.segment_count() >= 2 && slope_gaps_within(pg, g) && slope_spread_within(pg, p, g);
}

PolygonSet enumerate_frobenius_polygons(std::int64_t p, std::int64_t g, std::int64_t r, std::int64_t d) {
    check_curve_parameters(p, g);
    if (r < 2) throw Error(ErrorCode::InvalidParameters, "rank must be at least 2");

    const std::int64_t total = p * d;
    const Rational mean(total, r);
    const Rational max_gap(2 * g - 2);
    const Rational max_spread(std::min(r - 1, p - 1) * (2 * g - 2));

    PolygonSet out{p, g, r, d, {}};

    // Segments are laid out left to right; every slope lies within max_spread
    // of the mean slope, which bounds each segment degree.
    std::vector<Vertex> path{{0, 0}};
    std::vector<Rational> path_slopes;
    std::function<void()> extend = [&]() {
        const Vertex here = path.back();
        for (std::int64_t len = 1; here.rank + len <= r; ++len) {
            const bool last = here.rank + len == r;
            if (last && path.size() == 1) continue;  // single segment is semistable
            const std::int64_t lo = ceil_div((mean - max_spread) * len);
            const std::int64_t hi = floor_div((mean + max_spread) * len);
            for (std::int64_t deg = lo; deg <= hi; ++deg) {
                if (last && here.degree + deg != total) continue;
                const Rational s(deg, len);
                if (!path_slopes.empty()) {
                    if (s >= path_slopes.back() || path_slopes.back() - s > max_gap) continue;
                    if (path_slopes.front() - s > max_spread) continue;
                }
                path.push_back({here.rank + len, here.degree + deg});
                path_slopes.push_back(s);
                if (last)
                    out.polygons.push_back(make_polygon(path));
                else
                    extend();
                path.pop_back();
                path_slopes.pop_back();
            }
        }
    };
    extend();

    std::ranges::sort(out.polygons, [](const LatticePolygon& a, const LatticePolygon& b) {
        return integer_heights(a) < integer_heights(b);
    });
    return out;
}

LatticePolygon dual_polygon(const LatticePolygon& pg) {
    const std::int64_t r = pg.rank(), D = pg.degree();
    std::vector<Vertex> pts;
    for (auto it = pg.vertices().rbegin(); it != pg.vertices().rend(); ++it)
        pts.push_back({r - it->rank, it->degree - D});
    return make_polygon(pts);
}

LatticePolygon shear(const LatticePolygon& pg, std::int64_t s) {
    std::vector<Vertex> pts;
    for (const auto& v : pg.vertices()) pts.push_back({v.rank, v.degree + s * v.rank});
    return make_polygon(pts);
}

LatticePolygon canonical_polygon(std::int64_t p, std::int64_t g, std::int64_t r, std::int64_t d) {
    check_curve_parameters(p, g);
    if (r < 1) throw Error(ErrorCode::InvalidParameters, "rank must be positive");
    std::vector<Vertex> pts;
    for (std::int64_t i = 0; i <= p; ++i) pts.push_back({i * r, d * i + r * i * (p - i) * (g - 1)});
    auto pg = make_polygon(pts);

    const auto s = slopes(pg);
    if (s.size() != static_cast<std::size_t>(p))
        throw Error(ErrorCode::InvariantViolation, "canonical polygon lost a vertex");
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] - s[i] != Rational(2 * g - 2))
            throw Error(ErrorCode::InvariantViolation, "canonical polygon slope gap is not 2g-2");
    return pg;
}

bool is_canonical(const LatticePolygon& pg, std::int64_t p, std::int64_t g) {
    return slope_spread(pg) == Rational((p - 1) * (2 * g - 2));
}

const std::vector<std::pair<std::string, LatticePolygon>>& rank3_char3_genus2_polygons() {
    static const std::vector<std::pair<std::string, LatticePolygon>> table{
        {"P1", make_polygon({{0, 0}, {1, 1}, {3, 0}})},
        {"P2", make_polygon({{0, 0}, {2, 1}, {3, 0}})},
        {"P3", make_polygon({{0, 0}, {1, 1}, {2, 1}, {3, 0}})},
        {"P4", make_polygon({{0, 0}, {1, 2}, {2, 2}, {3, 0}})},
    };
    return table;
}

std::string polygon_label(const PolygonSet& set, const LatticePolygon& pg) {
    const auto pos = std::ranges::find(set.polygons, pg);
    if (pos == set.polygons.end()) throw Error(ErrorCode::InvalidParameters, "polygon is not in the set");

    if (set.p == 3 && set.g == 2 && set.r == 3 && (set.p * set.d) % set.r == 0) {
        const auto base = shear(pg, -(set.p * set.d) / set.r);
        for (const auto& [label, known] : rank3_char3_genus2_polygons())
            if (known == base) return label;
    }
    return "Q" + std::to_string(pos - set.polygons.begin() + 1);
}

}  // namespace frobstrat
