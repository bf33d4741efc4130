#include "frobstrat/strata.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace frobstrat {

// ---------------------------------------------------------------- QPolynomial

QPolynomial QPolynomial::monomial(std::size_t degree, std::int64_t coeff) {
    QPolynomial out;
    out.coeffs_.assign(degree + 1, 0);
    out.coeffs_[degree] = coeff;
    out.trim();
    return out;
}

std::int64_t QPolynomial::evaluate(std::int64_t q) const {
    std::int64_t acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

std::int64_t QPolynomial::degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

void QPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string to_string(const QPolynomial& poly) {
    const auto& c = poly.coeffs();
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        std::int64_t a = c[i];
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            a = a < 0 ? -a : a;
        }
        first = false;
        if (i == 0) {
            os << a;
            continue;
        }
        if (a == -1) os << "-";
        else if (a != 1) os << a << "*";
        os << "q";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

// ---------------------------------------------------------------- census

namespace {

struct Classified {
    LatticePolygon polygon;
    std::size_t top_index;
};

std::vector<Classified> classify_all(const LocalContext& ctx, const std::vector<FiberPoint>& points,
                                     std::int64_t g, std::int64_t degL, bool parallel) {
    const ColengthSolver solver(ctx);
    auto work = [&](std::size_t begin, std::size_t end) {
        std::vector<Classified> out;
        for (std::size_t k = begin; k < end; ++k)
            out.push_back({solver.fiber_polygon(points[k], g, degL).polygon, points[k].top_index()});
        return out;
    };
    if (!parallel) return work(0, points.size());

    const std::size_t threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    const std::size_t chunk = (points.size() + threads - 1) / threads;
    std::vector<std::future<std::vector<Classified>>> jobs;
    for (std::size_t begin = 0; begin < points.size(); begin += chunk)
        jobs.push_back(std::async(std::launch::async, work, begin, std::min(points.size(), begin + chunk)));
    std::vector<Classified> out;
    for (auto& job : jobs) {
        auto part = job.get();
        std::ranges::move(part, std::back_inserter(out));
    }
    return out;
}

}  // namespace

FiberCensus fiber_census(std::int64_t p, std::int64_t g, std::int64_t degL, std::optional<std::size_t> precision,
                         bool parallel) {
    const LocalContext ctx(p, precision);
    if (g < 2) throw Error(ErrorCode::InvalidParameters, "genus must be at least 2");

    const auto points = all_fiber_points(ctx.modulus());
    const auto classified = classify_all(ctx, points, g, degL, parallel);

    // group by polygon, remembering which top indices occur in each group
    std::vector<LatticePolygon> polygons;
    std::map<std::size_t, std::int64_t> counts;
    std::map<std::size_t, std::set<std::size_t>> tops;
    for (const auto& c : classified) {
        auto it = std::ranges::find(polygons, c.polygon);
        const std::size_t idx = static_cast<std::size_t>(it - polygons.begin());
        if (it == polygons.end()) polygons.push_back(c.polygon);
        ++counts[idx];
        tops[idx].insert(c.top_index);
    }

    std::vector<std::size_t> order(polygons.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::ranges::sort(order, [&](std::size_t a, std::size_t b) {
        return integer_heights(polygons[a]) < integer_heights(polygons[b]);
    });

    // labels from the admissible set of the same rank and degree, when present
    const LatticePolygon& any = polygons.front();
    std::optional<PolygonSet> admissible;
    if (any.degree() % p == 0) admissible = enumerate_frobenius_polygons(p, g, any.rank(), any.degree() / p);

    FiberCensus census{p, g, degL, !(p == 3 && g == 2 && degL == -1), static_cast<std::int64_t>(points.size()), {}};
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const std::size_t idx = order[pos];
        std::string id = "F" + std::to_string(pos + 1);
        if (admissible && std::ranges::find(admissible->polygons, polygons[idx]) != admissible->polygons.end())
            id = polygon_label(*admissible, polygons[idx]);

        QPolynomial closed;
        for (auto i : tops[idx]) closed += QPolynomial::monomial(i);
        if (closed.evaluate(p) != counts[idx])
            throw Error(ErrorCode::InvariantViolation, "census count disagrees with its closed form");
        census.classes.push_back({std::move(id), polygons[idx], counts[idx], closed, 0, {}});
    }

    for (auto& target : census.classes) {
        for (const auto& other : census.classes) {
            if (!dominates(other.polygon, target.polygon)) continue;
            target.closure_count += other.count;
            target.closure_closed_form += other.closed_form;
        }
    }

    std::int64_t sum = 0;
    for (const auto& c : census.classes) sum += c.count;
    if (sum != census.total) throw Error(ErrorCode::InvariantViolation, "census does not cover the fiber");
    return census;
}

// ---------------------------------------------------------------- table

namespace {

// Moduli stratum dimensions for (p,g,r,d) = (3,2,3,0) as published.
const std::map<std::string, std::int64_t>& published_moduli_dims() {
    static const std::map<std::string, std::int64_t> dims{{"P1", 5}, {"P2", 5}, {"P3", 4}, {"P4", 2}};
    return dims;
}

}  // namespace

std::vector<StratumReport> stratum_table(const CurveContext& ctx) {
    if (!(ctx.p == 3 && ctx.g == 2 && ctx.r == 3 && ctx.d == 0 && ctx.degL == -1))
        throw Error(ErrorCode::InvalidParameters,
                    "stratum table is only available for (p,g,r,d,degL) = (3,2,3,0,-1)");

    const auto set = enumerate_frobenius_polygons(ctx.p, ctx.g, ctx.r, ctx.d);
    const auto census = fiber_census(ctx.p, ctx.g, ctx.degL);
    const std::int64_t base_dim = 1 + ctx.g;  // X x Pic^(degL)

    std::vector<StratumReport> rows;
    for (const auto& pg : set.polygons) {
        StratumReport row{polygon_label(set, pg), pg, std::nullopt, std::nullopt, 0, "", ctx.p, 0, QPolynomial{}};
        const auto cls = std::ranges::find_if(census.classes, [&](const CensusClass& c) { return c.polygon == pg; });
        if (cls != census.classes.end()) {
            row.fiber_dim = cls->closed_form.degree();
            row.quot_dim = *row.fiber_dim + base_dim;
            row.count_at_q = cls->count;
            row.closed_form = cls->closed_form;
        }
        row.closure_note = "S(" + row.polygon_id + "+) is the closure of S(" + row.polygon_id + ")";
        rows.push_back(std::move(row));
    }
    std::ranges::sort(rows, {}, &StratumReport::polygon_id);

    // canonical polygon: pushforwards of line bundles, a copy of the Jacobian;
    // other polygons in the Quot fiber: injective on the surjective-adjoint locus
    for (auto& row : rows) {
        if (is_canonical(row.polygon, ctx.p, ctx.g))
            row.moduli_dim = canonical_stratum_dim(1, ctx.g);
        else if (row.quot_dim)
            row.moduli_dim = *row.quot_dim;
    }
    for (auto& row : rows) {
        if (row.quot_dim || is_canonical(row.polygon, ctx.p, ctx.g)) continue;
        const auto dual = dual_polygon(row.polygon);
        const auto partner = std::ranges::find_if(rows, [&](const StratumReport& r) { return r.polygon == dual; });
        if (partner == rows.end() || !partner->quot_dim)
            throw Error(ErrorCode::InvariantViolation, "no dual stratum for " + row.polygon_id);
        row.moduli_dim = partner->moduli_dim;
    }

    for (const auto& row : rows) {
        const auto& published = published_moduli_dims();
        const auto it = published.find(row.polygon_id);
        if (it == published.end() || it->second != row.moduli_dim)
            throw Error(ErrorCode::InvariantViolation, "moduli dimension of " + row.polygon_id +
                                                           " disagrees with the published table");
    }
    return rows;
}

}  // namespace frobstrat
