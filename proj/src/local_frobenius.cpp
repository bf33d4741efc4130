#include "frobstrat/local_frobenius.hpp"

#include <algorithm>
#include <ostream>

#include "frobstrat/degrees.hpp"

namespace frobstrat {

// ---------------------------------------------------------------- LocalContext

LocalContext::LocalContext(std::int64_t p, std::optional<std::size_t> precision)
    : p_(p), n_(precision.value_or(static_cast<std::size_t>(3 * p))) {
    if (n_ < static_cast<std::size_t>(2 * p))
        throw Error(ErrorCode::InvalidParameters,
                    "precision " + std::to_string(n_) + " is below 2p = " + std::to_string(2 * p));
}

// ---------------------------------------------------------------- PullbackElement

PullbackElement::PullbackElement(const LocalContext& ctx)
    : ctx_(ctx), c_(static_cast<std::size_t>(ctx.p()) * ctx.precision(), FieldElem::zero(ctx.modulus())) {}

PullbackElement PullbackElement::from_terms(const LocalContext& ctx, std::span<const Term> terms) {
    PullbackElement e(ctx);
    const std::int64_t p = ctx.p();
    for (const auto& term : terms) {
        if (term.left < 0 || term.right < 0)
            throw Error(ErrorCode::InvalidParameters, "negative exponent");
        const std::int64_t right = term.right + (term.left / p) * p;
        if (right >= static_cast<std::int64_t>(ctx.precision())) continue;
        e.at(term.left % p, right) += FieldElem(ctx.modulus(), term.coeff);
    }
    return e;
}

const FieldElem& PullbackElement::coeff(std::size_t left, std::size_t right) const {
    if (left >= static_cast<std::size_t>(ctx_.p()) || right >= ctx_.precision())
        throw Error(ErrorCode::InvalidParameters, "coefficient index out of range");
    return c_[left * ctx_.precision() + right];
}

std::vector<Term> PullbackElement::terms() const {
    std::vector<Term> out;
    for (std::size_t i = 0; i < static_cast<std::size_t>(ctx_.p()); ++i)
        for (std::size_t j = 0; j < ctx_.precision(); ++j)
            if (const auto& c = coeff(i, j); !c.is_zero())
                out.push_back({static_cast<std::int64_t>(i), static_cast<std::int64_t>(j), c.value()});
    return out;
}

bool PullbackElement::is_zero() const noexcept {
    return std::ranges::all_of(c_, [](const FieldElem& c) { return c.is_zero(); });
}

PullbackElement& PullbackElement::operator+=(const PullbackElement& rhs) {
    if (!(ctx_ == rhs.ctx_)) throw Error(ErrorCode::ModulusMismatch, "elements from different contexts");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += rhs.c_[k];
    return *this;
}

PullbackElement PullbackElement::scaled(const FieldElem& s) const {
    PullbackElement out = *this;
    for (auto& c : out.c_) c *= s;
    return out;
}

std::ostream& operator<<(std::ostream& os, const PullbackElement& e) {
    const auto ts = e.terms();
    if (ts.empty()) return os << "0";
    for (std::size_t k = 0; k < ts.size(); ++k) {
        if (k) os << " + ";
        os << ts[k].coeff << "*t^" << ts[k].left << "(x)t^" << ts[k].right;
    }
    return os;
}

namespace {

std::int64_t binomial_mod(std::int64_t n, std::int64_t k, PrimeModulus p) {
    // n < p, so every denominator factor is a unit
    FieldElem b = FieldElem::one(p);
    for (std::int64_t i = 1; i <= k; ++i) b = b * FieldElem(p, n - k + i) / FieldElem(p, i);
    return b.value();
}

}  // namespace

PullbackElement tau_power(const LocalContext& ctx, std::int64_t m) {
    const std::int64_t p = ctx.p();
    if (m < 0 || m > p - 1) throw Error(ErrorCode::InvalidLevel, "tau power must lie in [0, p-1]");
    // (t(x)1 - 1(x)t)^m = sum_k C(m,k) (-1)^k t^(m-k) (x) t^k
    std::vector<Term> terms;
    for (std::int64_t k = 0; k <= m; ++k)
        terms.push_back({m - k, k, (k % 2 ? -1 : 1) * binomial_mod(m, k, ctx.modulus())});
    return PullbackElement::from_terms(ctx, terms);
}

PullbackElement right_multiply(const PullbackElement& e, std::int64_t j) {
    if (j < 0) throw Error(ErrorCode::InvalidParameters, "negative right exponent");
    const auto& ctx = e.context();
    const std::size_t n = ctx.precision();
    PullbackElement out(ctx);
    for (std::size_t i = 0; i < static_cast<std::size_t>(ctx.p()); ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const auto& c = e.coeff(i, k);
            if (c.is_zero()) continue;
            const std::size_t target = k + static_cast<std::size_t>(j);
            if (target >= n)
                throw Error(ErrorCode::PrecisionExhausted,
                            "right degree " + std::to_string(target) + " exceeds precision " + std::to_string(n));
            out.at(i, target) = c;
        }
    }
    return out;
}

// ---------------------------------------------------------------- FiberPoint

FiberPoint::FiberPoint(PrimeModulus p, std::span<const std::int64_t> lambda) : p_(p) {
    if (lambda.size() != static_cast<std::size_t>(p.value()))
        throw Error(ErrorCode::InvalidParameters,
                    "a fiber point has p = " + std::to_string(p.value()) + " coordinates");
    for (auto x : lambda) lambda_.emplace_back(p, x);
    const auto lead = std::ranges::find_if(lambda_, [](const FieldElem& x) { return !x.is_zero(); });
    if (lead == lambda_.end()) throw Error(ErrorCode::InvalidParameters, "fiber point coordinates are all zero");
    const FieldElem inv = lead->inverse();
    for (auto& x : lambda_) x *= inv;
}

std::size_t FiberPoint::top_index() const noexcept {
    std::size_t top = 0;
    for (std::size_t i = 0; i < lambda_.size(); ++i)
        if (!lambda_[i].is_zero()) top = i;
    return top;
}

std::ostream& operator<<(std::ostream& os, const FiberPoint& v) {
    os << "(";
    for (std::size_t i = 0; i < v.lambda().size(); ++i) os << (i ? ":" : "") << v.lambda()[i];
    return os << ")";
}

std::vector<FiberPoint> all_fiber_points(PrimeModulus p) {
    const std::int64_t q = p.value();
    std::vector<FiberPoint> out;
    // normal form: zeros, then a leading 1, then arbitrary entries; a later
    // leading position is lexicographically smaller
    for (std::int64_t lead = q - 1; lead >= 0; --lead) {
        const std::int64_t free_count = q - 1 - lead;
        std::int64_t combos = 1;
        for (std::int64_t i = 0; i < free_count; ++i) combos *= q;
        for (std::int64_t code = 0; code < combos; ++code) {
            std::vector<std::int64_t> lambda(q, 0);
            lambda[lead] = 1;
            std::int64_t rest = code;
            for (std::int64_t i = q - 1; i > lead; --i) {
                lambda[i] = rest % q;
                rest /= q;
            }
            out.emplace_back(p, lambda);
        }
    }
    return out;
}

// ---------------------------------------------------------------- membership

TruncSeries phi_image(const PullbackElement& e, const FiberPoint& v) {
    const auto& ctx = e.context();
    if (v.modulus() != ctx.modulus()) throw Error(ErrorCode::ModulusMismatch, "fiber point over another field");
    const std::size_t p = static_cast<std::size_t>(ctx.p());
    TruncSeries out(ctx.modulus(), p);
    for (std::size_t j = 0; j < p; ++j) {
        FieldElem acc = FieldElem::zero(ctx.modulus());
        for (std::size_t i = 0; i < p; ++i) acc += v.lambda()[i] * e.coeff(i, j);
        out.set(j, acc);
    }
    return out;
}

bool in_pulled_back_submodule(const PullbackElement& e, const FiberPoint& v) {
    return phi_image(e, v).is_zero();
}

bool submodule_contains_monomial(const FiberPoint& v, std::int64_t j) {
    if (j < 0) throw Error(ErrorCode::InvalidParameters, "negative exponent");
    if (j >= v.modulus().value()) return true;
    return v.lambda()[static_cast<std::size_t>(j)].is_zero();
}

// ---------------------------------------------------------------- colength

ColengthSolver::ColengthSolver(const LocalContext& ctx) : ctx_(ctx) {
    const std::int64_t p = ctx.p();
    const auto n = static_cast<std::size_t>(p);
    blocks_.reserve(n * n * n * n);
    for (std::int64_t m = 0; m < p; ++m) {
        const auto tau = tau_power(ctx, m);
        // tau^m t^j with j >= p maps to t^p * (...) = 0 in k[[t]]/(t^p)
        for (std::int64_t j = 0; j < p; ++j) {
            const auto e = right_multiply(tau, j);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k) blocks_.push_back(e.coeff(i, k).value());
        }
    }
}

void ColengthSolver::image_row(const FiberPoint& v, std::int64_t m, std::int64_t j, std::int64_t* out) const {
    const std::int64_t p = ctx_.p();
    const auto n = static_cast<std::size_t>(p);
    // phi_image(tau^m t^j, v) = sum_i lambda_i * block(m, j)[i]
    const std::int64_t* block = blocks_.data() + static_cast<std::size_t>(m * p + j) * n * n;
    std::fill(out, out + n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t lam = v.lambda()[i].value();
        if (lam == 0) continue;
        for (std::size_t k = 0; k < n; ++k) out[k] = (out[k] + lam * block[i * n + k]) % p;
    }
}

std::int64_t ColengthSolver::colength(const FiberPoint& v, std::int64_t l) const {
    const std::int64_t p = ctx_.p();
    if (l < 1 || l > p - 1) throw Error(ErrorCode::InvalidLevel, "level must lie in [1, p-1]");
    if (v.modulus() != ctx_.modulus()) throw Error(ErrorCode::ModulusMismatch, "fiber point over another field");
    const auto n = static_cast<std::size_t>(p);
    std::vector<std::int64_t> entries(static_cast<std::size_t>(p - l) * n * n);
    std::int64_t* row = entries.data();
    for (std::int64_t m = l; m < p; ++m)
        for (std::int64_t j = 0; j < p; ++j, row += n) image_row(v, m, j, row);
    return static_cast<std::int64_t>(matrix_rank(FpMatrix(ctx_.modulus(), entries.size() / n, n, entries)));
}

ColengthProfile ColengthSolver::profile(const FiberPoint& v, std::int64_t g, std::int64_t degL) const {
    const std::int64_t p = ctx_.p();
    if (v.modulus() != ctx_.modulus()) throw Error(ErrorCode::ModulusMismatch, "fiber point over another field");
    const auto n = static_cast<std::size_t>(p);
    const auto pieces = filtration_degrees(p, g, degL);

    // E_l is spanned by the blocks m >= l, so adding blocks from m = p-1 down
    // to 1 to one echelon basis gives every level's rank in a single pass.
    // Each basis row has a leading 1 at its pivot column.
    std::vector<std::vector<std::int64_t>> basis;
    std::vector<std::size_t> pivots;
    std::vector<std::int64_t> row(n);
    ColengthProfile profile;
    std::int64_t step_degree = 0;
    for (std::int64_t m = p - 1; m >= 1; --m) {
        for (std::int64_t j = 0; j < p && basis.size() < n; ++j) {
            image_row(v, m, j, row.data());
            for (std::size_t b = 0; b < basis.size(); ++b) {
                const std::int64_t f = row[pivots[b]];
                if (f == 0) continue;
                for (std::size_t k = 0; k < n; ++k) row[k] = ((row[k] - f * basis[b][k]) % p + p) % p;
            }
            const auto lead = std::ranges::find_if(row, [](std::int64_t x) { return x != 0; });
            if (lead == row.end()) continue;
            const std::int64_t inv = FieldElem(ctx_.modulus(), *lead).inverse().value();
            for (auto& x : row) x = x * inv % p;
            pivots.push_back(static_cast<std::size_t>(lead - row.begin()));
            basis.push_back(row);
        }
        step_degree += pieces[static_cast<std::size_t>(m)].degree;
        const auto c = static_cast<std::int64_t>(basis.size());
        profile.colengths[m] = c;
        profile.d_sub[m] = step_degree - c;
    }
    return profile;
}

std::int64_t colength(const LocalContext& ctx, const FiberPoint& v, std::int64_t l) {
    if (l < 1 || l > ctx.p() - 1) throw Error(ErrorCode::InvalidLevel, "level must lie in [1, p-1]");
    return ColengthSolver(ctx).colength(v, l);
}

ColengthProfile colength_profile(const LocalContext& ctx, const FiberPoint& v, std::int64_t g,
                                 std::int64_t degL) {
    return ColengthSolver(ctx).profile(v, g, degL);
}

namespace {

/* Upper concave hull of points with strictly increasing ranks. */
std::vector<Vertex> upper_hull(const std::vector<Vertex>& pts) {
    std::vector<Vertex> hull;
    auto cross = [](const Vertex& o, const Vertex& a, const Vertex& b) {
        return (a.rank - o.rank) * (b.degree - o.degree) - (a.degree - o.degree) * (b.rank - o.rank);
    };
    for (const auto& v : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), v) >= 0) hull.pop_back();
        hull.push_back(v);
    }
    return hull;
}

}  // namespace

FiberPolygon fiber_polygon(const LocalContext& ctx, const FiberPoint& v, std::int64_t g, std::int64_t degL) {
    return ColengthSolver(ctx).fiber_polygon(v, g, degL);
}

FiberPolygon ColengthSolver::fiber_polygon(const FiberPoint& v, std::int64_t g, std::int64_t degL) const {
    if (g < 2) throw Error(ErrorCode::InvalidParameters, "genus must be at least 2");
    const std::int64_t p = ctx_.p();
    const bool extrapolated = !(p == 3 && g == 2 && degL == -1);

    auto profile = this->profile(v, g, degL);
    // E has colength one in F_*L, so deg F^*E = p * (deg F_*L - 1)
    const std::int64_t total = p * (pushforward_type(1, degL, p, g).degree - 1);

    std::vector<Vertex> pts{{0, 0}};
    for (std::int64_t l = p - 1; l >= 1; --l) pts.push_back({p - l, profile.d_sub.at(l)});
    pts.push_back({p, total});

    // a filtration step off the hull is a subsheaf below the HN polygon
    auto polygon = make_polygon(upper_hull(pts));
    if (!extrapolated) {
        const auto& table = rank3_char3_genus2_polygons();
        const bool allowed = std::ranges::any_of(table, [&](const auto& entry) {
            return entry.first != "P1" && entry.second == polygon;
        });
        if (!allowed) throw Error(ErrorCode::InvariantViolation, "fiber point with a polygon outside P2..P4");
    }
    return {std::move(polygon), std::move(profile), extrapolated};
}

std::vector<ClaimResult> verify_membership_claims(const LocalContext& ctx) {
    const std::int64_t p = ctx.p();
    const auto points = all_fiber_points(ctx.modulus());
    const auto top = tau_power(ctx, p - 1);
    std::vector<ClaimResult> out;
    for (std::int64_t j = 0; j <= p; ++j) {
        std::string label = p == 3 ? std::string("(") + static_cast<char>('a' + j) + ")" : "j=" + std::to_string(j);
        ClaimResult res{std::move(label), j, 0, points.size()};
        const auto shifted = right_multiply(top, j);
        for (const auto& v : points) {
            const bool member = in_pulled_back_submodule(shifted, v);
            bool predicted = true;
            for (std::int64_t i = j; i < p; ++i) predicted = predicted && submodule_contains_monomial(v, i);
            if (member == predicted) ++res.agreeing;
        }
        out.push_back(std::move(res));
    }
    return out;
}

}  // namespace frobstrat
