#ifndef FROBSTRAT_LOCAL_FROBENIUS_HPP
#define FROBSTRAT_LOCAL_FROBENIUS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frobstrat/algebra.hpp"
#include "frobstrat/polygons.hpp"

namespace frobstrat {

/*
 * Formal-local model of Frobenius at a point. With s = t^p and A = k[[s]],
 * k[[t]] is free over A with basis 1, t, ..., t^(p-1); the stalk of
 * F^*F_*(L) is k[[t]] (x)_A k[[t]], truncated at right degree N.
 */
class LocalContext {
   public:
    /* N defaults to 3p; N < 2p is rejected. */
    explicit LocalContext(std::int64_t p, std::optional<std::size_t> precision = std::nullopt);

    PrimeModulus modulus() const noexcept { return p_; }
    std::int64_t p() const noexcept { return p_.value(); }
    std::size_t precision() const noexcept { return n_; }

    friend bool operator==(const LocalContext&, const LocalContext&) = default;

   private:
    PrimeModulus p_;
    std::size_t n_;
};

/* c * t^left (x) t^right, not necessarily in normal form. */
struct Term {
    std::int64_t left;
    std::int64_t right;
    std::int64_t coeff;
};

/*
 * Element of k[[t]] (x)_A k[[t]] in normal form: coefficient c[i][j] of
 * t^i (x) t^j with 0 <= i < p and 0 <= j < N. Since t^p lies in A it moves
 * across the tensor sign, t^a (x) t^b = t^(a-p) (x) t^(b+p).
 */
class PullbackElement {
   public:
    explicit PullbackElement(const LocalContext& ctx);

    /* Normalizes each term; terms landing at right degree >= N are dropped. */
    static PullbackElement from_terms(const LocalContext& ctx, std::span<const Term> terms);

    const LocalContext& context() const noexcept { return ctx_; }
    const FieldElem& coeff(std::size_t left, std::size_t right) const;
    /* Nonzero normal-form terms, ordered by (left, right). */
    std::vector<Term> terms() const;
    bool is_zero() const noexcept;

    PullbackElement& operator+=(const PullbackElement& rhs);
    PullbackElement scaled(const FieldElem& s) const;

    friend bool operator==(const PullbackElement&, const PullbackElement&) = default;

   private:
    friend PullbackElement right_multiply(const PullbackElement& e, std::int64_t j);
    FieldElem& at(std::size_t left, std::size_t right) { return c_[left * ctx_.precision() + right]; }

    LocalContext ctx_;
    std::vector<FieldElem> c_;
};

std::ostream& operator<<(std::ostream& os, const PullbackElement& e);

/* (t(x)1 - 1(x)t)^m, 0 <= m <= p-1. Throws InvalidLevel. */
PullbackElement tau_power(const LocalContext& ctx, std::int64_t m);

/* e * (1 (x) t^j). Throws PrecisionExhausted if a nonzero coefficient would
 * reach right degree N, InvalidParameters for j < 0. */
PullbackElement right_multiply(const PullbackElement& e, std::int64_t j);

/*
 * Point (lambda_0 : ... : lambda_{p-1}) of P^{p-1}(F_p), scaled so that the
 * first nonzero coordinate is 1. It names the colength-one A-submodule
 * V = ker(phi) of k[[t]], where phi(sum_i t^i a_i(s)) = sum_i lambda_i a_i(0).
 */
class FiberPoint {
   public:
    FiberPoint(PrimeModulus p, std::span<const std::int64_t> lambda);

    PrimeModulus modulus() const noexcept { return p_; }
    const std::vector<FieldElem>& lambda() const noexcept { return lambda_; }
    /* Largest i with lambda_i != 0. */
    std::size_t top_index() const noexcept;

    friend bool operator==(const FiberPoint&, const FiberPoint&) = default;

   private:
    PrimeModulus p_;
    std::vector<FieldElem> lambda_;
};

std::ostream& operator<<(std::ostream& os, const FiberPoint& v);

/* All (p^p - 1)/(p - 1) points of P^{p-1}(F_p), in lexicographic order of
 * their normalized coordinates. */
std::vector<FiberPoint> all_fiber_points(PrimeModulus p);

/*
 * Image of e under phi (x) id in k[[t]]/(t^p): sum_i lambda_i * g_i(t) mod
 * t^p with g_i(t) = sum_j c[i][j] t^j. Zero exactly when e lies in V (x)_A k[[t]].
 */
TruncSeries phi_image(const PullbackElement& e, const FiberPoint& v);

bool in_pulled_back_submodule(const PullbackElement& e, const FiberPoint& v);

/* t^j in V: j >= p, or lambda_j = 0. */
bool submodule_contains_monomial(const FiberPoint& v, std::int64_t j);

/*
 * dim_k E_l / ((V (x) k[[t]]) cap E_l) at the point, where E_l is generated
 * by tau^l, ..., tau^(p-1). Computed as the F_p-rank of phi_image(tau^m t^j)
 * for l <= m <= p-1, 0 <= j <= p-1. Throws InvalidLevel unless 1 <= l <= p-1.
 */
std::int64_t colength(const LocalContext& ctx, const FiberPoint& v, std::int64_t l);

struct ColengthProfile {
    std::map<std::int64_t, std::int64_t> colengths;  // level l -> colength
    std::map<std::int64_t, std::int64_t> d_sub;      // level l -> deg(F^*E cap E_l)
};

ColengthProfile colength_profile(const LocalContext& ctx, const FiberPoint& v, std::int64_t g,
                                 std::int64_t degL);

struct FiberPolygon {
    LatticePolygon polygon;
    ColengthProfile profile;
    /* Parameters other than (p, g, degL) = (3, 2, -1), where the result is not
     * checked against the known list of fiber polygons. */
    bool extrapolated;
};

/*
 * HN polygon of F^*E for the subsheaf E of F_*(L) of colength one at a point
 * that the fiber point v names: the upper hull of (0,0), the points
 * (p - l, d_sub[l]) and (p, deg F^*E). At (p, g, degL) = (3, 2, -1) a polygon
 * other than P2, P3, P4 is an InvariantViolation.
 */
FiberPolygon fiber_polygon(const LocalContext& ctx, const FiberPoint& v, std::int64_t g,
                           std::int64_t degL);

/*
 * The phi-images of tau^m t^j, 0 <= m, j <= p-1, are linear in lambda, so
 * their coefficient blocks are computed once here and reused for every fiber
 * point. The free functions above build a solver per call.
 */
class ColengthSolver {
   public:
    explicit ColengthSolver(const LocalContext& ctx);
    const LocalContext& context() const noexcept { return ctx_; }
    std::int64_t colength(const FiberPoint& v, std::int64_t l) const;
    ColengthProfile profile(const FiberPoint& v, std::int64_t g, std::int64_t degL) const;
    FiberPolygon fiber_polygon(const FiberPoint& v, std::int64_t g, std::int64_t degL) const;

   private:
    /* phi_image(tau^m t^j, v) as p integers. */
    void image_row(const FiberPoint& v, std::int64_t m, std::int64_t j, std::int64_t* out) const;

    LocalContext ctx_;
    std::vector<std::int64_t> blocks_;  // [m][j][i][k]: coeff of t^i (x) t^k in tau^m t^j, k < p
};

/* One membership statement tau^(p-1) t^j in V (x) k[[t]] <=> t^j..t^(p-1) in V,
 * checked over every point of the fiber. */
struct ClaimResult {
    std::string label;
    std::int64_t shift;
    std::size_t agreeing;
    std::size_t total;

    bool passed() const noexcept { return agreeing == total; }
};

/* Runs the statements for j = 0..p. For p = 3 they carry the labels
 * (a)..(d); otherwise "j=<j>". */
std::vector<ClaimResult> verify_membership_claims(const LocalContext& ctx);

}  // namespace frobstrat

#endif
