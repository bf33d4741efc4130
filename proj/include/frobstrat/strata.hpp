#ifndef FROBSTRAT_STRATA_HPP
#define FROBSTRAT_STRATA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobstrat/degrees.hpp"
#include "frobstrat/local_frobenius.hpp"
#include "frobstrat/polygons.hpp"

namespace frobstrat {

struct CurveContext {
    std::int64_t p = 3;
    std::int64_t g = 2;
    std::int64_t r = 3;
    std::int64_t d = 0;
    std::int64_t degL = -1;
};

/* Polynomial in the field size q with integer coefficients, used for point
 * counts of strata. Printed as "q^2 + q + 1". */
class QPolynomial {
   public:
    QPolynomial() = default;
    static QPolynomial monomial(std::size_t degree, std::int64_t coeff = 1);

    std::int64_t evaluate(std::int64_t q) const;
    /* -1 for the zero polynomial. */
    std::int64_t degree() const noexcept;
    const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }

    QPolynomial& operator+=(const QPolynomial& rhs);
    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

   private:
    void trim();
    std::vector<std::int64_t> coeffs_;  // coeffs_[i] multiplies q^i
};

std::string to_string(const QPolynomial& poly);

struct CensusClass {
    std::string polygon_id;
    LatticePolygon polygon;
    std::int64_t count;                // points with exactly this polygon
    QPolynomial closed_form;           // count as a polynomial in q
    std::int64_t closure_count;        // points whose polygon dominates this one
    QPolynomial closure_closed_form;
};

struct FiberCensus {
    std::int64_t p;
    std::int64_t g;
    std::int64_t degL;
    bool extrapolated;
    std::int64_t total;  // |P^{p-1}(F_p)|
    /* Ascending in the polygon order of enumerate_frobenius_polygons. */
    std::vector<CensusClass> classes;
};

/*
 * Classifies every point of P^{p-1}(F_p) with fiber_polygon() and counts the
 * strata. Closed forms come from the fact that the colength profile depends
 * only on the top nonzero coordinate index i of the point, and there are q^i
 * such points; the enumerated counts must agree with them at q = p (an
 * InvariantViolation otherwise). `parallel` splits the classification across
 * threads; the result is identical.
 */
FiberCensus fiber_census(std::int64_t p, std::int64_t g, std::int64_t degL,
                         std::optional<std::size_t> precision = std::nullopt, bool parallel = false);

struct StratumReport {
    std::string polygon_id;
    LatticePolygon polygon;
    std::optional<std::int64_t> fiber_dim;
    std::optional<std::int64_t> quot_dim;
    std::int64_t moduli_dim;
    std::string closure_note;
    std::int64_t field_size;       // q at which count_at_q was enumerated
    std::int64_t count_at_q;
    QPolynomial closed_form;
};

/*
 * Stratum dimensions for (p,g,r,d,degL) = (3,2,3,0,-1), one row per
 * polygon P1..P4. Fiber dimensions come from the census, Quot dimensions add
 * dim(X x Pic) = g + 1, moduli dimensions follow from the injectivity of the
 * Quot-to-moduli map on the strata where the adjoint map is surjective (every
 * non-canonical polygon in the census), the Jacobian for the canonical
 * polygon, and duality for the remaining polygon. The results are checked
 * against the published table. Throws InvalidParameters for any other context.
 */
std::vector<StratumReport> stratum_table(const CurveContext& ctx);

}  // namespace frobstrat

#endif
