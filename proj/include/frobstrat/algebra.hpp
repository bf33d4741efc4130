#ifndef FROBSTRAT_ALGEBRA_HPP
#define FROBSTRAT_ALGEBRA_HPP

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "frobstrat/error.hpp"

namespace frobstrat {

/* A validated prime p. Construction runs trial division; every other type
 * in the library takes a PrimeModulus so the check happens once. */
class PrimeModulus {
   public:
    explicit PrimeModulus(std::int64_t p);

    std::int64_t value() const noexcept { return p_; }
    friend bool operator==(PrimeModulus, PrimeModulus) = default;

   private:
    std::int64_t p_;
};

bool is_prime(std::int64_t n) noexcept;

/* Element of F_p, always stored reduced into [0, p). */
class FieldElem {
   public:
    FieldElem(PrimeModulus p, std::int64_t v) noexcept;

    static FieldElem zero(PrimeModulus p) noexcept { return FieldElem(p, 0); }
    static FieldElem one(PrimeModulus p) noexcept { return FieldElem(p, 1); }

    std::int64_t value() const noexcept { return value_; }
    PrimeModulus modulus() const noexcept { return p_; }
    std::int64_t characteristic() const noexcept { return p_.value(); }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElem operator-() const noexcept;
    FieldElem& operator+=(const FieldElem& rhs);
    FieldElem& operator-=(const FieldElem& rhs);
    FieldElem& operator*=(const FieldElem& rhs);
    FieldElem& operator/=(const FieldElem& rhs);

    /* Throws DivisionByZero for 0. */
    FieldElem inverse() const;

    friend bool operator==(const FieldElem&, const FieldElem&) = default;

   private:
    void check_modulus(const FieldElem& rhs) const;

    PrimeModulus p_;
    std::int64_t value_;
};

FieldElem operator+(FieldElem a, const FieldElem& b);
FieldElem operator-(FieldElem a, const FieldElem& b);
FieldElem operator*(FieldElem a, const FieldElem& b);
FieldElem operator/(FieldElem a, const FieldElem& b);
std::ostream& operator<<(std::ostream& os, const FieldElem& a);

/* Truncated power series sum_{j<N} c_j t^j over F_p. */
class TruncSeries {
   public:
    TruncSeries(PrimeModulus p, std::size_t precision);
    TruncSeries(PrimeModulus p, std::span<const std::int64_t> coeffs);

    static TruncSeries monomial(PrimeModulus p, std::size_t precision, std::size_t degree,
                                std::int64_t coeff = 1);

    PrimeModulus modulus() const noexcept { return p_; }
    std::size_t precision() const noexcept { return coeffs_.size(); }
    const FieldElem& operator[](std::size_t j) const { return coeffs_.at(j); }
    void set(std::size_t j, const FieldElem& c);
    std::span<const FieldElem> coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;
    /* Index of the lowest nonzero coefficient; precision() for the zero series. */
    std::size_t valuation() const noexcept;

    TruncSeries& operator+=(const TruncSeries& rhs);
    TruncSeries& operator-=(const TruncSeries& rhs);
    TruncSeries scaled(const FieldElem& s) const;
    /* Multiplication by t^k, dropping whatever falls past the precision. */
    TruncSeries shifted(std::size_t k) const;

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

   private:
    void check_compatible(const TruncSeries& rhs) const;

    PrimeModulus p_;
    std::vector<FieldElem> coeffs_;
};

TruncSeries operator+(TruncSeries a, const TruncSeries& b);
TruncSeries operator-(TruncSeries a, const TruncSeries& b);
/* Cauchy product truncated at the shared precision. */
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
inline TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return series_mul(a, b); }
std::ostream& operator<<(std::ostream& os, const TruncSeries& s);

/* Dense row-major matrix over F_p. */
class FpMatrix {
   public:
    FpMatrix(PrimeModulus p, std::size_t nrows, std::size_t ncols);
    FpMatrix(PrimeModulus p, std::size_t nrows, std::size_t ncols,
             std::span<const std::int64_t> row_major);

    /* One row per series; all series must share modulus and precision. */
    static FpMatrix from_rows(std::span<const TruncSeries> rows);

    PrimeModulus modulus() const noexcept { return p_; }
    std::size_t nrows() const noexcept { return nrows_; }
    std::size_t ncols() const noexcept { return ncols_; }
    const FieldElem& operator()(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const FieldElem& v);

   private:
    PrimeModulus p_;
    std::size_t nrows_;
    std::size_t ncols_;
    std::vector<FieldElem> entries_;
};

/* Rank over F_p by Gaussian elimination on a private copy. */
std::size_t matrix_rank(const FpMatrix& m);

}  // namespace frobstrat

#endif
