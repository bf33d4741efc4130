#include "frobstrat/algebra.hpp"

#include <algorithm>

#include <string>
#include <utility>

namespace frobstrat {

bool is_prime(std::int64_t n) noexcept {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeModulus::PrimeModulus(std::int64_t p) : p_(p) {
    if (!is_prime(p))
        throw Error(ErrorCode::InvalidParameters, "modulus " + std::to_string(p) + " is not prime");
}

// ---------------------------------------------------------------- FieldElem

FieldElem::FieldElem(PrimeModulus p, std::int64_t v) noexcept : p_(p), value_(v % p.value()) {
    if (value_ < 0) value_ += p.value();
}

void FieldElem::check_modulus(const FieldElem& rhs) const {
    if (p_ != rhs.p_)
        throw Error(ErrorCode::ModulusMismatch, "F_" + std::to_string(p_.value()) + " vs F_" +
                                                    std::to_string(rhs.p_.value()));
}

FieldElem FieldElem::operator-() const noexcept { return FieldElem(p_, -value_); }

FieldElem& FieldElem::operator+=(const FieldElem& rhs) {
    check_modulus(rhs);
    value_ += rhs.value_;
    if (value_ >= p_.value()) value_ -= p_.value();
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& rhs) {
    check_modulus(rhs);
    value_ -= rhs.value_;
    if (value_ < 0) value_ += p_.value();
    return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& rhs) {
    check_modulus(rhs);
    value_ = (value_ * rhs.value_) % p_.value();
    return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& rhs) {
    check_modulus(rhs);
    return *this *= rhs.inverse();
}

FieldElem FieldElem::inverse() const {
    if (value_ == 0) throw Error(ErrorCode::DivisionByZero, "inverse of 0");
    // extended Euclid on (value, p)
    std::int64_t r0 = p_.value(), r1 = value_;
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        r0 = std::exchange(r1, r0 - q * r1);
        s0 = std::exchange(s1, s0 - q * s1);
    }
    return FieldElem(p_, s0);
}

FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

std::ostream& operator<<(std::ostream& os, const FieldElem& a) { return os << a.value(); }

// ---------------------------------------------------------------- TruncSeries

TruncSeries::TruncSeries(PrimeModulus p, std::size_t precision)
    : p_(p), coeffs_(precision, FieldElem::zero(p)) {
    if (precision == 0) throw Error(ErrorCode::InvalidParameters, "series precision must be positive");
}

TruncSeries::TruncSeries(PrimeModulus p, std::span<const std::int64_t> coeffs)
    : TruncSeries(p, coeffs.size()) {
    for (std::size_t j = 0; j < coeffs.size(); ++j) coeffs_[j] = FieldElem(p, coeffs[j]);
}

TruncSeries TruncSeries::monomial(PrimeModulus p, std::size_t precision, std::size_t degree,
                                  std::int64_t coeff) {
    TruncSeries s(p, precision);
    if (degree < precision) s.coeffs_[degree] = FieldElem(p, coeff);
    return s;
}

void TruncSeries::set(std::size_t j, const FieldElem& c) {
    if (c.modulus() != p_) throw Error(ErrorCode::ModulusMismatch, "coefficient modulus");
    coeffs_.at(j) = c;
}

bool TruncSeries::is_zero() const noexcept { return valuation() == coeffs_.size(); }

std::size_t TruncSeries::valuation() const noexcept {
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        if (!coeffs_[j].is_zero()) return j;
    return coeffs_.size();
}

void TruncSeries::check_compatible(const TruncSeries& rhs) const {
    if (p_ != rhs.p_) throw Error(ErrorCode::ModulusMismatch, "series over different fields");
    if (coeffs_.size() != rhs.coeffs_.size())
        throw Error(ErrorCode::PrecisionMismatch, "series precision " + std::to_string(coeffs_.size()) +
                                                      " vs " + std::to_string(rhs.coeffs_.size()));
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs) {
    check_compatible(rhs);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs) {
    check_compatible(rhs);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
    return *this;
}

TruncSeries TruncSeries::scaled(const FieldElem& s) const {
    TruncSeries out = *this;
    for (auto& c : out.coeffs_) c *= s;
    return out;
}

TruncSeries TruncSeries::shifted(std::size_t k) const {
    TruncSeries out(p_, coeffs_.size());
    for (std::size_t j = 0; j + k < coeffs_.size(); ++j) out.coeffs_[j + k] = coeffs_[j];
    return out;
}

TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    if (a.modulus() != b.modulus()) throw Error(ErrorCode::ModulusMismatch, "series over different fields");
    if (a.precision() != b.precision())
        throw Error(ErrorCode::PrecisionMismatch, "series precision mismatch");
    const std::size_t n = a.precision();
    const std::int64_t p = a.modulus().value();
    std::vector<std::int64_t> acc(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j)
            acc[i + j] = (acc[i + j] + a[i].value() * b[j].value()) % p;
    }
    return TruncSeries(a.modulus(), acc);
}

std::ostream& operator<<(std::ostream& os, const TruncSeries& s) {
    bool first = true;
    for (std::size_t j = 0; j < s.precision(); ++j) {
        if (s[j].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (j == 0 || s[j].value() != 1) os << s[j].value();
        if (j > 0) os << "t";
        if (j > 1) os << "^" << j;
    }
    if (first) os << "0";
    return os << " + O(t^" << s.precision() << ")";
}

// ---------------------------------------------------------------- FpMatrix

FpMatrix::FpMatrix(PrimeModulus p, std::size_t nrows, std::size_t ncols)
    : p_(p), nrows_(nrows), ncols_(ncols), entries_(nrows * ncols, FieldElem::zero(p)) {
    if (nrows == 0 || ncols == 0) throw Error(ErrorCode::InvalidParameters, "empty matrix");
}

FpMatrix::FpMatrix(PrimeModulus p, std::size_t nrows, std::size_t ncols,
                   std::span<const std::int64_t> row_major)
    : FpMatrix(p, nrows, ncols) {
    if (row_major.size() != nrows * ncols)
        throw Error(ErrorCode::InvalidParameters, "entry count does not match shape");
    for (std::size_t k = 0; k < row_major.size(); ++k) entries_[k] = FieldElem(p, row_major[k]);
}

FpMatrix FpMatrix::from_rows(std::span<const TruncSeries> rows) {
    if (rows.empty()) throw Error(ErrorCode::InvalidParameters, "no rows");
    FpMatrix m(rows.front().modulus(), rows.size(), rows.front().precision());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].modulus() != m.p_) throw Error(ErrorCode::ModulusMismatch, "row modulus");
        if (rows[i].precision() != m.ncols_) throw Error(ErrorCode::PrecisionMismatch, "row length");
        for (std::size_t j = 0; j < m.ncols_; ++j) m.entries_[i * m.ncols_ + j] = rows[i][j];
    }
    return m;
}

const FieldElem& FpMatrix::operator()(std::size_t i, std::size_t j) const {
    if (i >= nrows_ || j >= ncols_) throw Error(ErrorCode::InvalidParameters, "matrix index out of range");
    return entries_[i * ncols_ + j];
}

void FpMatrix::set(std::size_t i, std::size_t j, const FieldElem& v) {
    if (i >= nrows_ || j >= ncols_) throw Error(ErrorCode::InvalidParameters, "matrix index out of range");
    if (v.modulus() != p_) throw Error(ErrorCode::ModulusMismatch, "entry modulus");
    entries_[i * ncols_ + j] = v;
}

std::size_t matrix_rank(const FpMatrix& m) {
    const std::size_t rows = m.nrows(), cols = m.ncols();
    const std::int64_t p = m.modulus().value();
    std::vector<std::int64_t> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m(i, j).value();
    auto row = [&](std::size_t i) { return a.data() + i * cols; };

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && row(pivot)[col] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) std::swap_ranges(row(pivot), row(pivot) + cols, row(rank));
        const std::int64_t inv = FieldElem(m.modulus(), row(rank)[col]).inverse().value();
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const std::int64_t factor = row(i)[col] * inv % p;
            if (factor == 0) continue;
            for (std::size_t j = col; j < cols; ++j) row(i)[j] = ((row(i)[j] - factor * row(rank)[j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace frobstrat
