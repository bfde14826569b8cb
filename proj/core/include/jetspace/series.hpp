#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "jetspace/field_element.hpp"
#include "jetspace/order.hpp"

namespace jetspace {

/// Power series in t known modulo t^P, P >= 1. Coefficient i multiplies t^i.
class TruncatedSeries {
public:
    /// Zero series of the given precision.
    TruncatedSeries(BaseField field, std::size_t precision);
    /// Precision is coeffs.size(), which must be positive.
    explicit TruncatedSeries(std::vector<FieldElement> coeffs);

    static TruncatedSeries constant(const FieldElement& c, std::size_t precision);
    /// c * t^k truncated at `precision`.
    static TruncatedSeries monomial(const FieldElement& c, std::size_t k, std::size_t precision);

    [[nodiscard]] BaseField field() const noexcept { return field_; }
    [[nodiscard]] std::size_t precision() const noexcept { return coeffs_.size(); }
    [[nodiscard]] const FieldElement& operator[](std::size_t i) const { return coeffs_.at(i); }
    [[nodiscard]] const std::vector<FieldElement>& coefficients() const noexcept { return coeffs_; }
    [[nodiscard]] bool is_zero() const;

    /// Finite(least nonzero index) or AtLeast(precision()).
    [[nodiscard]] OrderValue order() const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries operator-() const;

    [[nodiscard]] TruncatedSeries scaled(const FieldElement& c) const;
    /// First `precision` coefficients; requires precision <= precision().
    [[nodiscard]] TruncatedSeries truncated(std::size_t precision) const;
    /// Divides by t^e. Requires the first e coefficients to vanish; the result
    /// has precision precision() - e.
    [[nodiscard]] TruncatedSeries shifted_down(std::size_t e) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

    [[nodiscard]] std::string to_string() const;

private:
    BaseField field_;
    std::vector<FieldElement> coeffs_;
};

enum class SeriesOp { Add, Sub, Mul };

/// Exact truncated arithmetic; the result precision is the smaller one.
TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op);

/// Inverse of a unit (order Finite(0)); throws NotAUnit otherwise.
TruncatedSeries series_invert(const TruncatedSeries& a);

/// Order of vanishing; exact zero test per coefficient.
inline OrderValue order(const TruncatedSeries& a) { return a.order(); }

/// A rational function of t: numerator / denominator with polynomial
/// coefficients over the residue field. Expands to any precision.
class SeriesExpression {
public:
    /// Throws DenominatorNotUnit if the constant term of `denominator` is zero.
    SeriesExpression(std::vector<FieldElement> numerator, std::vector<FieldElement> denominator);
    /// Polynomial in t.
    explicit SeriesExpression(std::vector<FieldElement> numerator);

    [[nodiscard]] BaseField field() const { return den_.front().field(); }
    [[nodiscard]] const std::vector<FieldElement>& numerator() const noexcept { return num_; }
    [[nodiscard]] const std::vector<FieldElement>& denominator() const noexcept { return den_; }

private:
    std::vector<FieldElement> num_;
    std::vector<FieldElement> den_;
};

/// First P coefficients of the power-series expansion of `e`.
TruncatedSeries expand(const SeriesExpression& e, std::size_t precision);

/// Evaluates `f` at series values for some of its variables. Variables
/// without a value are treated as constants of the coefficient field. The
/// result has precision `precision`, which may not exceed any value's.
TruncatedSeries evaluate(const SparsePolynomial& f, const std::map<Symbol, TruncatedSeries>& values,
                         std::size_t precision);

}  // namespace jetspace
