#pragma once

#include <map>
#include <string>
#include <vector>

#include "jetspace/polynomial.hpp"

namespace jetspace {

/// Element of the rational function field k(u_1..u_m): an unreduced fraction
/// of sparse polynomials. Equality is decided by cross-multiplication.
///
/// Construction strips the common monomial factor, folds constant
/// denominators into the numerator, cancels the denominator when it divides
/// the numerator exactly and makes the denominator monic. No multivariate gcd
/// is computed, so two equal elements may have different representations.
class FieldElement {
public:
    explicit FieldElement(BaseField field = {});
    FieldElement(BaseField field, long value);
    explicit FieldElement(const Scalar& value);
    explicit FieldElement(SparsePolynomial numerator);
    /// Throws DivisionByZero when the denominator is the zero polynomial.
    FieldElement(SparsePolynomial numerator, SparsePolynomial denominator);

    static FieldElement symbol(BaseField field, Symbol s);

    [[nodiscard]] BaseField field() const noexcept { return num_.field(); }
    [[nodiscard]] const SparsePolynomial& numerator() const noexcept { return num_; }
    [[nodiscard]] const SparsePolynomial& denominator() const noexcept { return den_; }

    [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }
    [[nodiscard]] bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// Value of a constant element; requires is_constant().
    [[nodiscard]] Scalar constant_value() const;
    [[nodiscard]] bool is_polynomial() const { return den_.is_constant(); }
    /// Number of stored terms; a rough cost measure used for pivoting.
    [[nodiscard]] std::size_t weight() const noexcept { return num_.size() + den_.size(); }
    [[nodiscard]] std::vector<Symbol> variables() const;

    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    /// Throws DivisionByZero when rhs is zero.
    FieldElement& operator/=(const FieldElement& rhs);
    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    FieldElement operator-() const;

    [[nodiscard]] FieldElement inverse() const;
    [[nodiscard]] FieldElement derivative(Symbol s) const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);

    /// Infix form accepted by the expression parser.
    [[nodiscard]] std::string to_string() const;

private:
    void normalize();

    SparsePolynomial num_;
    SparsePolynomial den_;
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Field arithmetic dispatch; Div by zero throws DivisionByZero.
FieldElement fe_arith(const FieldElement& a, const FieldElement& b, ArithOp op);

/// Evaluates `f` with the given values substituted; variables without a
/// value stay symbolic.
FieldElement evaluate(const SparsePolynomial& f, const std::map<Symbol, FieldElement>& values);

}  // namespace jetspace
