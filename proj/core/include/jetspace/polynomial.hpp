#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jetspace/field.hpp"
#include "jetspace/symbol.hpp"

namespace jetspace {

/// Power product stored sparsely as (symbol id, exponent) pairs sorted by id,
/// exponents strictly positive.
class Monomial {
public:
    using Factor = std::pair<std::uint32_t, std::uint32_t>;

    Monomial() = default;
    static Monomial of(Symbol s, std::uint32_t exponent = 1);

    [[nodiscard]] const std::vector<Factor>& factors() const noexcept { return factors_; }
    [[nodiscard]] bool is_one() const noexcept { return factors_.empty(); }
    [[nodiscard]] std::uint32_t exponent(Symbol s) const;
    [[nodiscard]] std::uint64_t total_degree() const;

    [[nodiscard]] Monomial operator*(const Monomial& rhs) const;
    [[nodiscard]] bool divides(const Monomial& rhs) const;
    /// Requires divides(rhs); returns rhs / *this.
    [[nodiscard]] Monomial quotient_of(const Monomial& rhs) const;
    [[nodiscard]] Monomial gcd(const Monomial& rhs) const;
    /// Lowers the exponent of `s` by one; the caller checks exponent(s) > 0.
    [[nodiscard]] Monomial without_one(Symbol s) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
};

/// Lexicographic order with lower symbol ids ranked higher.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over a BaseField. Never stores zero
/// coefficients; the zero polynomial has no terms.
class SparsePolynomial {
public:
    using Terms = std::map<Monomial, Scalar, MonomialLess>;

    explicit SparsePolynomial(BaseField field = {}) : field_(field) {}
    SparsePolynomial(BaseField field, long constant);
    explicit SparsePolynomial(const Scalar& constant);

    static SparsePolynomial variable(BaseField field, Symbol s);
    static SparsePolynomial term(const Scalar& coefficient, const Monomial& m);

    [[nodiscard]] BaseField field() const noexcept { return field_; }
    [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const;
    [[nodiscard]] bool is_monomial() const noexcept { return terms_.size() == 1; }
    [[nodiscard]] Scalar constant_term() const;
    [[nodiscard]] std::uint64_t total_degree() const;
    [[nodiscard]] std::uint32_t degree_in(Symbol s) const;
    /// Symbols that occur with positive exponent, ordered by id.
    [[nodiscard]] std::vector<Symbol> variables() const;

    /// Leading term under MonomialLess. Requires a nonzero polynomial.
    [[nodiscard]] const std::pair<const Monomial, Scalar>& leading() const;

    SparsePolynomial& operator+=(const SparsePolynomial& rhs);
    SparsePolynomial& operator-=(const SparsePolynomial& rhs);
    SparsePolynomial& operator*=(const SparsePolynomial& rhs);
    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
    SparsePolynomial operator-() const;

    [[nodiscard]] SparsePolynomial scaled(const Scalar& c) const;
    [[nodiscard]] SparsePolynomial times_monomial(const Monomial& m) const;
    /// Requires that `m` divides every term.
    [[nodiscard]] SparsePolynomial divided_by_monomial(const Monomial& m) const;
    [[nodiscard]] SparsePolynomial pow(std::uint32_t k) const;

    /// Formal partial derivative; in characteristic p exponents divisible by
    /// p differentiate to zero.
    [[nodiscard]] SparsePolynomial derivative(Symbol s) const;

    /// Substitutes polynomials for some variables (others stay symbolic).
    [[nodiscard]] SparsePolynomial substitute(const std::map<Symbol, SparsePolynomial>& values) const;

    /// Quotient when `divisor` divides *this exactly, otherwise nullopt.
    [[nodiscard]] std::optional<SparsePolynomial> divide_exact(const SparsePolynomial& divisor) const;

    /// Greatest common monomial factor of all terms (1 for zero).
    [[nodiscard]] Monomial monomial_content() const;

    friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b);

    [[nodiscard]] std::string to_string() const;

private:
    void add_term(const Monomial& m, const Scalar& c);

    BaseField field_{};
    Terms terms_;
};

/// Partial derivative with respect to a named ring variable. Throws
/// UnknownVariable if `var` is not among `ring_variables`.
SparsePolynomial poly_derivative(const SparsePolynomial& f, Symbol var,
                                 const std::vector<Symbol>& ring_variables);

}  // namespace jetspace
