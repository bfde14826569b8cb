#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace jetspace {

/// The ground field: either the rationals or a prime field F_p.
class BaseField {
public:
    /// Rationals.
    BaseField() = default;

    static BaseField rationals() { return BaseField(); }
    /// Throws InvalidField unless `p` is a prime (trial division).
    static BaseField prime(std::uint64_t p);

    [[nodiscard]] std::uint64_t characteristic() const noexcept { return p_; }
    [[nodiscard]] bool is_rationals() const noexcept { return p_ == 0; }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(BaseField, BaseField) = default;

private:
    explicit BaseField(std::uint64_t p) : p_(p) {}

    std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// An element of a BaseField. Elements of distinct fields never mix;
/// arithmetic across fields throws FieldMismatch.
class Scalar {
public:
    Scalar() = default;
    Scalar(BaseField field, long value);
    Scalar(BaseField field, const mpq_class& value);

    [[nodiscard]] BaseField field() const noexcept { return field_; }
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_one() const;

    /// Rational value (char 0) or the canonical representative in [0, p).
    [[nodiscard]] mpq_class value() const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    [[nodiscard]] Scalar inverse() const;
    /// Multiplies by an integer, e.g. an exponent when differentiating.
    [[nodiscard]] Scalar times(std::uint64_t k) const;

    friend bool operator==(const Scalar& a, const Scalar& b);

    /// "p/q" with the denominator omitted when it is 1.
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] bool is_minus_one() const;

private:
    void check(const Scalar& other) const;

    BaseField field_{};
    mpq_class q_{};
    std::uint64_t r_ = 0;
};

}  // namespace jetspace
