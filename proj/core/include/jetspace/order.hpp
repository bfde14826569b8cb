#pragma once

#include <cstdint>
#include <string>

namespace jetspace {

/// Order of vanishing of a truncated quantity: either an exact value, or a
/// lower bound P meaning no nonzero coefficient below P was observed.
class OrderValue {
public:
    enum class Kind { Finite, AtLeast };

    static OrderValue finite(std::uint64_t e) { return OrderValue(Kind::Finite, e); }
    static OrderValue at_least(std::uint64_t p) { return OrderValue(Kind::AtLeast, p); }

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    /// The exact order, or the lower bound.
    [[nodiscard]] std::uint64_t value() const noexcept { return value_; }

    /// Sum of orders, saturating: any AtLeast operand makes the result AtLeast.
    friend OrderValue operator+(OrderValue a, OrderValue b);
    friend bool operator==(OrderValue, OrderValue) = default;

    /// "3" or ">=24".
    [[nodiscard]] std::string to_string() const;

private:
    OrderValue(Kind k, std::uint64_t v) : kind_(k), value_(v) {}

    Kind kind_ = Kind::Finite;
    std::uint64_t value_ = 0;
};

OrderValue min(OrderValue a, OrderValue b);

/// Clamps to a precision: Finite(e) with e >= cap becomes AtLeast(cap), and
/// AtLeast(P) becomes AtLeast(min(P, cap)).
OrderValue saturate(OrderValue v, std::uint64_t cap);

}  // namespace jetspace
