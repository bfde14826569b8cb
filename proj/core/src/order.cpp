#include "jetspace/order.hpp"

#include <algorithm>

namespace jetspace {

OrderValue operator+(OrderValue a, OrderValue b)
{
    const auto sum = a.value_ + b.value_;
    if (a.is_finite() && b.is_finite()) {
        return OrderValue::finite(sum);
    }
    return OrderValue::at_least(sum);
}

std::string OrderValue::to_string() const
{
    return (is_finite() ? "" : ">=") + std::to_string(value_);
}

OrderValue min(OrderValue a, OrderValue b)
{
    if (a.is_finite() && b.is_finite()) {
        return OrderValue::finite(std::min(a.value(), b.value()));
    }
    if (!a.is_finite() && !b.is_finite()) {
        return OrderValue::at_least(std::min(a.value(), b.value()));
    }
    const OrderValue f = a.is_finite() ? a : b;
    const OrderValue l = a.is_finite() ? b : a;
    return f.value() < l.value() ? f : l;
}

OrderValue saturate(OrderValue v, std::uint64_t cap)
{
    if (v.value() >= cap) {
        return OrderValue::at_least(cap);
    }
    return v;
}

}  // namespace jetspace
