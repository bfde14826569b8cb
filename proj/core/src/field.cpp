#include "jetspace/field.hpp"

#include "jetspace/errors.hpp"

namespace jetspace {

namespace {

std::uint64_t reduce(const mpz_class& z, std::uint64_t p)
{
    mpz_class r = z % static_cast<unsigned long>(p);
    if (r < 0) {
        r += static_cast<unsigned long>(p);
    }
    return r.get_ui();
}

__extension__ using uint128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<uint128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t result = 1 % p;
    while (e > 0) {
        if (e & 1U) {
            result = mul_mod(result, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1U;
    }
    return result;
}

}  // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

BaseField BaseField::prime(std::uint64_t p)
{
    if (!is_prime(p)) {
        throw InvalidField(std::to_string(p) + " is not prime");
    }
    if (p > (std::uint64_t{1} << 62U)) {
        throw InvalidField("prime too large");
    }
    return BaseField(p);
}

std::string BaseField::to_string() const
{
    return is_rationals() ? std::string("QQ") : "GF(" + std::to_string(p_) + ")";
}

Scalar::Scalar(BaseField field, long value) : field_(field)
{
    if (field_.is_rationals()) {
        q_ = value;
    } else {
        r_ = reduce(mpz_class(value), field_.characteristic());
    }
}

Scalar::Scalar(BaseField field, const mpq_class& value) : field_(field)
{
    if (field_.is_rationals()) {
        q_ = value;
        q_.canonicalize();
        return;
    }
    const auto p = field_.characteristic();
    const auto num = reduce(value.get_num(), p);
    const auto den = reduce(value.get_den(), p);
    if (den == 0) {
        throw DivisionByZero("denominator of " + value.get_str() + " vanishes in " +
                             field_.to_string());
    }
    r_ = mul_mod(num, pow_mod(den, p - 2, p), p);
}

bool Scalar::is_zero() const
{
    return field_.is_rationals() ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const
{
    return field_.is_rationals() ? q_ == 1 : r_ == 1;
}

bool Scalar::is_minus_one() const
{
    return field_.is_rationals() ? q_ == -1 : r_ + 1 == field_.characteristic();
}

mpq_class Scalar::value() const
{
    if (field_.is_rationals()) {
        return q_;
    }
    return mpq_class(mpz_class(static_cast<unsigned long>(r_)));
}

void Scalar::check(const Scalar& other) const
{
    if (field_ != other.field_) {
        throw FieldMismatch("cannot combine elements of " + field_.to_string() + " and " +
                            other.field_.to_string());
    }
}

Scalar& Scalar::operator+=(const Scalar& rhs)
{
    check(rhs);
    if (field_.is_rationals()) {
        q_ += rhs.q_;
    } else {
        r_ += rhs.r_;
        if (r_ >= field_.characteristic()) {
            r_ -= field_.characteristic();
        }
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs)
{
    check(rhs);
    if (field_.is_rationals()) {
        q_ -= rhs.q_;
    } else {
        r_ = r_ >= rhs.r_ ? r_ - rhs.r_ : r_ + field_.characteristic() - rhs.r_;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs)
{
    check(rhs);
    if (field_.is_rationals()) {
        q_ *= rhs.q_;
    } else {
        r_ = mul_mod(r_, rhs.r_, field_.characteristic());
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs)
{
    check(rhs);
    return *this *= rhs.inverse();
}

Scalar Scalar::operator-() const
{
    Scalar out = *this;
    if (field_.is_rationals()) {
        out.q_ = -q_;
    } else if (r_ != 0) {
        out.r_ = field_.characteristic() - r_;
    }
    return out;
}

Scalar Scalar::inverse() const
{
    if (is_zero()) {
        throw DivisionByZero("inverse of zero");
    }
    Scalar out = *this;
    if (field_.is_rationals()) {
        out.q_ = 1 / q_;
    } else {
        const auto p = field_.characteristic();
        out.r_ = pow_mod(r_, p - 2, p);
    }
    return out;
}

Scalar Scalar::times(std::uint64_t k) const
{
    if (field_.is_rationals()) {
        Scalar out = *this;
        out.q_ *= mpz_class(static_cast<unsigned long>(k));
        return out;
    }
    Scalar out = *this;
    out.r_ = mul_mod(r_, k % field_.characteristic(), field_.characteristic());
    return out;
}

bool operator==(const Scalar& a, const Scalar& b)
{
    a.check(b);
    return a.field_.is_rationals() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const
{
    if (field_.is_rationals()) {
        return q_.get_str();
    }
    return std::to_string(r_);
}

}  // namespace jetspace
