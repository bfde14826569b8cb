#include "jetspace/field_element.hpp"

#include <algorithm>
#include <set>

#include "jetspace/errors.hpp"

namespace jetspace {

namespace {

bool degree_permits_division(const SparsePolynomial& num, const SparsePolynomial& den)
{
    if (num.total_degree() < den.total_degree() || num.size() < den.size()) {
        return false;
    }
    for (auto s : den.variables()) {
        if (num.degree_in(s) < den.degree_in(s)) {
            return false;
        }
    }
    return true;
}

}  // namespace

FieldElement::FieldElement(BaseField field) : num_(field), den_(field, 1) {}

FieldElement::FieldElement(BaseField field, long value) : num_(field, value), den_(field, 1) {}

FieldElement::FieldElement(const Scalar& value) : num_(value), den_(value.field(), 1) {}

FieldElement::FieldElement(SparsePolynomial numerator)
    : num_(std::move(numerator)), den_(num_.field(), 1)
{
}

FieldElement::FieldElement(SparsePolynomial numerator, SparsePolynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator))
{
    if (num_.field() != den_.field()) {
        throw FieldMismatch("numerator and denominator over different fields");
    }
    if (den_.is_zero()) {
        throw DivisionByZero("zero denominator");
    }
    normalize();
}

FieldElement FieldElement::symbol(BaseField field, Symbol s)
{
    return FieldElement(SparsePolynomial::variable(field, s));
}

void FieldElement::normalize()
{
    const BaseField f = num_.field();
    if (num_.is_zero()) {
        den_ = SparsePolynomial(f, 1);
        return;
    }
    if (den_.is_constant()) {
        if (!den_.constant_term().is_one()) {
            num_ = num_.scaled(den_.constant_term().inverse());
            den_ = SparsePolynomial(f, 1);
        }
        return;
    }
    const Monomial g = num_.monomial_content().gcd(den_.monomial_content());
    if (!g.is_one()) {
        num_ = num_.divided_by_monomial(g);
        den_ = den_.divided_by_monomial(g);
    }
    if (!den_.is_constant() && degree_permits_division(num_, den_)) {
        if (auto q = num_.divide_exact(den_)) {
            num_ = std::move(*q);
            den_ = SparsePolynomial(f, 1);
            return;
        }
    }
    const Scalar lc = den_.leading().second;
    if (!lc.is_one()) {
        const Scalar inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Scalar FieldElement::constant_value() const
{
    if (!is_constant()) {
        throw InvalidArgument("field element " + to_string() + " is not constant");
    }
    return num_.constant_term() / den_.constant_term();
}

std::vector<Symbol> FieldElement::variables() const
{
    auto a = num_.variables();
    auto b = den_.variables();
    std::vector<Symbol> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs)
{
    if (rhs.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = rhs;
    }
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ = den_ * rhs.den_;
    }
    normalize();
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs)
{
    return *this += -rhs;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs)
{
    if (is_zero() || rhs.is_zero()) {
        return *this = FieldElement(field());
    }
    if (den_ == rhs.num_ && !den_.is_constant()) {
        den_ = rhs.den_;
        normalize();
        return *this;
    }
    if (num_ == rhs.den_ && !num_.is_constant()) {
        num_ = rhs.num_;
        normalize();
        return *this;
    }
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs)
{
    return *this *= rhs.inverse();
}

FieldElement FieldElement::operator-() const
{
    FieldElement out = *this;
    out.num_ = -num_;
    return out;
}

FieldElement FieldElement::inverse() const
{
    if (is_zero()) {
        throw DivisionByZero("inverse of zero");
    }
    return FieldElement(den_, num_);
}

FieldElement FieldElement::derivative(Symbol s) const
{
    if (den_.is_constant()) {
        return FieldElement(num_.derivative(s));
    }
    SparsePolynomial top = num_.derivative(s) * den_ - num_ * den_.derivative(s);
    return FieldElement(std::move(top), den_ * den_);
}

bool operator==(const FieldElement& a, const FieldElement& b)
{
    if (a.den_ == b.den_) {
        return a.num_ == b.num_;
    }
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string FieldElement::to_string() const
{
    if (den_.is_constant()) {
        return num_.to_string();
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

FieldElement fe_arith(const FieldElement& a, const FieldElement& b, ArithOp op)
{
    switch (op) {
    case ArithOp::Add:
        return a + b;
    case ArithOp::Sub:
        return a - b;
    case ArithOp::Mul:
        return a * b;
    case ArithOp::Div:
        if (b.is_zero()) {
            throw DivisionByZero("division by zero field element");
        }
        return a / b;
    }
    throw InternalError("unknown arithmetic operation");
}

FieldElement evaluate(const SparsePolynomial& f, const std::map<Symbol, FieldElement>& values)
{
    const BaseField field = f.field();
    const bool polynomial_values =
        std::all_of(values.begin(), values.end(), [](const auto& kv) { return kv.second.is_polynomial(); });

    std::map<std::uint32_t, const FieldElement*> by_id;
    for (const auto& [s, v] : values) {
        by_id.emplace(s.id(), &v);
    }

    if (polynomial_values) {
        std::map<Symbol, SparsePolynomial> polys;
        for (const auto& [s, v] : values) {
            polys.emplace(s, v.numerator());
        }
        return FieldElement(f.substitute(polys));
    }

    std::map<std::pair<std::uint32_t, std::uint32_t>, FieldElement> powers;
    FieldElement out(field);
    for (const auto& [m, c] : f.terms()) {
        Monomial kept;
        FieldElement term(c);
        for (const auto& [id, e] : m.factors()) {
            auto it = by_id.find(id);
            if (it == by_id.end()) {
                kept = kept * Monomial::of(Symbol::from_id(id), e);
                continue;
            }
            auto key = std::make_pair(id, e);
            auto pit = powers.find(key);
            if (pit == powers.end()) {
                FieldElement p(field, 1);
                for (std::uint32_t k = 0; k < e; ++k) {
                    p *= *it->second;
                }
                pit = powers.emplace(key, std::move(p)).first;
            }
            term *= pit->second;
        }
        if (!kept.is_one()) {
            term *= FieldElement(SparsePolynomial::term(Scalar(field, 1), kept));
        }
        out += term;
    }
    return out;
}

}  // namespace jetspace
