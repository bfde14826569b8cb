#include "jetspace/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "jetspace/errors.hpp"

namespace jetspace {

Monomial Monomial::of(Symbol s, std::uint32_t exponent)
{
    Monomial m;
    if (exponent > 0) {
        m.factors_.emplace_back(s.id(), exponent);
    }
    return m;
}

std::uint32_t Monomial::exponent(Symbol s) const
{
    auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{s.id(), 0},
                               [](const Factor& a, const Factor& b) { return a.first < b.first; });
    return (it != factors_.end() && it->first == s.id()) ? it->second : 0;
}

std::uint64_t Monomial::total_degree() const
{
    std::uint64_t d = 0;
    for (const auto& f : factors_) {
        d += f.second;
    }
    return d;
}

Monomial Monomial::operator*(const Monomial& rhs) const
{
    Monomial out;
    out.factors_.reserve(factors_.size() + rhs.factors_.size());
    auto a = factors_.begin();
    auto b = rhs.factors_.begin();
    while (a != factors_.end() || b != rhs.factors_.end()) {
        if (b == rhs.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return out;
}

bool Monomial::divides(const Monomial& rhs) const
{
    auto b = rhs.factors_.begin();
    for (const auto& f : factors_) {
        while (b != rhs.factors_.end() && b->first < f.first) {
            ++b;
        }
        if (b == rhs.factors_.end() || b->first != f.first || b->second < f.second) {
            return false;
        }
    }
    return true;
}

Monomial Monomial::quotient_of(const Monomial& rhs) const
{
    Monomial out;
    auto a = factors_.begin();
    for (const auto& f : rhs.factors_) {
        while (a != factors_.end() && a->first < f.first) {
            ++a;
        }
        std::uint32_t e = f.second;
        if (a != factors_.end() && a->first == f.first) {
            e -= a->second;
        }
        if (e > 0) {
            out.factors_.emplace_back(f.first, e);
        }
    }
    return out;
}

Monomial Monomial::gcd(const Monomial& rhs) const
{
    Monomial out;
    auto b = rhs.factors_.begin();
    for (const auto& f : factors_) {
        while (b != rhs.factors_.end() && b->first < f.first) {
            ++b;
        }
        if (b != rhs.factors_.end() && b->first == f.first) {
            out.factors_.emplace_back(f.first, std::min(f.second, b->second));
        }
    }
    return out;
}

Monomial Monomial::without_one(Symbol s) const
{
    Monomial out = *this;
    for (auto it = out.factors_.begin(); it != out.factors_.end(); ++it) {
        if (it->first == s.id()) {
            if (--it->second == 0) {
                out.factors_.erase(it);
            }
            break;
        }
    }
    return out;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const
{
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    const auto n = std::min(fa.size(), fb.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (fa[i].first != fb[i].first) {
            // The side holding the lower id has a positive exponent the other lacks.
            return fa[i].first > fb[i].first;
        }
        if (fa[i].second != fb[i].second) {
            return fa[i].second < fb[i].second;
        }
    }
    return fa.size() < fb.size();
}

SparsePolynomial::SparsePolynomial(BaseField field, long constant) : field_(field)
{
    add_term(Monomial{}, Scalar(field, constant));
}

SparsePolynomial::SparsePolynomial(const Scalar& constant) : field_(constant.field())
{
    add_term(Monomial{}, constant);
}

SparsePolynomial SparsePolynomial::variable(BaseField field, Symbol s)
{
    SparsePolynomial p(field);
    p.terms_.emplace(Monomial::of(s), Scalar(field, 1));
    return p;
}

SparsePolynomial SparsePolynomial::term(const Scalar& coefficient, const Monomial& m)
{
    SparsePolynomial p(coefficient.field());
    p.add_term(m, coefficient);
    return p;
}

void SparsePolynomial::add_term(const Monomial& m, const Scalar& c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

bool SparsePolynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Scalar SparsePolynomial::constant_term() const
{
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Scalar(field_, 0) : it->second;
}

std::uint64_t SparsePolynomial::total_degree() const
{
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) {
        d = std::max(d, m.total_degree());
    }
    return d;
}

std::uint32_t SparsePolynomial::degree_in(Symbol s) const
{
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) {
        d = std::max(d, m.exponent(s));
    }
    return d;
}

std::vector<Symbol> SparsePolynomial::variables() const
{
    std::set<std::uint32_t> ids;
    for (const auto& [m, c] : terms_) {
        for (const auto& f : m.factors()) {
            ids.insert(f.first);
        }
    }
    std::vector<Symbol> out;
    out.reserve(ids.size());
    for (auto id : ids) {
        out.push_back(Symbol::from_id(id));
    }
    return out;
}

const std::pair<const Monomial, Scalar>& SparsePolynomial::leading() const
{
    if (terms_.empty()) {
        throw InternalError("leading term of the zero polynomial");
    }
    return *terms_.rbegin();
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& rhs)
{
    if (field_ != rhs.field_) {
        throw FieldMismatch("polynomials over different fields");
    }
    for (const auto& [m, c] : rhs.terms_) {
        add_term(m, c);
    }
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& rhs)
{
    if (field_ != rhs.field_) {
        throw FieldMismatch("polynomials over different fields");
    }
    for (const auto& [m, c] : rhs.terms_) {
        add_term(m, -c);
    }
    return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b)
{
    if (a.field_ != b.field_) {
        throw FieldMismatch("polynomials over different fields");
    }
    SparsePolynomial out(a.field_);
    if (a.is_zero() || b.is_zero()) {
        return out;
    }
    if (a.is_constant()) {
        return b.scaled(a.constant_term());
    }
    if (b.is_constant()) {
        return a.scaled(b.constant_term());
    }
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

SparsePolynomial& SparsePolynomial::operator*=(const SparsePolynomial& rhs)
{
    *this = *this * rhs;
    return *this;
}

SparsePolynomial SparsePolynomial::operator-() const
{
    SparsePolynomial out(field_);
    for (const auto& [m, c] : terms_) {
        out.terms_.emplace_hint(out.terms_.end(), m, -c);
    }
    return out;
}

SparsePolynomial SparsePolynomial::scaled(const Scalar& c) const
{
    SparsePolynomial out(field_);
    if (c.is_zero()) {
        return out;
    }
    for (const auto& [m, v] : terms_) {
        out.terms_.emplace_hint(out.terms_.end(), m, v * c);
    }
    return out;
}

SparsePolynomial SparsePolynomial::times_monomial(const Monomial& mono) const
{
    SparsePolynomial out(field_);
    for (const auto& [m, c] : terms_) {
        out.terms_.emplace(m * mono, c);
    }
    return out;
}

SparsePolynomial SparsePolynomial::divided_by_monomial(const Monomial& mono) const
{
    SparsePolynomial out(field_);
    for (const auto& [m, c] : terms_) {
        out.terms_.emplace(mono.quotient_of(m), c);
    }
    return out;
}

SparsePolynomial SparsePolynomial::pow(std::uint32_t k) const
{
    SparsePolynomial result(field_, 1);
    SparsePolynomial base = *this;
    while (k > 0) {
        if (k & 1U) {
            result *= base;
        }
        k >>= 1U;
        if (k > 0) {
            base *= base;
        }
    }
    return result;
}

SparsePolynomial SparsePolynomial::derivative(Symbol s) const
{
    SparsePolynomial out(field_);
    for (const auto& [m, c] : terms_) {
        const auto e = m.exponent(s);
        if (e == 0) {
            continue;
        }
        out.add_term(m.without_one(s), c.times(e));
    }
    return out;
}

SparsePolynomial SparsePolynomial::substitute(const std::map<Symbol, SparsePolynomial>& values) const
{
    std::map<std::uint32_t, const SparsePolynomial*> by_id;
    for (const auto& [s, v] : values) {
        by_id.emplace(s.id(), &v);
    }
    std::map<std::pair<std::uint32_t, std::uint32_t>, SparsePolynomial> powers;
    SparsePolynomial out(field_);
    for (const auto& [m, c] : terms_) {
        Monomial kept;
        std::vector<const SparsePolynomial*> factors;
        for (const auto& f : m.factors()) {
            auto it = by_id.find(f.first);
            if (it == by_id.end()) {
                kept = kept * Monomial::of(Symbol::from_id(f.first), f.second);
                continue;
            }
            auto key = std::make_pair(f.first, f.second);
            auto pit = powers.find(key);
            if (pit == powers.end()) {
                pit = powers.emplace(key, it->second->pow(f.second)).first;
            }
            factors.push_back(&pit->second);
        }
        SparsePolynomial term = SparsePolynomial::term(c, kept);
        for (const auto* f : factors) {
            term *= *f;
        }
        out += term;
    }
    return out;
}

std::optional<SparsePolynomial> SparsePolynomial::divide_exact(const SparsePolynomial& divisor) const
{
    if (divisor.is_zero()) {
        throw DivisionByZero("polynomial division by zero");
    }
    SparsePolynomial quotient(field_);
    if (is_zero()) {
        return quotient;
    }
    if (divisor.is_constant()) {
        return scaled(divisor.constant_term().inverse());
    }
    const auto& [lm, lc] = divisor.leading();
    const Scalar lc_inv = lc.inverse();
    SparsePolynomial rest = *this;
    while (!rest.is_zero()) {
        const auto& [rm, rc] = rest.leading();
        if (!lm.divides(rm)) {
            return std::nullopt;
        }
        const Monomial q = lm.quotient_of(rm);
        const Scalar c = rc * lc_inv;
        quotient.add_term(q, c);
        SparsePolynomial step = divisor.times_monomial(q).scaled(c);
        rest -= step;
    }
    return quotient;
}

Monomial SparsePolynomial::monomial_content() const
{
    if (terms_.empty()) {
        return Monomial{};
    }
    Monomial g = terms_.begin()->first;
    for (const auto& [m, c] : terms_) {
        g = g.gcd(m);
        if (g.is_one()) {
            break;
        }
    }
    return g;
}

bool operator==(const SparsePolynomial& a, const SparsePolynomial& b)
{
    if (a.field_ != b.field_) {
        throw FieldMismatch("polynomials over different fields");
    }
    return a.terms_ == b.terms_;
}

std::string SparsePolynomial::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string coeff;
        bool negative = false;
        if (field_.is_rationals() && sgn(c.value()) < 0) {
            negative = true;
            coeff = (-c).to_string();
        } else {
            coeff = c.to_string();
        }
        if (first) {
            os << (negative ? "-" : "");
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const bool unit = coeff == "1";
        if (m.is_one()) {
            os << coeff;
            continue;
        }
        if (!unit) {
            os << coeff << "*";
        }
        bool first_factor = true;
        for (const auto& [id, e] : m.factors()) {
            if (!first_factor) {
                os << "*";
            }
            first_factor = false;
            os << Symbol::from_id(id).name();
            if (e > 1) {
                os << "^" << e;
            }
        }
    }
    return os.str();
}

SparsePolynomial poly_derivative(const SparsePolynomial& f, Symbol var,
                                 const std::vector<Symbol>& ring_variables)
{
    if (std::find(ring_variables.begin(), ring_variables.end(), var) == ring_variables.end()) {
        throw UnknownVariable("'" + var.name() + "' is not a variable of the polynomial ring");
    }
    return f.derivative(var);
}

}  // namespace jetspace
