#include "jetspace/series.hpp"

#include <algorithm>
#include <sstream>

#include "jetspace/errors.hpp"

namespace jetspace {

TruncatedSeries::TruncatedSeries(BaseField field, std::size_t precision)
    : field_(field), coeffs_(precision, FieldElement(field))
{
    if (precision == 0) {
        throw InvalidArgument("series precision must be positive");
    }
}

TruncatedSeries::TruncatedSeries(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw InvalidArgument("series precision must be positive");
    }
    field_ = coeffs_.front().field();
}

TruncatedSeries TruncatedSeries::constant(const FieldElement& c, std::size_t precision)
{
    return monomial(c, 0, precision);
}

TruncatedSeries TruncatedSeries::monomial(const FieldElement& c, std::size_t k, std::size_t precision)
{
    TruncatedSeries s(c.field(), precision);
    if (k < precision) {
        s.coeffs_[k] = c;
    }
    return s;
}

bool TruncatedSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.is_zero(); });
}

OrderValue TruncatedSeries::order() const
{
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) {
            return OrderValue::finite(i);
        }
    }
    return OrderValue::at_least(coeffs_.size());
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs)
{
    coeffs_.resize(std::min(precision(), rhs.precision()), FieldElement(field_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs)
{
    coeffs_.resize(std::min(precision(), rhs.precision()), FieldElement(field_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const std::size_t p = std::min(a.precision(), b.precision());
    TruncatedSeries out(a.field_, p);
    std::vector<std::size_t> nz_b;
    for (std::size_t j = 0; j < p; ++j) {
        if (!b.coeffs_[j].is_zero()) {
            nz_b.push_back(j);
        }
    }
    for (std::size_t i = 0; i < p; ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (auto j : nz_b) {
            if (i + j >= p) {
                break;
            }
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

TruncatedSeries TruncatedSeries::scaled(const FieldElement& c) const
{
    TruncatedSeries out = *this;
    for (auto& x : out.coeffs_) {
        if (!x.is_zero()) {
            x *= c;
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t precision) const
{
    if (precision == 0 || precision > coeffs_.size()) {
        throw PrecisionTooLow("cannot truncate a series of precision " + std::to_string(coeffs_.size()) +
                              " to precision " + std::to_string(precision));
    }
    return TruncatedSeries(std::vector<FieldElement>(coeffs_.begin(), coeffs_.begin() + precision));
}

TruncatedSeries TruncatedSeries::shifted_down(std::size_t e) const
{
    if (e >= coeffs_.size()) {
        throw PrecisionTooLow("shift exhausts the precision");
    }
    for (std::size_t i = 0; i < e; ++i) {
        if (!coeffs_[i].is_zero()) {
            throw InvalidArgument("series is not divisible by t^" + std::to_string(e));
        }
    }
    return TruncatedSeries(std::vector<FieldElement>(coeffs_.begin() + e, coeffs_.end()));
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return a.coeffs_ == b.coeffs_;
}

std::string TruncatedSeries::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        os << "(" << coeffs_[i].to_string() << ")";
        if (i > 0) {
            os << "*t^" << i;
        }
    }
    if (first) {
        os << "0";
    }
    os << " + O(t^" << coeffs_.size() << ")";
    return os.str();
}

TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op)
{
    switch (op) {
    case SeriesOp::Add:
        return a + b;
    case SeriesOp::Sub:
        return a - b;
    case SeriesOp::Mul:
        return a * b;
    }
    throw InternalError("unknown series operation");
}

TruncatedSeries series_invert(const TruncatedSeries& a)
{
    if (a[0].is_zero()) {
        throw NotAUnit("series of order " + a.order().to_string() + " is not a unit");
    }
    const std::size_t p = a.precision();
    std::vector<FieldElement> inv(p, FieldElement(a.field()));
    const FieldElement a0_inv = a[0].inverse();
    inv[0] = a0_inv;
    for (std::size_t k = 1; k < p; ++k) {
        FieldElement acc(a.field());
        for (std::size_t j = 1; j <= k; ++j) {
            if (!a[j].is_zero() && !inv[k - j].is_zero()) {
                acc += a[j] * inv[k - j];
            }
        }
        inv[k] = -(acc * a0_inv);
    }
    return TruncatedSeries(std::move(inv));
}

SeriesExpression::SeriesExpression(std::vector<FieldElement> numerator, std::vector<FieldElement> denominator)
    : num_(std::move(numerator)), den_(std::move(denominator))
{
    if (den_.empty() || den_.front().is_zero()) {
        throw DenominatorNotUnit("denominator of a series expression must have a nonzero constant term");
    }
}

SeriesExpression::SeriesExpression(std::vector<FieldElement> numerator) : num_(std::move(numerator))
{
    if (num_.empty()) {
        throw InvalidArgument("polynomial series expression needs at least one coefficient");
    }
    den_.emplace_back(num_.front().field(), 1);
}

TruncatedSeries expand(const SeriesExpression& e, std::size_t precision)
{
    if (precision == 0) {
        throw InvalidArgument("expansion precision must be positive");
    }
    const auto& num = e.numerator();
    const auto& den = e.denominator();
    const BaseField field = e.field();
    std::vector<FieldElement> c(precision, FieldElement(field));
    const bool constant_denominator = den.size() == 1;
    const FieldElement d0_inv = den.front().inverse();
    for (std::size_t k = 0; k < precision; ++k) {
        FieldElement acc = k < num.size() ? num[k] : FieldElement(field);
        if (!constant_denominator) {
            for (std::size_t j = 1; j <= k && j < den.size(); ++j) {
                if (!den[j].is_zero() && !c[k - j].is_zero()) {
                    acc -= den[j] * c[k - j];
                }
            }
        }
        c[k] = acc * d0_inv;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries evaluate(const SparsePolynomial& f, const std::map<Symbol, TruncatedSeries>& values,
                         std::size_t precision)
{
    const BaseField field = f.field();
    std::map<std::uint32_t, std::vector<TruncatedSeries>> powers;
    for (const auto& [s, v] : values) {
        if (v.precision() < precision) {
            throw PrecisionTooLow("series value has precision " + std::to_string(v.precision()) +
                                  " < " + std::to_string(precision));
        }
        const auto deg = f.degree_in(s);
        if (deg == 0) {
            continue;
        }
        std::vector<TruncatedSeries> pw;
        pw.reserve(deg + 1);
        pw.push_back(TruncatedSeries::constant(FieldElement(field, 1), precision));
        const TruncatedSeries base = v.truncated(precision);
        for (std::uint32_t k = 1; k <= deg; ++k) {
            pw.push_back(k == 1 ? base : pw.back() * base);
        }
        powers.emplace(s.id(), std::move(pw));
    }

    TruncatedSeries out(field, precision);
    for (const auto& [m, c] : f.terms()) {
        Monomial kept;
        std::vector<const TruncatedSeries*> factors;
        for (const auto& [id, e] : m.factors()) {
            auto it = powers.find(id);
            if (it == powers.end()) {
                kept = kept * Monomial::of(Symbol::from_id(id), e);
            } else {
                factors.push_back(&it->second[e]);
            }
        }
        const FieldElement coeff(SparsePolynomial::term(c, kept));
        if (factors.empty()) {
            out += TruncatedSeries::constant(coeff, precision);
            continue;
        }
        TruncatedSeries term = *factors.front();
        for (std::size_t i = 1; i < factors.size(); ++i) {
            term = term * *factors[i];
        }
        out += term.scaled(coeff);
    }
    return out;
}

}  // namespace jetspace
