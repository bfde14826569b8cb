#include "jetspace/expression_parser.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "jetspace/errors.hpp"

namespace jetspace {

namespace {

class Parser {
public:
    Parser(std::string_view text, BaseField field, const std::vector<std::string>& symbols)
        : text_(text), field_(field), symbols_(symbols)
    {
    }

    FieldElement parse()
    {
        FieldElement e = expr();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& message) const
    {
        throw ParseError(message, 1, pos_ + 1);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    FieldElement expr()
    {
        FieldElement acc = term();
        while (true) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    FieldElement term()
    {
        FieldElement acc = unary();
        while (true) {
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                const auto at = pos_;
                FieldElement d = unary();
                if (d.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    FieldElement unary()
    {
        if (accept('-')) {
            return -unary();
        }
        if (accept('+')) {
            return unary();
        }
        return power();
    }

    FieldElement power()
    {
        FieldElement base = atom();
        if (accept('^')) {
            skip_space();
            const auto digits = read_digits();
            if (digits.empty()) {
                fail("expected a non-negative integer exponent");
            }
            if (digits.size() > 6) {
                fail("exponent too large");
            }
            const auto k = std::stoul(std::string(digits));
            FieldElement result(field_, 1);
            for (unsigned long i = 0; i < k; ++i) {
                result *= base;
            }
            return result;
        }
        return base;
    }

    std::string_view read_digits()
    {
        const auto start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
        }
        return text_.substr(start, pos_ - start);
    }

    FieldElement atom()
    {
        skip_space();
        if (pos_ >= text_.size()) {
            fail("unexpected end of expression");
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            FieldElement inner = expr();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            const auto digits = read_digits();
            return FieldElement(Scalar(field_, mpq_class(mpz_class(std::string(digits)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
            const auto start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0 || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string name(text_.substr(start, pos_ - start));
            if (std::find(symbols_.begin(), symbols_.end(), name) == symbols_.end()) {
                pos_ = start;
                fail("unknown symbol '" + name + "'");
            }
            return FieldElement::symbol(field_, Symbol::intern(name));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    BaseField field_;
    const std::vector<std::string>& symbols_;
    std::size_t pos_ = 0;
};

std::vector<FieldElement> split_by_t(const SparsePolynomial& p, Symbol t)
{
    const auto deg = p.degree_in(t);
    std::vector<SparsePolynomial> parts(deg + 1, SparsePolynomial(p.field()));
    for (const auto& [m, c] : p.terms()) {
        const auto k = m.exponent(t);
        Monomial rest = m;
        for (std::uint32_t i = 0; i < k; ++i) {
            rest = rest.without_one(t);
        }
        parts[k] += SparsePolynomial::term(c, rest);
    }
    std::vector<FieldElement> out;
    out.reserve(parts.size());
    for (auto& part : parts) {
        out.emplace_back(std::move(part));
    }
    return out;
}

}  // namespace

FieldElement parse_expression(std::string_view text, BaseField field, const std::vector<std::string>& symbols)
{
    return Parser(text, field, symbols).parse();
}

SparsePolynomial parse_polynomial(std::string_view text, BaseField field,
                                  const std::vector<std::string>& symbols)
{
    FieldElement e = parse_expression(text, field, symbols);
    if (!e.is_polynomial()) {
        throw ParseError("'" + std::string(text) + "' is not a polynomial", 1, 1);
    }
    return e.numerator();
}

SeriesExpression parse_series(std::string_view text, BaseField field, const std::vector<std::string>& symbols)
{
    std::vector<std::string> with_t = symbols;
    with_t.emplace_back(series_variable);
    const FieldElement e = parse_expression(text, field, with_t);
    const Symbol t = Symbol::intern(series_variable);
    auto num = split_by_t(e.numerator(), t);
    auto den = split_by_t(e.denominator(), t);
    return SeriesExpression(std::move(num), std::move(den));
}

}  // namespace jetspace
