#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jetspace {

/// Base class of every error raised by the library. `name()` is the stable
/// identifier reported by the CLI (e.g. "NotOnVariety").
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define JETSPACE_DECLARE_ERROR(Type)                                      \
    class Type : public Error {                                           \
    public:                                                               \
        explicit Type(const std::string& message) : Error(#Type, message) \
        {                                                                 \
        }                                                                 \
    }

JETSPACE_DECLARE_ERROR(DivisionByZero);
JETSPACE_DECLARE_ERROR(FieldMismatch);
JETSPACE_DECLARE_ERROR(InvalidField);
JETSPACE_DECLARE_ERROR(UnknownVariable);
JETSPACE_DECLARE_ERROR(NotAUnit);
JETSPACE_DECLARE_ERROR(DenominatorNotUnit);
JETSPACE_DECLARE_ERROR(PrecisionTooLow);
JETSPACE_DECLARE_ERROR(PointNotOnJetScheme);
JETSPACE_DECLARE_ERROR(MatrixTooLarge);
JETSPACE_DECLARE_ERROR(PrecisionLimited);
JETSPACE_DECLARE_ERROR(MorphismInvalidOnArc);
JETSPACE_DECLARE_ERROR(MissingDeclaredDim);
JETSPACE_DECLARE_ERROR(NonDivisibleJacobianOrder);
JETSPACE_DECLARE_ERROR(InvalidArgument);
JETSPACE_DECLARE_ERROR(InternalError);

#undef JETSPACE_DECLARE_ERROR

/// A generator does not vanish along an arc. `generator` is 1-based.
class NotOnVariety : public Error {
public:
    NotOnVariety(std::size_t generator, std::size_t order);

    [[nodiscard]] std::size_t generator() const noexcept { return generator_; }
    [[nodiscard]] std::size_t order() const noexcept { return order_; }

private:
    std::size_t generator_;
    std::size_t order_;
};

/// Malformed input text. Line and column are 1-based; zero means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }
    /// The message without the location prefix.
    [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

private:
    std::string detail_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace jetspace
