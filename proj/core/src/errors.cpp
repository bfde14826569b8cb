#include "jetspace/errors.hpp"

namespace jetspace {

Error::Error(std::string name, const std::string& message)
    : std::runtime_error(message), name_(std::move(name))
{
}

NotOnVariety::NotOnVariety(std::size_t generator, std::size_t order)
    : Error("NotOnVariety", "generator " + std::to_string(generator) +
                                " does not vanish along the arc (first nonzero t-order " +
                                std::to_string(order) + ")"),
      generator_(generator),
      order_(order)
{
}

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error("ParseError", line == 0 ? message
                                    : "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                          ": " + message),
      detail_(message),
      line_(line),
      column_(column)
{
}

}  // namespace jetspace
