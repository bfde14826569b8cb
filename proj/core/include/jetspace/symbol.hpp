#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jetspace {

/// Interned variable name. Ids are process-wide and assigned in first-use
/// order, so two symbols compare equal iff their names are equal.
class Symbol {
public:
    Symbol() = default;

    static Symbol intern(std::string_view name);
    static std::optional<Symbol> lookup(std::string_view name);
    /// Symbol for an id previously handed out by intern().
    static Symbol from_id(std::uint32_t id);

    [[nodiscard]] std::uint32_t id() const noexcept { return id_; }
    [[nodiscard]] const std::string& name() const;

    friend auto operator<=>(Symbol, Symbol) = default;

private:
    explicit Symbol(std::uint32_t id) : id_(id) {}

    std::uint32_t id_ = 0;
};

std::vector<Symbol> intern_all(const std::vector<std::string>& names);

/// Name of the jet coordinate for coefficient `p` of `variable`.
std::string jet_symbol_name(Symbol variable, std::size_t p);

}  // namespace jetspace
