#include "jetspace/symbol.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace jetspace {

namespace {

struct Registry {
    std::mutex mutex;
    std::deque<std::string> names;
    std::unordered_map<std::string_view, std::uint32_t> ids;
};

Registry& registry()
{
    static Registry r;
    return r;
}

}  // namespace

Symbol Symbol::intern(std::string_view name)
{
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    if (auto it = r.ids.find(name); it != r.ids.end()) {
        return Symbol(it->second);
    }
    const auto id = static_cast<std::uint32_t>(r.names.size());
    const auto& stored = r.names.emplace_back(name);
    r.ids.emplace(stored, id);
    return Symbol(id);
}

std::optional<Symbol> Symbol::lookup(std::string_view name)
{
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    if (auto it = r.ids.find(name); it != r.ids.end()) {
        return Symbol(it->second);
    }
    return std::nullopt;
}

Symbol Symbol::from_id(std::uint32_t id)
{
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    if (id >= r.names.size()) {
        throw std::out_of_range("unknown symbol id");
    }
    return Symbol(id);
}

const std::string& Symbol::name() const
{
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    return r.names.at(id_);
}

std::vector<Symbol> intern_all(const std::vector<std::string>& names)
{
    std::vector<Symbol> out;
    out.reserve(names.size());
    for (const auto& n : names) {
        out.push_back(Symbol::intern(n));
    }
    return out;
}

std::string jet_symbol_name(Symbol variable, std::size_t p)
{
    return variable.name() + "_" + std::to_string(p);
}

}  // namespace jetspace
