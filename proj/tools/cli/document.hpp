#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "jetspace/arc.hpp"
#include "jetspace/field.hpp"
#include "jetspace/geometry.hpp"

namespace jetspace::cli {

using Json = nlohmann::ordered_json;

struct ArcEntry {
    std::string name;
    /// Lives on the morphism source rather than on the variety.
    bool on_source = false;
    std::vector<ComponentSpec> components;
};

struct TaskEntry {
    std::string command;
    Json params;
};

/// A parsed problem file. See README.md for the format.
struct ProblemDocument {
    BaseField field;
    std::vector<std::string> transcendentals;
    VarietyPresentation variety;
    std::optional<MorphismPresentation> morphism;
    std::vector<ArcEntry> arcs;
    std::vector<TaskEntry> tasks;

    [[nodiscard]] const ArcEntry& arc(const std::string& name) const;
    [[nodiscard]] std::vector<const ArcEntry*> arcs_on(bool source) const;
};

/// Throws ParseError (with a 1-based line and column when known) or a
/// domain error from geometry.
ProblemDocument parse_document(std::string_view text);

ProblemDocument load_document(const std::string& path);

Arc build_arc(const ProblemDocument& doc, const ArcEntry& entry, std::size_t precision);

}  // namespace jetspace::cli
