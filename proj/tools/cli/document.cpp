#include "cli/document.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "cli/commands.hpp"
#include "jetspace/errors.hpp"
#include "jetspace/expression_parser.hpp"

namespace jetspace::cli {

namespace {

struct Location {
    std::size_t line = 0;
    std::size_t column = 0;
};

Location location_of(std::string_view text, std::size_t offset)
{
    Location loc{1, 1};
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++loc.line;
            loc.column = 1;
        } else {
            ++loc.column;
        }
    }
    return loc;
}

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    [[noreturn]] void fail(const std::string& path, const std::string& message) const
    {
        throw ParseError(path + ": " + message, 0, 0);
    }

    // Re-raises an expression error at its position in the document, found
    // by locating the string literal the expression came from.
    [[noreturn]] void fail_in_string(const std::string& path, const std::string& value, const ParseError& e) const
    {
        const std::string literal = Json(value).dump();
        const auto at = text_.find(literal);
        if (at == std::string_view::npos || e.column() == 0) {
            throw ParseError(path + ": " + e.detail(), e.line(), e.column());
        }
        const Location loc = location_of(text_, at + e.column());
        throw ParseError(path + ": " + e.detail(), loc.line, loc.column);
    }

    const Json& require(const Json& obj, const std::string& key, const std::string& path) const
    {
        if (!obj.is_object() || !obj.contains(key)) {
            fail(path, "missing required key '" + key + "'");
        }
        return obj.at(key);
    }

    std::string string(const Json& v, const std::string& path) const
    {
        if (!v.is_string()) {
            fail(path, "expected a string");
        }
        return v.get<std::string>();
    }

    std::vector<std::string> strings(const Json& v, const std::string& path) const
    {
        if (!v.is_array()) {
            fail(path, "expected an array of strings");
        }
        std::vector<std::string> out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            out.push_back(string(v[i], path + "[" + std::to_string(i) + "]"));
        }
        return out;
    }

    std::size_t natural(const Json& v, const std::string& path) const
    {
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
            fail(path, "expected a non-negative integer");
        }
        return v.get<std::size_t>();
    }

    SparsePolynomial polynomial(const std::string& text, BaseField field, const std::vector<std::string>& symbols,
                                const std::string& path) const
    {
        try {
            return parse_polynomial(text, field, symbols);
        } catch (const ParseError& e) {
            fail_in_string(path, text, e);
        }
    }

    SeriesExpression series(const std::string& text, BaseField field, const std::vector<std::string>& symbols,
                            const std::string& path) const
    {
        try {
            return parse_series(text, field, symbols);
        } catch (const ParseError& e) {
            fail_in_string(path, text, e);
        }
    }

    FieldElement scalar(const std::string& text, BaseField field, const std::vector<std::string>& symbols,
                        const std::string& path) const
    {
        try {
            return parse_expression(text, field, symbols);
        } catch (const ParseError& e) {
            fail_in_string(path, text, e);
        }
    }

private:
    std::string_view text_;
};

bool is_identifier(const std::string& s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
    }
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

BaseField read_field(const Reader& r, const Json& j)
{
    if (!j.contains("field")) {
        return BaseField::rationals();
    }
    const Json& f = j.at("field");
    if (f.is_string()) {
        const auto s = f.get<std::string>();
        if (s == "rationals" || s == "QQ") {
            return BaseField::rationals();
        }
        if (s.rfind("GF(", 0) == 0 && s.back() == ')') {
            try {
                return BaseField::prime(std::stoull(s.substr(3, s.size() - 4)));
            } catch (const std::logic_error&) {
                r.fail("field", "malformed prime field '" + s + "'");
            }
        }
        r.fail("field", "unknown field '" + s + "'; use \"rationals\" or {\"prime\": p}");
    }
    if (f.is_object() && f.contains("prime")) {
        return BaseField::prime(r.natural(f.at("prime"), "field.prime"));
    }
    r.fail("field", "expected \"rationals\" or {\"prime\": p}");
}

void check_names(const Reader& r, const std::vector<std::string>& names, const std::set<std::string>& taken,
                 const std::string& path)
{
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (!is_identifier(n)) {
            r.fail(path, "'" + n + "' is not an identifier");
        }
        if (n == series_variable) {
            r.fail(path, "'t' is reserved for the series variable");
        }
        if (taken.count(n) != 0 || !seen.insert(n).second) {
            r.fail(path, "name '" + n + "' is declared twice");
        }
    }
}

VarietyPresentation read_variety(const Reader& r, const Json& v, BaseField field,
                                 const std::vector<std::string>& transcendentals, const std::string& path)
{
    const std::string name = v.contains("name") ? r.string(v.at("name"), path + ".name") : "X";
    const auto vars = r.strings(r.require(v, "variables", path), path + ".variables");
    if (vars.empty()) {
        r.fail(path + ".variables", "at least one variable is required");
    }
    check_names(r, vars, {transcendentals.begin(), transcendentals.end()}, path + ".variables");
    std::vector<SparsePolynomial> gens;
    if (v.contains("generators")) {
        const auto texts = r.strings(v.at("generators"), path + ".generators");
        for (std::size_t i = 0; i < texts.size(); ++i) {
            gens.push_back(r.polynomial(texts[i], field, vars, path + ".generators[" + std::to_string(i) + "]"));
        }
    }
    std::optional<std::size_t> dim;
    if (v.contains("declared_dim")) {
        dim = r.natural(v.at("declared_dim"), path + ".declared_dim");
    }
    return make_variety(name, field, vars, std::move(gens), dim);
}

std::vector<std::string> names_of(const VarietyPresentation& x)
{
    std::vector<std::string> out;
    for (auto s : x.variables) {
        out.push_back(s.name());
    }
    return out;
}

ComponentSpec read_component(const Reader& r, const Json& c, BaseField field,
                             const std::vector<std::string>& transcendentals, const std::string& path)
{
    if (c.is_string()) {
        return r.series(c.get<std::string>(), field, transcendentals, path);
    }
    if (c.is_object() && c.contains("generic")) {
        GenericComponent g{r.string(c.at("generic"), path + ".generic"), {}};
        if (!is_identifier(g.prefix)) {
            r.fail(path + ".generic", "'" + g.prefix + "' is not an identifier");
        }
        for (const auto& t : transcendentals) {
            const auto pre = g.prefix + "_";
            if (t.rfind(pre, 0) == 0 && t.size() > pre.size() &&
                std::all_of(t.begin() + static_cast<std::ptrdiff_t>(pre.size()), t.end(),
                            [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
                r.fail(path + ".generic", "coefficient names " + pre + "<p> clash with transcendental '" + t + "'");
            }
        }
        if (c.contains("leading")) {
            const auto texts = r.strings(c.at("leading"), path + ".leading");
            for (std::size_t i = 0; i < texts.size(); ++i) {
                g.leading.push_back(
                    r.scalar(texts[i], field, transcendentals, path + ".leading[" + std::to_string(i) + "]"));
            }
        }
        return g;
    }
    r.fail(path, "expected a series string or {\"generic\": prefix, \"leading\": [...]}");
}

}  // namespace

const ArcEntry& ProblemDocument::arc(const std::string& name) const
{
    for (const auto& a : arcs) {
        if (a.name == name) {
            return a;
        }
    }
    throw InvalidArgument("no arc named '" + name + "'");
}

std::vector<const ArcEntry*> ProblemDocument::arcs_on(bool source) const
{
    std::vector<const ArcEntry*> out;
    for (const auto& a : arcs) {
        if (a.on_source == source) {
            out.push_back(&a);
        }
    }
    return out;
}

ProblemDocument parse_document(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        const Location loc = location_of(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("malformed JSON", loc.line, loc.column);
    }
    const Reader r(text);
    if (!j.is_object()) {
        r.fail("document", "expected a JSON object");
    }

    ProblemDocument doc;
    doc.field = read_field(r, j);
    if (j.contains("transcendentals")) {
        doc.transcendentals = r.strings(j.at("transcendentals"), "transcendentals");
        check_names(r, doc.transcendentals, {}, "transcendentals");
    }
    doc.variety = read_variety(r, r.require(j, "variety", "document"), doc.field, doc.transcendentals, "variety");

    if (j.contains("morphism")) {
        const Json& m = j.at("morphism");
        auto source = read_variety(r, r.require(m, "source", "morphism"), doc.field, doc.transcendentals,
                                   "morphism.source");
        const auto comps = r.strings(r.require(m, "components", "morphism"), "morphism.components");
        const auto src_names = names_of(source);
        std::vector<SparsePolynomial> polys;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            polys.push_back(
                r.polynomial(comps[i], doc.field, src_names, "morphism.components[" + std::to_string(i) + "]"));
        }
        doc.morphism = make_morphism(std::move(source), doc.variety, std::move(polys));
    }

    if (j.contains("arcs")) {
        const Json& arcs = j.at("arcs");
        if (!arcs.is_array()) {
            r.fail("arcs", "expected an array");
        }
        std::set<std::string> names;
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            const std::string path = "arcs[" + std::to_string(i) + "]";
            ArcEntry entry;
            entry.name = r.string(r.require(arcs[i], "name", path), path + ".name");
            if (!names.insert(entry.name).second) {
                r.fail(path + ".name", "duplicate arc name '" + entry.name + "'");
            }
            if (arcs[i].contains("on")) {
                const auto on = r.string(arcs[i].at("on"), path + ".on");
                if (on == "source") {
                    entry.on_source = true;
                } else if (on != "variety") {
                    r.fail(path + ".on", "expected \"variety\" or \"source\"");
                }
            }
            if (entry.on_source && !doc.morphism) {
                r.fail(path + ".on", "arc on the morphism source, but the document has no morphism");
            }
            const auto& host = entry.on_source ? doc.morphism->source : doc.variety;
            const Json& comps = r.require(arcs[i], "components", path);
            if (!comps.is_array() || comps.size() != host.ambient_dim()) {
                r.fail(path + ".components", "expected " + std::to_string(host.ambient_dim()) + " components");
            }
            for (std::size_t c = 0; c < comps.size(); ++c) {
                entry.components.push_back(read_component(r, comps[c], doc.field, doc.transcendentals,
                                                          path + ".components[" + std::to_string(c) + "]"));
            }
            doc.arcs.push_back(std::move(entry));
        }
    }

    if (j.contains("tasks")) {
        const Json& tasks = j.at("tasks");
        if (!tasks.is_array()) {
            r.fail("tasks", "expected an array");
        }
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            const std::string path = "tasks[" + std::to_string(i) + "]";
            TaskEntry t;
            t.command = r.string(r.require(tasks[i], "command", path), path + ".command");
            const auto& known = command_names();
            if (t.command == "run" || std::find(known.begin(), known.end(), t.command) == known.end()) {
                r.fail(path + ".command", "unknown task command '" + t.command + "'");
            }
            t.params = tasks[i];
            doc.tasks.push_back(std::move(t));
        }
    }
    return doc;
}

ProblemDocument load_document(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvalidArgument("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

Arc build_arc(const ProblemDocument& doc, const ArcEntry& entry, std::size_t precision)
{
    const auto& host = entry.on_source ? doc.morphism->source : doc.variety;
    return make_arc(host, entry.components, precision);
}

}  // namespace jetspace::cli
