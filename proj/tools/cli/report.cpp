#include "cli/report.hpp"

#include <algorithm>
#include <sstream>

#include "jetspace/errors.hpp"

namespace jetspace::cli {

Json to_json(OrderValue v)
{
    return Json{{"kind", v.is_finite() ? "Finite" : "AtLeast"}, {"value", v.value()}};
}

OrderValue order_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("kind") || !j.contains("value") || !j.at("value").is_number_unsigned()) {
        throw ParseError("malformed order value", 0, 0);
    }
    const auto kind = j.at("kind").get<std::string>();
    const auto value = j.at("value").get<std::uint64_t>();
    if (kind == "Finite") {
        return OrderValue::finite(value);
    }
    if (kind == "AtLeast") {
        return OrderValue::at_least(value);
    }
    throw ParseError("unknown order kind '" + kind + "'", 0, 0);
}

Json to_json(const InvariantProfile& p)
{
    Json e = Json::array();
    for (std::size_t i = 0; i < p.columns; ++i) {
        e.push_back(to_json(p.e(i)));
    }
    Json c = Json::array();
    for (const auto& v : p.fitting) {
        c.push_back(to_json(v));
    }
    Json j;
    if (p.level) {
        j["level"] = *p.level;
    } else {
        j["level"] = "infinity";
    }
    j["betti"] = p.betti;
    j["torsion_factors"] = p.factors;
    j["invariant_factors"] = std::move(e);
    j["fitting"] = std::move(c);
    j["precision"] = {{"precision_limited", p.precision_limited}, {"working_precision", p.precision}};
    return j;
}

Json to_json(const StabilizationReport& r)
{
    Json seq = Json::array();
    for (const auto& row : r.sequence) {
        seq.push_back({{"n", row.n}, {"betti", row.betti}, {"residue_dim", row.residue_dim}, {"s", row.s}});
    }
    Json j;
    j["dimension"] = r.dimension;
    j["dimension_source"] = to_string(r.dimension_source);
    j["dimension_precision"] = {{"precision_limited", r.dimension_precision_limited},
                                {"working_precision", r.dimension_precision}};
    j["n_max"] = r.n_max;
    j["window"] = r.window;
    j["sequence"] = std::move(seq);
    j["verdict"] = r.verdict();
    j["stabilized"] = r.stabilized;
    j["value"] = r.value;
    j["interpretation"] = r.stabilized ? "finite" : "suspected infinite";
    j["char_p_jacobian"] = r.char_p_jacobian;
    return j;
}

Json to_json(const BtrReport& r)
{
    Json j;
    j["ord_jac_f"] = to_json(r.ord_jac_f);
    j["source"] = to_json(r.source);
    j["target"] = to_json(r.target);
    j["smooth_at_center"] = r.smooth_at_center;
    j["lower_bound_holds"] = r.lower_bound_holds;
    j["upper_bound_holds"] = r.upper_bound_holds;
    j["equality_holds"] = r.equality_holds;
    j["passed"] = r.passed();
    return j;
}

Json to_json(const MatherReport& r)
{
    Json j;
    j["q"] = r.q;
    j["ord_jac_f"] = to_json(OrderValue::finite(r.ord_jac_f));
    j["k_hat"] = r.k_hat;
    j["expected_embdim"] = r.expected;
    j["source"] = to_json(r.source);
    j["target"] = to_json(r.target);
    j["formula_holds"] = r.formula_holds;
    j["center_is_point"] = r.center_is_point;
    j["dim_target"] = r.dim_target;
    j["dim_target_source"] = to_string(r.dim_target_source);
    j["bound_holds"] = r.bound_holds;
    j["passed"] = r.passed();
    return j;
}

Json to_json(const CatalogCheck& c)
{
    return Json{{"group", c.group}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
}

namespace {

std::string scalar_text(const Json& v)
{
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_object() && v.size() == 2 && v.contains("kind") && v.contains("value")) {
        const auto value = std::to_string(v.at("value").get<std::uint64_t>());
        return v.at("kind") == "Finite" ? value : ">=" + value;
    }
    return v.dump();
}

bool is_flat(const Json& v)
{
    if (!v.is_object()) {
        return !v.is_array();
    }
    return v.size() == 2 && v.contains("kind") && v.contains("value");
}

bool is_table(const Json& arr)
{
    if (!arr.is_array() || arr.empty() || !arr.front().is_object()) {
        return false;
    }
    const Json& first = arr.front();
    return std::all_of(arr.begin(), arr.end(), [&](const Json& row) {
        if (!row.is_object() || row.size() != first.size()) {
            return false;
        }
        auto it = first.begin();
        for (const auto& [key, value] : row.items()) {
            if (key != it.key() || !is_flat(value)) {
                return false;
            }
            ++it;
        }
        return true;
    });
}

void render(const Json& v, std::size_t indent, std::ostringstream& os);

void render_table(const Json& arr, std::size_t indent, std::ostringstream& os)
{
    std::vector<std::string> keys;
    for (const auto& [key, value] : arr.front().items()) {
        keys.push_back(key);
    }
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width(keys.size());
    for (std::size_t k = 0; k < keys.size(); ++k) {
        width[k] = keys[k].size();
    }
    for (const auto& row : arr) {
        std::vector<std::string> line;
        for (std::size_t k = 0; k < keys.size(); ++k) {
            line.push_back(scalar_text(row.at(keys[k])));
            width[k] = std::max(width[k], line.back().size());
        }
        cells.push_back(std::move(line));
    }
    const std::string pad(indent, ' ');
    auto emit = [&](const std::vector<std::string>& line) {
        os << pad;
        for (std::size_t k = 0; k < line.size(); ++k) {
            os << line[k];
            if (k + 1 < line.size()) {
                os << std::string(width[k] - line[k].size() + 2, ' ');
            }
        }
        os << '\n';
    };
    emit(keys);
    for (const auto& line : cells) {
        emit(line);
    }
}

void render(const Json& v, std::size_t indent, std::ostringstream& os)
{
    const std::string pad(indent, ' ');
    if (v.is_object()) {
        for (const auto& [key, value] : v.items()) {
            if (is_flat(value)) {
                os << pad << key << ": " << scalar_text(value) << '\n';
            } else if (value.is_array() && std::all_of(value.begin(), value.end(), is_flat)) {
                std::string items;
                for (std::size_t i = 0; i < value.size(); ++i) {
                    items += (i ? ", " : "") + scalar_text(value[i]);
                }
                os << pad << key << ": [" << items << "]\n";
            } else if (is_table(value)) {
                os << pad << key << ":\n";
                render_table(value, indent + 2, os);
            } else {
                os << pad << key << ":\n";
                render(value, indent + 2, os);
            }
        }
        return;
    }
    if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            os << pad << "- [" << i << "]\n";
            render(v[i], indent + 2, os);
        }
        return;
    }
    os << pad << scalar_text(v) << '\n';
}

}  // namespace

std::string render_text(const Json& report)
{
    std::ostringstream os;
    render(report, 0, os);
    return os.str();
}

}  // namespace jetspace::cli
