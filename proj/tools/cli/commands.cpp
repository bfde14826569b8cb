#include "cli/commands.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>

#include "cli/report.hpp"
#include "jetspace/analysis.hpp"
#include "jetspace/catalog.hpp"
#include "jetspace/errors.hpp"
#include "jetspace/jets.hpp"

namespace jetspace::cli {

const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names{"jet-ideal",  "profile",     "fiber-dim",    "embdim-jet",
                                                "embdim-arc", "jet-codim",   "btr",          "divisorial",
                                                "mather-check", "oracle-check", "catalog",   "run"};
    return names;
}

namespace {

constexpr const char* tool_version = "0.1.0";

// Resolves a parameter from the command line, then the task, then a default,
// and records the value used.
class Params {
public:
    Params(const Options& options, const Json* task) : options_(options), task_(task) {}

    std::size_t natural(const std::optional<std::size_t>& flag, const std::string& key, std::size_t fallback)
    {
        const auto v = optional_natural(flag, key);
        const std::size_t out = v.value_or(fallback);
        used_[key] = out;
        return out;
    }

    std::optional<std::size_t> optional_natural(const std::optional<std::size_t>& flag, const std::string& key)
    {
        std::optional<std::size_t> v = flag;
        if (!v && task_ != nullptr && task_->contains(key)) {
            const Json& j = task_->at(key);
            if (!j.is_number_unsigned()) {
                throw ParseError("task parameter '" + key + "' must be a non-negative integer", 0, 0);
            }
            v = j.get<std::size_t>();
        }
        if (v) {
            used_[key] = *v;
        }
        return v;
    }

    std::optional<std::string> text(const std::optional<std::string>& flag, const std::string& key)
    {
        std::optional<std::string> v = flag;
        if (!v && task_ != nullptr && task_->contains(key)) {
            const Json& j = task_->at(key);
            if (!j.is_string()) {
                throw ParseError("task parameter '" + key + "' must be a string", 0, 0);
            }
            v = j.get<std::string>();
        }
        if (v) {
            used_[key] = *v;
        }
        return v;
    }

    AnalysisOptions analysis(bool stabilizing)
    {
        AnalysisOptions a;
        a.precision = natural(options_.precision, "precision", a.precision);
        if (stabilizing) {
            a.n_max = natural(options_.n_max, "n_max", a.n_max);
            a.window = natural(options_.window, "window", a.window);
        }
        a.precision_cap = precision_cap_from_env(a.precision_cap);
        used_["precision_cap"] = a.precision_cap;
        if (a.precision == 0) {
            throw InvalidArgument("precision must be positive");
        }
        return a;
    }

    [[nodiscard]] const Json& used() const { return used_; }
    [[nodiscard]] const Options& options() const { return options_; }

private:
    const Options& options_;
    const Json* task_;
    Json used_ = Json::object();
};

const Json* first_task(const ProblemDocument* doc, const std::string& command)
{
    if (doc == nullptr) {
        return nullptr;
    }
    for (const auto& t : doc->tasks) {
        if (t.command == command) {
            return &t.params;
        }
    }
    return nullptr;
}

const ProblemDocument& need_doc(const ProblemDocument* doc, const std::string& command)
{
    if (doc == nullptr) {
        throw InvalidArgument("command '" + command + "' needs a problem document");
    }
    return *doc;
}

const MorphismPresentation& need_morphism(const ProblemDocument& doc, const std::string& command)
{
    if (!doc.morphism) {
        throw InvalidArgument("command '" + command + "' needs a morphism in the document");
    }
    return *doc.morphism;
}

std::vector<const ArcEntry*> selected_arcs(const ProblemDocument& doc, Params& params, bool on_source)
{
    if (const auto name = params.text(params.options().arc, "arc")) {
        const ArcEntry& a = doc.arc(*name);
        if (a.on_source != on_source) {
            throw InvalidArgument("arc '" + *name + "' lives on the " + (a.on_source ? "morphism source" : "variety"));
        }
        return {&a};
    }
    auto arcs = doc.arcs_on(on_source);
    if (arcs.empty()) {
        throw InvalidArgument(std::string("the document has no arcs on the ") +
                              (on_source ? "morphism source" : "variety"));
    }
    return arcs;
}

DimSource parse_dim_source(const std::optional<std::string>& s)
{
    if (!s || *s == "betti") {
        return DimSource::Betti;
    }
    if (*s == "declared") {
        return DimSource::Declared;
    }
    throw InvalidArgument("dim source must be 'betti' or 'declared', got '" + *s + "'");
}

std::vector<std::string> coefficient_strings(const TruncatedSeries& s, std::size_t count)
{
    std::vector<std::string> out;
    for (std::size_t p = 0; p < count && p < s.precision(); ++p) {
        out.push_back(s[p].to_string());
    }
    return out;
}

Json arc_components(const Arc& arc, std::size_t count)
{
    Json comps = Json::object();
    for (std::size_t i = 0; i < arc.components().size(); ++i) {
        comps[arc.variety().variables[i].name()] = coefficient_strings(arc.components()[i], count);
    }
    return comps;
}

using Handler = std::function<void(Outcome&, const ProblemDocument*, Params&)>;

void cmd_jet_ideal(Outcome& out, const ProblemDocument* doc, Params& params)
{
    const auto& d = need_doc(doc, "jet-ideal");
    const std::size_t n = params.natural(params.options().n, "n", 1);
    const JetIdeal ideal = jet_ideal(d.variety, n);
    Json vars = Json::array();
    for (auto s : ideal.flat_variables()) {
        vars.push_back(s.name());
    }
    Json gens = Json::array();
    for (std::size_t j = 0; j < ideal.generators.size(); ++j) {
        for (std::size_t p = 0; p <= n; ++p) {
            gens.push_back({{"generator", j + 1}, {"p", p}, {"polynomial", ideal.generators[j][p].to_string()}});
        }
    }
    out.report["results"] = Json{{"level", n}, {"jet_variables", std::move(vars)}, {"generators", std::move(gens)}};
}

void cmd_profile(Outcome& out, const ProblemDocument* doc, Params& params)
{
    const auto& d = need_doc(doc, "profile");
    const auto opts = params.analysis(false);
    const auto level = params.optional_natural(params.options().level, "level");
    Json results = Json::array();
    for (const auto* entry : selected_arcs(d, params, false)) {
        const Arc arc = build_arc(d, *entry, opts.precision);
        const InvariantProfile prof =
            level ? profile_of_omega(arc, level)
                  : refined_profile(omega_presentation(d.variety), arc, opts.precision_cap).profile;
        out.precision_limited = out.precision_limited || prof.precision_limited;
        Json j{{"arc", entry->name}};
        j.update(to_json(prof));
        results.push_back(std::move(j));
    }
    out.report["results"] = std::move(results);
}

void cmd_fiber_dim(Outcome& out, const ProblemDocument* doc, Params& params, bool embedding)
{
    const auto& d = need_doc(doc, embedding ? "embdim-jet" : "fiber-dim");
    const auto opts = params.analysis(false);
    const std::size_t n = params.natural(params.options().n, "n", 3);
    Json results = Json::array();
    for (const auto* entry : selected_arcs(d, params, false)) {
        const Arc arc = build_arc(d, *entry, std::max(opts.precision, n + 1));
        const FiberDimension fiber = fiber_dim_formula(arc, n, opts.precision_cap);
        const std::size_t corank = jet_jacobian_corank(d.variety, n, jet_coordinates(arc, n));
        Json j{{"arc", entry->name}, {"n", n}};
        if (embedding) {
            const JetEmbeddingDimension jet = embdim_jet(arc, n, opts.precision_cap);
            j["value"] = jet.value;
            j["fiber_dim"] = fiber.value;
            j["residue_dim"] = jet.residue_dim;
            j["char_p_jacobian"] = jet.char_p_jacobian;
            j["betti_n"] = fiber.betti;
            j["fitting_order"] = to_json(fiber.fitting_order);
            j["oracle"] = corank - jet.residue_dim;
            j["agrees"] = corank - jet.residue_dim == jet.value;
        } else {
            j["value"] = fiber.value;
            j["betti_n"] = fiber.betti;
            j["fitting_order"] = to_json(fiber.fitting_order);
            j["oracle"] = corank;
            j["agrees"] = corank == fiber.value;
        }
        out.failed = out.failed || !j["agrees"].get<bool>();
        results.push_back(std::move(j));
    }
    out.report["results"] = std::move(results);
}

void cmd_stabilization(Outcome& out, const ProblemDocument* doc, Params& params, bool codim)
{
    const auto& d = need_doc(doc, codim ? "jet-codim" : "embdim-arc");
    const auto opts = params.analysis(true);
    const DimSource source = codim ? parse_dim_source(params.text(params.options().dim_source, "dim_source"))
                                   : DimSource::Betti;
    Json results = Json::array();
    for (const auto* entry : selected_arcs(d, params, false)) {
        const Arc arc = build_arc(d, *entry, opts.precision);
        const StabilizationReport rep = codim ? jet_codim(arc, source, opts) : embdim_arc(arc, opts);
        out.precision_limited = out.precision_limited || rep.dimension_precision_limited;
        Json j{{"arc", entry->name}};
        j.update(to_json(rep));
        results.push_back(std::move(j));
    }
    out.report["results"] = std::move(results);
}

void cmd_btr(Outcome& out, const ProblemDocument* doc, Params& params)
{
    const auto& d = need_doc(doc, "btr");
    const auto& f = need_morphism(d, "btr");
    const auto opts = params.analysis(true);
    Json results = Json::array();
    for (const auto* entry : selected_arcs(d, params, true)) {
        const Arc beta = build_arc(d, *entry, opts.precision);
        const BtrReport rep = btr_check(f, beta, opts);
        out.precision_limited = out.precision_limited || !rep.ord_jac_f.is_finite() ||
                                rep.source.dimension_precision_limited || rep.target.dimension_precision_limited;
        out.failed = out.failed || !rep.passed();
        Json j{{"arc", entry->name}};
        j.update(to_json(rep));
        results.push_back(std::move(j));
    }
    out.report["results"] = std::move(results);
}

std::size_t divisor_index(const MorphismPresentation& f, Params& params)
{
    const std::size_t j = params.natural(params.options().divisor_var, "divisor_var", 1);
    if (j == 0 || j > f.source.ambient_dim()) {
        throw InvalidArgument("divisor_var is a 1-based index into the source variables (1.." +
                              std::to_string(f.source.ambient_dim()) + ")");
    }
    return j - 1;
}

void cmd_divisorial(Outcome& out, const ProblemDocument* doc, Params& params)
{
    const auto& d = need_doc(doc, "divisorial");
    const auto& f = need_morphism(d, "divisorial");
    const auto opts = params.analysis(false);
    const std::size_t j = divisor_index(f, params);
    const std::size_t q = params.natural(params.options().q, "q", 1);
    const std::size_t n = params.natural(params.options().n, "n", 4);
    const auto arcs = divisorial_arc(f, j, q, opts.precision);
    const OrderValue contact = arcs.beta.components()[j].order();
    const OrderValue jac = ord_jacobian(f, arcs.beta, opts.precision_cap);
    out.precision_limited = !jac.is_finite();
    out.report["results"] = Json{{"q", q},
                                 {"divisor", f.source.variables[j].name()},
                                 {"contact_order", to_json(contact)},
                                 {"ord_jac_f", to_json(jac)},
                                 {"shown_coefficients", n + 1},
                                 {"beta", arc_components(arcs.beta, n + 1)},
                                 {"alpha", arc_components(arcs.alpha, n + 1)}};
}

void cmd_mather(Outcome& out, const ProblemDocument* doc, Params& params)
{
    const auto& d = need_doc(doc, "mather-check");
    const auto& f = need_morphism(d, "mather-check");
    const auto opts = params.analysis(true);
    const std::size_t j = divisor_index(f, params);
    const std::size_t q = params.natural(params.options().q, "q", 1);
    const MatherReport rep = mather_discrepancy_check(f, j, q, opts);
    out.failed = !rep.passed();
    out.precision_limited = rep.target.dimension_precision_limited;
    Json r{{"divisor", f.source.variables[j].name()}};
    r.update(to_json(rep));
    out.report["results"] = std::move(r);
}

void cmd_oracle(Outcome& out, const ProblemDocument* doc, Params& params)
{
    const auto& d = need_doc(doc, "oracle-check");
    const auto opts = params.analysis(false);
    const std::size_t n_top = params.natural(params.options().n, "n", 6);
    Json results = Json::array();
    for (const auto* entry : selected_arcs(d, params, false)) {
        const Arc arc = build_arc(d, *entry, std::max(opts.precision, n_top + 1));
        Json levels = Json::array();
        bool all = true;
        for (std::size_t n = 0; n <= n_top; ++n) {
            const auto formula = fiber_dim_formula(arc, n, opts.precision_cap).value;
            const auto oracle = jet_jacobian_corank(d.variety, n, jet_coordinates(arc, n));
            all = all && formula == oracle;
            levels.push_back({{"n", n}, {"formula", formula}, {"oracle", oracle}, {"agrees", formula == oracle}});
        }
        out.failed = out.failed || !all;
        results.push_back({{"arc", entry->name}, {"agrees", all}, {"levels", std::move(levels)}});
    }
    out.report["results"] = std::move(results);
}

void cmd_catalog(Outcome& out, const ProblemDocument*, Params& params)
{
    const auto opts = params.analysis(true);
    const auto checks = run_catalog(opts);
    Json rows = Json::array();
    std::size_t passed = 0;
    for (const auto& c : checks) {
        passed += c.passed ? 1 : 0;
        rows.push_back(to_json(c));
    }
    out.failed = passed != checks.size();
    out.report["results"] = Json{{"checks", std::move(rows)},
                                 {"summary", {{"total", checks.size()},
                                              {"passed", passed},
                                              {"failed", checks.size() - passed}}}};
}

const std::map<std::string, Handler>& handlers()
{
    static const std::map<std::string, Handler> table{
        {"jet-ideal", cmd_jet_ideal},
        {"profile", cmd_profile},
        {"fiber-dim", [](Outcome& o, const ProblemDocument* d, Params& p) { cmd_fiber_dim(o, d, p, false); }},
        {"embdim-jet", [](Outcome& o, const ProblemDocument* d, Params& p) { cmd_fiber_dim(o, d, p, true); }},
        {"embdim-arc", [](Outcome& o, const ProblemDocument* d, Params& p) { cmd_stabilization(o, d, p, false); }},
        {"jet-codim", [](Outcome& o, const ProblemDocument* d, Params& p) { cmd_stabilization(o, d, p, true); }},
        {"btr", cmd_btr},
        {"divisorial", cmd_divisorial},
        {"mather-check", cmd_mather},
        {"oracle-check", cmd_oracle},
        {"catalog", cmd_catalog},
    };
    return table;
}

Outcome execute_task(const std::string& command, const ProblemDocument* doc, const Options& options,
                     const Json* task)
{
    const auto& table = handlers();
    const auto it = table.find(command);
    if (it == table.end()) {
        throw InvalidArgument("unknown command '" + command + "'");
    }
    Params params(options, task);
    Outcome out;
    out.report["tool"] = "jetspace";
    out.report["version"] = tool_version;
    out.report["command"] = command;
    if (doc != nullptr) {
        out.report["field"] = doc->field.to_string();
        out.report["variety"] = doc->variety.name;
    }
    it->second(out, doc, params);
    out.report["parameters"] = params.used();
    out.report["precision_limited"] = out.precision_limited;
    out.report["passed"] = !out.failed;
    // Keep "results" last so the summary fields lead the report.
    Json results = std::move(out.report["results"]);
    out.report.erase("results");
    out.report["results"] = std::move(results);
    return out;
}

}  // namespace

Outcome execute(const std::string& command, const ProblemDocument* doc, const Options& options)
{
    if (command == "run") {
        const auto& d = need_doc(doc, "run");
        Outcome all;
        all.report["tool"] = "jetspace";
        all.report["version"] = tool_version;
        all.report["command"] = "run";
        Json reports = Json::array();
        for (const auto& task : d.tasks) {
            if (task.command == "run") {
                throw InvalidArgument("a task cannot itself be 'run'");
            }
            Outcome o = execute_task(task.command, doc, options, &task.params);
            all.precision_limited = all.precision_limited || o.precision_limited;
            all.failed = all.failed || o.failed;
            reports.push_back(std::move(o.report));
        }
        all.report["precision_limited"] = all.precision_limited;
        all.report["passed"] = !all.failed;
        all.report["reports"] = std::move(reports);
        return all;
    }
    return execute_task(command, doc, options, first_task(doc, command));
}

int run(const std::string& command, const std::optional<std::string>& document_path, const Options& options,
        std::ostream& out, std::ostream& err)
{
    try {
        std::optional<ProblemDocument> doc;
        if (document_path) {
            doc = load_document(*document_path);
        }
        const Outcome o = execute(command, doc ? &*doc : nullptr, options);
        if (options.format == Format::Json) {
            out << o.report.dump(2) << '\n';
        } else {
            out << render_text(o.report);
        }
        if (o.failed) {
            return 1;
        }
        return options.strict && o.precision_limited ? 2 : 0;
    } catch (const Error& e) {
        err << "jetspace: " << e.name() << ": " << e.what() << '\n';
        return 1;
    }
}

}  // namespace jetspace::cli
