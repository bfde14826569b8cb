#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cli/commands.hpp"

int main(int argc, char** argv)
{
    using jetspace::cli::Format;

    CLI::App app{"jetspace: invariants of arc spaces and jet schemes"};
    app.require_subcommand(1);

    jetspace::cli::Options options;
    std::string format = "json";
    std::string document;

    const std::map<std::string, std::string> about{
        {"jet-ideal", "equations of the jet scheme X_n"},
        {"profile", "Betti number, invariant factors and Fitting invariants of Omega along arcs"},
        {"fiber-dim", "fiber dimension of the jet differentials, with the jet-Jacobian cross-check"},
        {"embdim-jet", "embedding dimension of X_n at the truncation"},
        {"embdim-arc", "embedding dimension of the arc space at the arc (stabilization loop)"},
        {"jet-codim", "jet codimension with a betti or declared dimension"},
        {"btr", "birational transformation rule along source arcs of the morphism"},
        {"divisorial", "maximal divisorial arc of a coordinate divisor on the morphism source"},
        {"mather-check", "embedding dimension at the divisorial arc against q(k+1)"},
        {"oracle-check", "fiber formula against the jet-Jacobian corank for n = 0..N"},
        {"catalog", "built-in regression catalog"},
        {"run", "every task listed in the document"}};

    for (const auto& name : jetspace::cli::command_names()) {
        auto* sub = app.add_subcommand(name, about.at(name));
        if (name == "catalog") {
            sub->add_option("document", document, "ignored; the catalog is built in");
        } else {
            sub->add_option("document", document, "problem document (JSON)")->required();
        }
        sub->add_option("--n", options.n, "jet level");
        sub->add_option("--n-max", options.n_max, "last level of the stabilization loop");
        sub->add_option("--window", options.window, "levels that must agree to call the sequence stable");
        sub->add_option("--precision", options.precision, "working precision P of arc expansions");
        sub->add_option("--level", options.level, "profile level (default: infinity)");
        sub->add_option("--q", options.q, "contact order along the divisor");
        sub->add_option("--divisor-var", options.divisor_var, "1-based source variable cutting out the divisor");
        sub->add_option("--arc", options.arc, "restrict to the named arc");
        sub->add_option("--dim-source", options.dim_source, "betti or declared")
            ->check(CLI::IsMember({"betti", "declared"}));
        sub->add_flag("--strict", options.strict, "exit 2 on precision-limited results");
        sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    }

    CLI11_PARSE(app, argc, argv);

    options.format = format == "text" ? Format::Text : Format::Json;
    const std::string command = app.get_subcommands().front()->get_name();
    std::optional<std::string> path;
    if (command != "catalog" && !document.empty()) {
        path = document;
    }
    return jetspace::cli::run(command, path, options, std::cout, std::cerr);
}
