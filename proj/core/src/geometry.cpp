#include "jetspace/geometry.hpp"

#include <algorithm>
#include <map>

#include "jetspace/errors.hpp"

namespace jetspace {

namespace {

void check_uses_only(const SparsePolynomial& f, const std::vector<Symbol>& vars, const std::string& what)
{
    for (auto s : f.variables()) {
        if (std::find(vars.begin(), vars.end(), s) == vars.end()) {
            throw UnknownVariable(what + " uses '" + s.name() + "', which is not an ambient variable");
        }
    }
}

std::vector<std::vector<SparsePolynomial>> gradients(const std::vector<SparsePolynomial>& polys,
                                                     const std::vector<Symbol>& vars)
{
    std::vector<std::vector<SparsePolynomial>> rows;
    rows.reserve(polys.size());
    for (const auto& f : polys) {
        std::vector<SparsePolynomial> row;
        row.reserve(vars.size());
        for (auto v : vars) {
            row.push_back(poly_derivative(f, v, vars));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

VarietyPresentation make_variety(std::string name, BaseField field, const std::vector<std::string>& variables,
                                 std::vector<SparsePolynomial> generators,
                                 std::optional<std::size_t> declared_dim)
{
    VarietyPresentation x;
    x.name = std::move(name);
    x.field = field;
    x.variables = intern_all(variables);
    for (std::size_t j = 0; j < generators.size(); ++j) {
        if (generators[j].field() != field) {
            throw FieldMismatch("generator " + std::to_string(j + 1) + " is over a different field");
        }
        check_uses_only(generators[j], x.variables, "generator " + std::to_string(j + 1));
    }
    x.generators = std::move(generators);
    x.declared_dim = declared_dim;
    return x;
}

MorphismPresentation make_morphism(VarietyPresentation source, VarietyPresentation target,
                                   std::vector<SparsePolynomial> components)
{
    if (components.size() != target.ambient_dim()) {
        throw InvalidArgument("morphism needs " + std::to_string(target.ambient_dim()) +
                              " components, got " + std::to_string(components.size()));
    }
    if (source.field != target.field) {
        throw FieldMismatch("source and target of a morphism are over different fields");
    }
    for (std::size_t k = 0; k < components.size(); ++k) {
        check_uses_only(components[k], source.variables, "component " + std::to_string(k + 1));
    }
    return MorphismPresentation{std::move(source), std::move(target), std::move(components)};
}

DifferentialPresentation omega_presentation(const VarietyPresentation& x)
{
    return DifferentialPresentation{x.variables, gradients(x.generators, x.variables)};
}

DifferentialPresentation relative_omega_presentation(const MorphismPresentation& f)
{
    auto rows = gradients(f.source.generators, f.source.variables);
    auto jac = gradients(f.components, f.source.variables);
    rows.insert(rows.end(), std::make_move_iterator(jac.begin()), std::make_move_iterator(jac.end()));
    return DifferentialPresentation{f.source.variables, std::move(rows)};
}

std::vector<SparsePolynomial> pulled_back_generators(const MorphismPresentation& f)
{
    std::map<Symbol, SparsePolynomial> subs;
    for (std::size_t i = 0; i < f.target.variables.size(); ++i) {
        subs.emplace(f.target.variables[i], f.components[i]);
    }
    std::vector<SparsePolynomial> out;
    out.reserve(f.target.generators.size());
    for (const auto& g : f.target.generators) {
        out.push_back(g.substitute(subs));
    }
    return out;
}

bool divisor_maps_to_point(const MorphismPresentation& f, std::size_t divisor_var)
{
    if (divisor_var >= f.source.variables.size()) {
        throw InvalidArgument("divisor variable index out of range");
    }
    std::map<Symbol, SparsePolynomial> subs;
    subs.emplace(f.source.variables[divisor_var], SparsePolynomial(f.source.field));
    return std::all_of(f.components.begin(), f.components.end(),
                       [&](const SparsePolynomial& c) { return c.substitute(subs).is_constant(); });
}

}  // namespace jetspace
