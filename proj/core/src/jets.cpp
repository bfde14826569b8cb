#include "jetspace/jets.hpp"

#include <map>

#include "jetspace/errors.hpp"
#include "jetspace/linear_algebra.hpp"
#include "jetspace/series.hpp"

namespace jetspace {

std::vector<Symbol> JetIdeal::flat_variables() const
{
    std::vector<Symbol> out;
    for (const auto& row : jet_variables) {
        out.insert(out.end(), row.begin(), row.end());
    }
    return out;
}

std::vector<SparsePolynomial> JetIdeal::flat_generators() const
{
    std::vector<SparsePolynomial> out;
    for (const auto& row : generators) {
        out.insert(out.end(), row.begin(), row.end());
    }
    return out;
}

JetIdeal jet_ideal(const VarietyPresentation& x, std::size_t n)
{
    const std::size_t precision = n + 1;
    JetIdeal ideal;
    ideal.level = n;
    std::map<Symbol, TruncatedSeries> universal;
    for (auto v : x.variables) {
        std::vector<Symbol> row;
        std::vector<FieldElement> coeffs;
        for (std::size_t p = 0; p <= n; ++p) {
            const Symbol s = Symbol::intern(jet_symbol_name(v, p));
            row.push_back(s);
            coeffs.push_back(FieldElement::symbol(x.field, s));
        }
        ideal.jet_variables.push_back(std::move(row));
        universal.emplace(v, TruncatedSeries(std::move(coeffs)));
    }
    for (const auto& f : x.generators) {
        const TruncatedSeries image = evaluate(f, universal, precision);
        std::vector<SparsePolynomial> row;
        row.reserve(precision);
        for (std::size_t p = 0; p < precision; ++p) {
            row.push_back(image[p].numerator());
        }
        ideal.generators.push_back(std::move(row));
    }
    return ideal;
}

std::size_t jet_jacobian_corank(const VarietyPresentation& x, std::size_t n, const JetCoordinates& point)
{
    const JetIdeal ideal = jet_ideal(x, n);
    if (point.size() != x.ambient_dim()) {
        throw InvalidArgument("jet point has " + std::to_string(point.size()) + " components, expected " +
                              std::to_string(x.ambient_dim()));
    }
    std::map<Symbol, FieldElement> values;
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (point[i].size() < n + 1) {
            throw PrecisionTooLow("jet point component " + std::to_string(i + 1) + " has only " +
                                  std::to_string(point[i].size()) + " coefficients");
        }
        for (std::size_t p = 0; p <= n; ++p) {
            values.emplace(ideal.jet_variables[i][p], point[i][p]);
        }
    }

    const auto vars = ideal.flat_variables();
    FieldMatrix jac;
    for (std::size_t j = 0; j < ideal.generators.size(); ++j) {
        for (std::size_t p = 0; p <= n; ++p) {
            const auto& g = ideal.generators[j][p];
            if (!evaluate(g, values).is_zero()) {
                throw PointNotOnJetScheme("jet equation F_{" + std::to_string(j + 1) + "," + std::to_string(p) +
                                          "} does not vanish at the point");
            }
            std::vector<FieldElement> row;
            row.reserve(vars.size());
            for (auto v : vars) {
                const SparsePolynomial d = g.derivative(v);
                row.push_back(d.is_zero() ? FieldElement(x.field) : evaluate(d, values));
            }
            jac.push_back(std::move(row));
        }
    }
    return vars.size() - matrix_rank(std::move(jac));
}

}  // namespace jetspace
