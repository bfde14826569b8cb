#pragma once

#include <cstddef>
#include <vector>

#include "jetspace/field_element.hpp"
#include "jetspace/geometry.hpp"

namespace jetspace {

/// Equations of the jet scheme X_n in the coordinates x_{i,p}, 0 <= p <= n.
/// generators[j][p] is the coefficient of t^p in f_j(sum_p x_{i,p} t^p).
struct JetIdeal {
    std::size_t level = 0;
    std::vector<std::vector<Symbol>> jet_variables;
    std::vector<std::vector<SparsePolynomial>> generators;

    /// All jet variables ordered (i, p) with i major.
    [[nodiscard]] std::vector<Symbol> flat_variables() const;
    /// All generators ordered (j, p) with j major.
    [[nodiscard]] std::vector<SparsePolynomial> flat_generators() const;
};

/// Generates the jet-scheme equations by substituting the universal n-jet
/// into each generator and reading off t-coefficients.
JetIdeal jet_ideal(const VarietyPresentation& x, std::size_t n);

/// Coordinates x_{i,p} of an n-jet, indexed [i][p].
using JetCoordinates = std::vector<std::vector<FieldElement>>;

/// dim of the fiber of the jet-scheme differentials at `point`, computed
/// directly as (n+1)N minus the rank of the jet Jacobian at the point.
/// Throws PointNotOnJetScheme when a jet equation does not vanish there.
std::size_t jet_jacobian_corank(const VarietyPresentation& x, std::size_t n, const JetCoordinates& point);

}  // namespace jetspace
