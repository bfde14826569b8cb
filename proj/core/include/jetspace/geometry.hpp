#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jetspace/polynomial.hpp"

namespace jetspace {

/// X = Spec k[x_1..x_N]/(f_1..f_r). With no generators X is affine N-space.
struct VarietyPresentation {
    std::string name;
    BaseField field;
    std::vector<Symbol> variables;
    std::vector<SparsePolynomial> generators;
    /// User-asserted dim of X at the generic point of the arcs analysed.
    std::optional<std::size_t> declared_dim;

    [[nodiscard]] std::size_t ambient_dim() const noexcept { return variables.size(); }
};

/// Builds a presentation from variable names and generator polynomials.
/// Throws UnknownVariable if a generator involves a symbol outside `variables`.
VarietyPresentation make_variety(std::string name, BaseField field, const std::vector<std::string>& variables,
                                 std::vector<SparsePolynomial> generators,
                                 std::optional<std::size_t> declared_dim = std::nullopt);

/// f: Y -> X given by N component polynomials in the variables of Y.
struct MorphismPresentation {
    VarietyPresentation source;
    VarietyPresentation target;
    std::vector<SparsePolynomial> components;
};

/// Throws InvalidArgument on shape or field mismatches.
MorphismPresentation make_morphism(VarietyPresentation source, VarietyPresentation target,
                                   std::vector<SparsePolynomial> components);

/// Cokernel presentation F_1 -> F_0 -> M -> 0 of a module of differentials:
/// one row per relation, one column per generator d(column_symbol).
struct DifferentialPresentation {
    std::vector<Symbol> column_symbols;
    std::vector<std::vector<SparsePolynomial>> relations;

    [[nodiscard]] std::size_t num_columns() const noexcept { return column_symbols.size(); }
    [[nodiscard]] std::size_t num_relations() const noexcept { return relations.size(); }
};

/// Jacobian presentation of the Kaehler differentials: row j is the gradient
/// of f_j.
DifferentialPresentation omega_presentation(const VarietyPresentation& x);

/// Presentation of the relative differentials of f: gradients of the source
/// generators followed by the gradients of the N components.
DifferentialPresentation relative_omega_presentation(const MorphismPresentation& f);

/// Composition g(components) for each target generator g.
std::vector<SparsePolynomial> pulled_back_generators(const MorphismPresentation& f);

/// True when the image of {y_j = 0} is a single closed point, i.e. every
/// component becomes a constant after setting the divisor variable to zero
/// (the source is affine space).
bool divisor_maps_to_point(const MorphismPresentation& f, std::size_t divisor_var);

}  // namespace jetspace
