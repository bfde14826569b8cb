#pragma once

#include <cstddef>
#include <vector>

#include "jetspace/field_element.hpp"

namespace jetspace {

using FieldMatrix = std::vector<std::vector<FieldElement>>;

/// Rank over the fraction field by fraction-carrying Gaussian elimination
/// with exact zero tests. Pivots are chosen by Markowitz cost, then by entry
/// weight, then by lowest (row, column), so the elimination is deterministic.
std::size_t matrix_rank(FieldMatrix m);

struct TranscendenceDegree {
    std::size_t value = 0;
    /// Set in positive characteristic: `value` is the Jacobian-criterion
    /// (separable) transcendence degree.
    bool char_p_jacobian = false;
};

/// Transcendence degree of k(coeffs)/k, computed as the rank of the Jacobian
/// matrix of the coefficients with respect to every symbol they involve.
TranscendenceDegree transcendence_degree(const std::vector<FieldElement>& coeffs);

}  // namespace jetspace
