#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jetspace/arc.hpp"
#include "jetspace/geometry.hpp"
#include "jetspace/order.hpp"
#include "jetspace/series.hpp"

namespace jetspace {

/// Rows are relations, columns are module generators.
using SeriesMatrix = std::vector<std::vector<TruncatedSeries>>;

/// nullopt stands for level infinity, computed to the working precision.
using ProfileLevel = std::optional<std::size_t>;

/// Decomposition of a finitely presented module pulled back to L[t]/(t^{n+1})
/// (or to L[[t]] modulo t^P): Betti number, invariant factors, Fitting
/// invariants.
struct InvariantProfile {
    std::size_t betti = 0;
    /// Orders of the torsion summands, descending: e_d >= e_{d+1} >= ...
    std::vector<std::uint64_t> factors;
    /// c_0, ..., c_N where N is the number of module generators.
    std::vector<OrderValue> fitting;
    /// Level infinity only: some relations vanished modulo t^P, so the
    /// Betti number is an upper bound rather than the final value.
    bool precision_limited = false;
    ProfileLevel level;
    std::size_t precision = 0;
    std::size_t columns = 0;

    /// e_i for 0 <= i < N; the cap (n+1, or AtLeast(P) at level infinity)
    /// when i < d.
    [[nodiscard]] OrderValue e(std::size_t i) const;
    /// c_i; Finite(0) for i >= N.
    [[nodiscard]] OrderValue c(std::size_t i) const;
};

/// Diagonalizes `m` over L[t]/(t^P) by iterated minimal-order pivoting. At a
/// finite level n the entries are first truncated to precision n+1.
InvariantProfile smith_orders(const SeriesMatrix& m, std::size_t columns, std::size_t precision,
                              ProfileLevel level = std::nullopt);

/// Largest matrix dimension accepted by fitting_minor_oracle.
inline constexpr std::size_t minor_oracle_limit = 6;

/// Order of Fitt^i: the minimum order of the (N-i)x(N-i) minors, computed by
/// cofactor expansion. Throws MatrixTooLarge beyond minor_oracle_limit.
OrderValue fitting_minor_oracle(const SeriesMatrix& m, std::size_t columns, std::size_t precision, std::size_t i);

/// The relation matrix of `presentation` evaluated along the arc.
SeriesMatrix pull_back(const DifferentialPresentation& presentation, const Arc& arc);

InvariantProfile profile_of_presentation(const DifferentialPresentation& presentation, const Arc& arc,
                                         ProfileLevel level);

InvariantProfile profile_of_omega(const Arc& arc, ProfileLevel level);

/// Level-infinity profile with precision refinement: while the profile is
/// precision-limited and the arc can be re-expanded, the precision doubles,
/// up to `precision_cap`.
struct RefinedProfile {
    InvariantProfile profile;
    Arc arc;
};

RefinedProfile refined_profile(const DifferentialPresentation& presentation, const Arc& arc,
                               std::size_t precision_cap);

std::string to_string(const InvariantProfile& profile);

}  // namespace jetspace
