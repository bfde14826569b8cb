#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jetspace/arc.hpp"
#include "jetspace/geometry.hpp"
#include "jetspace/invariant_factors.hpp"
#include "jetspace/order.hpp"

namespace jetspace {

struct AnalysisOptions {
    std::size_t precision = 24;
    std::size_t precision_cap = 192;
    std::size_t n_max = 12;
    std::size_t window = 3;
};

/// JETSPACE_PRECISION_CAP if set to a positive integer, else `fallback`.
std::size_t precision_cap_from_env(std::size_t fallback = 192);

/// (n+1) d_n + ord_alpha(Fitt^{d_n} Omega), the fiber of the jet-scheme
/// differentials at the truncation alpha_n.
struct FiberDimension {
    std::size_t level = 0;
    std::size_t betti = 0;
    OrderValue fitting_order = OrderValue::finite(0);
    std::uint64_t value = 0;
};

/// Throws PrecisionLimited if the Fitting order is still AtLeast(P) after
/// refinement.
FiberDimension fiber_dim_formula(const Arc& arc, std::size_t n, std::size_t precision_cap);

struct JetEmbeddingDimension {
    FiberDimension fiber;
    std::size_t residue_dim = 0;
    bool char_p_jacobian = false;
    std::uint64_t value = 0;
};

/// Embedding dimension of X_n at alpha_n: the fiber dimension minus the
/// residue-field dimension of the truncation.
JetEmbeddingDimension embdim_jet(const Arc& arc, std::size_t n, std::size_t precision_cap);

enum class DimSource { Betti, Declared };

std::string to_string(DimSource s);

struct StabilizationRow {
    std::size_t n = 0;
    std::size_t betti = 0;
    std::size_t residue_dim = 0;
    std::int64_t s = 0;
};

/// The sequence s_n = (n+1) D - dim(alpha_n) for n <= n_max and its verdict.
/// Stabilized means the last `window` levels share one value of s_n and
/// have d_n = D; otherwise the value is reported as suspected infinite.
struct StabilizationReport {
    std::vector<StabilizationRow> sequence;
    std::uint64_t dimension = 0;
    DimSource dimension_source = DimSource::Betti;
    /// The Betti number used for D was precision-limited.
    bool dimension_precision_limited = false;
    std::size_t dimension_precision = 0;
    bool stabilized = false;
    std::int64_t value = 0;
    std::size_t n_max = 0;
    std::size_t window = 0;
    bool char_p_jacobian = false;

    /// The stabilized value, or nullopt for a suspected infinite one.
    [[nodiscard]] std::optional<std::uint64_t> embedding_dimension() const;
    [[nodiscard]] std::string verdict() const;
};

/// Emits the sequence with a known D. Throws InternalError if it decreases
/// or drops below D - dim(alpha_0).
StabilizationReport stabilization(const Arc& arc, std::uint64_t dimension, DimSource source,
                                  const AnalysisOptions& options);

/// D is the Betti number of Omega along the arc at level infinity.
StabilizationReport embdim_arc(const Arc& arc, const AnalysisOptions& options);

/// Throws MissingDeclaredDim for DimSource::Declared without a declared dimension.
StabilizationReport jet_codim(const Arc& arc, DimSource source, const AnalysisOptions& options);

/// ord_beta(Jac_f), with Jac_f = Fitt^0(Omega_{Y/X}).
OrderValue ord_jacobian(const MorphismPresentation& f, const Arc& beta, std::size_t precision_cap);

/// Whether the Jacobian of the source ideal has rank M - dim Y at beta(0).
bool smooth_at_center(const MorphismPresentation& f, const Arc& beta, std::size_t precision_cap);

struct BtrReport {
    OrderValue ord_jac_f = OrderValue::finite(0);
    StabilizationReport source;
    StabilizationReport target;
    bool smooth_at_center = false;
    bool lower_bound_holds = false;
    bool upper_bound_holds = false;
    /// Only meaningful when smooth_at_center.
    bool equality_holds = false;

    [[nodiscard]] bool inequalities_hold() const { return lower_bound_holds && upper_bound_holds; }
    [[nodiscard]] bool passed() const { return inequalities_hold() && (!smooth_at_center || equality_holds); }
};

BtrReport btr_check(const MorphismPresentation& f, const Arc& beta, const AnalysisOptions& options);

struct DivisorialArcs {
    Arc beta;
    Arc alpha;
};

/// beta generic to precision P with y_j of order >= q (coefficients
/// u<i>_<p>), and alpha = f o beta. Requires the source of f to be affine
/// space.
DivisorialArcs divisorial_arc(const MorphismPresentation& f, std::size_t divisor_var, std::size_t q,
                              std::size_t precision);

struct MatherReport {
    std::size_t q = 0;
    std::uint64_t ord_jac_f = 0;
    std::uint64_t k_hat = 0;
    std::uint64_t expected = 0;
    StabilizationReport source;
    StabilizationReport target;
    bool formula_holds = false;
    bool center_is_point = false;
    std::uint64_t dim_target = 0;
    DimSource dim_target_source = DimSource::Betti;
    /// k_hat + 1 >= dim X; checked only when the center is a closed point.
    bool bound_holds = true;

    [[nodiscard]] bool passed() const { return formula_holds && bound_holds; }
};

/// Throws PrecisionLimited or NonDivisibleJacobianOrder.
MatherReport mather_discrepancy_check(const MorphismPresentation& f, std::size_t divisor_var, std::size_t q,
                                      const AnalysisOptions& options);

}  // namespace jetspace
