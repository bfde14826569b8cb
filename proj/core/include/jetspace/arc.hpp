#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jetspace/geometry.hpp"
#include "jetspace/jets.hpp"
#include "jetspace/order.hpp"
#include "jetspace/series.hpp"

namespace jetspace {

/// A series whose coefficients are prescribed for p < leading.size() and are
/// fresh transcendentals `<prefix>_<p>` beyond: the "generic to precision P"
/// convention.
struct GenericComponent {
    std::string prefix;
    std::vector<FieldElement> leading;
};

/// One arc component: an exact rational expression in t (re-expandable), a
/// raw truncated series (capped at its precision), or a generic series.
using ComponentSpec = std::variant<SeriesExpression, TruncatedSeries, GenericComponent>;

/// Produces the components of an arc at a requested precision.
class ArcSource {
public:
    virtual ~ArcSource() = default;

    [[nodiscard]] virtual std::vector<TruncatedSeries> expand(std::size_t precision) const = 0;
    /// Largest precision the source can produce; nullopt when unbounded.
    [[nodiscard]] virtual std::optional<std::size_t> max_precision() const = 0;
};

std::shared_ptr<const ArcSource> component_source(BaseField field, std::vector<ComponentSpec> components);

/// Components of f o beta, recomputed from beta's source at each precision.
std::shared_ptr<const ArcSource> pushforward_source(const MorphismPresentation& f,
                                                    std::shared_ptr<const ArcSource> inner);

/// An arc on a variety, expanded to a working precision P and validated:
/// every generator vanishes along it modulo t^P. Raising the precision
/// returns a new, revalidated arc.
class Arc {
public:
    /// Throws NotOnVariety or PrecisionTooLow.
    Arc(VarietyPresentation variety, std::shared_ptr<const ArcSource> source, std::size_t precision);

    [[nodiscard]] const VarietyPresentation& variety() const noexcept { return variety_; }
    [[nodiscard]] std::size_t precision() const noexcept { return components_.front().precision(); }
    [[nodiscard]] const std::vector<TruncatedSeries>& components() const noexcept { return components_; }
    [[nodiscard]] const std::shared_ptr<const ArcSource>& source() const noexcept { return source_; }

    /// Whether the source can be expanded to `precision`.
    [[nodiscard]] bool can_reach(std::size_t precision) const;
    [[nodiscard]] Arc with_precision(std::size_t precision) const;

    /// Pull-back of a polynomial in the ambient variables, at precision P.
    [[nodiscard]] TruncatedSeries pull_back(const SparsePolynomial& f) const;

private:
    VarietyPresentation variety_;
    std::shared_ptr<const ArcSource> source_;
    std::vector<TruncatedSeries> components_;
};

/// Builds and validates an arc. Throws NotOnVariety(j, order) when f_j does
/// not vanish modulo t^P.
Arc make_arc(const VarietyPresentation& x, std::vector<ComponentSpec> components, std::size_t precision);

/// min over the given generators of the order of g along the arc.
OrderValue ord_ideal(const Arc& arc, const std::vector<SparsePolynomial>& generators);

/// The truncation pi_n(arc) as a point of X_n.
struct JetPoint {
    std::size_t level = 0;
    JetCoordinates coordinates;
    /// Transcendence degree of the residue field of the jet over k.
    std::size_t residue_dim = 0;
    bool char_p_jacobian = false;
};

/// Coefficients p <= n of each component. Throws PrecisionTooLow if n >= P.
JetCoordinates jet_coordinates(const Arc& arc, std::size_t n);

/// Truncation together with its residue-field dimension.
JetPoint truncate(const Arc& arc, std::size_t n);

/// Checks that every target generator vanishes along f o beta modulo t^P.
/// Throws MorphismInvalidOnArc.
void validate_morphism_on_arc(const MorphismPresentation& f, const Arc& beta);

/// The arc f o beta on the target of f, re-expandable with beta.
Arc pushforward(const MorphismPresentation& f, const Arc& beta);

}  // namespace jetspace
