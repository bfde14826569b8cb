#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jetspace/analysis.hpp"
#include "jetspace/arc.hpp"
#include "jetspace/geometry.hpp"

namespace jetspace {

/// What the stabilization loop is expected to report for a catalog arc.
struct EmbdimExpectation {
    enum class Kind { Finite, Infinite, Unchecked };
    Kind kind = Kind::Unchecked;
    std::uint64_t value = 0;

    static EmbdimExpectation finite(std::uint64_t v) { return {Kind::Finite, v}; }
    static EmbdimExpectation infinite() { return {Kind::Infinite, 0}; }
    static EmbdimExpectation unchecked() { return {Kind::Unchecked, 0}; }

    [[nodiscard]] bool matches(const StabilizationReport& rep) const;
    [[nodiscard]] std::string to_string() const;
};

struct CatalogArc {
    std::string name;
    Arc arc;
    /// The arc is not contained in the singular locus of its variety.
    bool off_singular_locus = true;
    EmbdimExpectation embdim;
};

struct CatalogVariety {
    std::string name;
    VarietyPresentation variety;
    std::vector<CatalogArc> arcs;
};

/// A^1, A^2, the cusp, the node, the Whitney umbrella xy^2 = z^2, A_k for
/// k <= 3 and the characteristic-p umbrellas xy^p = z^p for p = 2, 3, each
/// with a few arcs.
std::vector<CatalogVariety> catalog_varieties(std::size_t precision);

/// Chart (y_1, ..., y_m) -> (y_1, y_1 y_2, ..., y_1 y_m) of the blow-up of
/// the origin in A^m. The exceptional divisor is y_1 = 0.
MorphismPresentation blowup_chart(std::size_t m, BaseField field = {});

MorphismPresentation identity_morphism(std::size_t m, BaseField field = {});

/// Normalization s -> (s^2, s^3) of the cusp.
MorphismPresentation cusp_normalization();

/// Normalization (s, r) -> (s^2, r, s r) of the Whitney umbrella.
MorphismPresentation whitney_normalization();

struct CatalogCheck {
    std::string group;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs every regression assertion of the catalog. Deterministic.
std::vector<CatalogCheck> run_catalog(const AnalysisOptions& options);

}  // namespace jetspace
