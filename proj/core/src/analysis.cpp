#include "jetspace/analysis.hpp"

#include <cstdlib>
#include <map>

#include "jetspace/errors.hpp"
#include "jetspace/linear_algebra.hpp"

namespace jetspace {

std::size_t precision_cap_from_env(std::size_t fallback)
{
    const char* raw = std::getenv("JETSPACE_PRECISION_CAP");
    if (raw == nullptr || *raw == '\0') {
        return fallback;
    }
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || v == 0) {
        return fallback;
    }
    return static_cast<std::size_t>(v);
}

FiberDimension fiber_dim_formula(const Arc& arc, std::size_t n, std::size_t precision_cap)
{
    if (n >= arc.precision()) {
        throw PrecisionTooLow("level " + std::to_string(n) + " needs precision > " + std::to_string(n));
    }
    const auto omega = omega_presentation(arc.variety());
    FiberDimension out;
    out.level = n;
    out.betti = profile_of_presentation(omega, arc, n).betti;
    out.fitting_order = profile_of_presentation(omega, arc, std::nullopt).c(out.betti);
    if (!out.fitting_order.is_finite()) {
        out.fitting_order = refined_profile(omega, arc, precision_cap).profile.c(out.betti);
    }
    if (!out.fitting_order.is_finite()) {
        throw PrecisionLimited("ord of Fitt^" + std::to_string(out.betti) + " along the arc is " +
                               out.fitting_order.to_string());
    }
    out.value = (n + 1) * out.betti + out.fitting_order.value();
    return out;
}

JetEmbeddingDimension embdim_jet(const Arc& arc, std::size_t n, std::size_t precision_cap)
{
    JetEmbeddingDimension out;
    out.fiber = fiber_dim_formula(arc, n, precision_cap);
    const JetPoint jp = truncate(arc, n);
    out.residue_dim = jp.residue_dim;
    out.char_p_jacobian = jp.char_p_jacobian;
    out.value = out.fiber.value - out.residue_dim;
    return out;
}

std::string to_string(DimSource s)
{
    return s == DimSource::Betti ? "betti" : "declared";
}

std::optional<std::uint64_t> StabilizationReport::embedding_dimension() const
{
    if (!stabilized) {
        return std::nullopt;
    }
    return static_cast<std::uint64_t>(value);
}

std::string StabilizationReport::verdict() const
{
    if (stabilized) {
        return "Stabilized(" + std::to_string(value) + ")";
    }
    return "NotStabilizedUpTo(" + std::to_string(n_max) + ")";
}

StabilizationReport stabilization(const Arc& arc_in, std::uint64_t dimension, DimSource source,
                                  const AnalysisOptions& options)
{
    if (options.window == 0 || options.window > options.n_max + 1) {
        throw InvalidArgument("window must be between 1 and n_max + 1");
    }
    Arc arc = arc_in;
    if (arc.precision() <= options.n_max) {
        if (!arc.can_reach(options.n_max + 1)) {
            throw PrecisionTooLow("arc is known only to precision " + std::to_string(arc.precision()) +
                                  ", n_max = " + std::to_string(options.n_max));
        }
        arc = arc.with_precision(options.n_max + 1);
    }

    StabilizationReport rep;
    rep.dimension = dimension;
    rep.dimension_source = source;
    rep.n_max = options.n_max;
    rep.window = options.window;

    const SeriesMatrix relations = pull_back(omega_presentation(arc.variety()), arc);
    const std::size_t columns = arc.variety().ambient_dim();
    const auto d = static_cast<std::int64_t>(dimension);
    for (std::size_t n = 0; n <= options.n_max; ++n) {
        StabilizationRow row;
        row.n = n;
        row.betti = smith_orders(relations, columns, arc.precision(), n).betti;
        const JetPoint jp = truncate(arc, n);
        row.residue_dim = jp.residue_dim;
        rep.char_p_jacobian = rep.char_p_jacobian || jp.char_p_jacobian;
        row.s = static_cast<std::int64_t>(n + 1) * d - static_cast<std::int64_t>(row.residue_dim);
        if (!rep.sequence.empty()) {
            if (row.s < rep.sequence.back().s) {
                throw InternalError("s_n decreased from " + std::to_string(rep.sequence.back().s) + " to " +
                                    std::to_string(row.s) + " at n = " + std::to_string(n));
            }
            const std::int64_t floor = d - static_cast<std::int64_t>(rep.sequence.front().residue_dim);
            if (row.s < floor) {
                throw InternalError("s_n = " + std::to_string(row.s) + " below D - dim(alpha_0) = " +
                                    std::to_string(floor));
            }
        }
        rep.sequence.push_back(row);
    }

    const std::size_t first = rep.sequence.size() - options.window;
    rep.stabilized = true;
    for (std::size_t i = first; i < rep.sequence.size(); ++i) {
        const auto& row = rep.sequence[i];
        if (row.s != rep.sequence[first].s || row.betti != dimension) {
            rep.stabilized = false;
        }
    }
    rep.value = rep.sequence.back().s;
    return rep;
}

StabilizationReport embdim_arc(const Arc& arc, const AnalysisOptions& options)
{
    const auto refined = refined_profile(omega_presentation(arc.variety()), arc, options.precision_cap);
    auto rep = stabilization(arc, refined.profile.betti, DimSource::Betti, options);
    rep.dimension_precision_limited = refined.profile.precision_limited;
    rep.dimension_precision = refined.profile.precision;
    return rep;
}

StabilizationReport jet_codim(const Arc& arc, DimSource source, const AnalysisOptions& options)
{
    if (source == DimSource::Betti) {
        return embdim_arc(arc, options);
    }
    if (!arc.variety().declared_dim) {
        throw MissingDeclaredDim(arc.variety().name + " has no declared dimension");
    }
    return stabilization(arc, *arc.variety().declared_dim, DimSource::Declared, options);
}

OrderValue ord_jacobian(const MorphismPresentation& f, const Arc& beta, std::size_t precision_cap)
{
    return refined_profile(relative_omega_presentation(f), beta, precision_cap).profile.c(0);
}

bool smooth_at_center(const MorphismPresentation& f, const Arc& beta, std::size_t precision_cap)
{
    const auto& y = f.source;
    if (y.generators.empty()) {
        return true;
    }
    std::size_t dim_y = 0;
    if (y.declared_dim) {
        dim_y = *y.declared_dim;
    } else {
        dim_y = refined_profile(omega_presentation(y), beta, precision_cap).profile.betti;
    }
    std::map<Symbol, FieldElement> center;
    for (std::size_t i = 0; i < y.variables.size(); ++i) {
        center.emplace(y.variables[i], beta.components()[i][0]);
    }
    FieldMatrix jac;
    for (const auto& row : omega_presentation(y).relations) {
        std::vector<FieldElement> r;
        r.reserve(row.size());
        for (const auto& entry : row) {
            r.push_back(evaluate(entry, center));
        }
        jac.push_back(std::move(r));
    }
    return matrix_rank(std::move(jac)) + dim_y == y.ambient_dim();
}

namespace {

// Extended naturals: nullopt is infinity.
using ExtNat = std::optional<std::uint64_t>;

bool leq(ExtNat a, ExtNat b)
{
    if (!b) {
        return true;
    }
    return a && *a <= *b;
}

ExtNat plus(ExtNat a, ExtNat b)
{
    if (!a || !b) {
        return std::nullopt;
    }
    return *a + *b;
}

ExtNat as_ext(OrderValue v)
{
    return v.is_finite() ? ExtNat(v.value()) : std::nullopt;
}

}  // namespace

BtrReport btr_check(const MorphismPresentation& f, const Arc& beta, const AnalysisOptions& options)
{
    const Arc alpha = pushforward(f, beta);
    BtrReport rep;
    rep.ord_jac_f = ord_jacobian(f, beta, options.precision_cap);
    rep.source = embdim_arc(beta, options);
    rep.target = embdim_arc(alpha, options);
    rep.smooth_at_center = smooth_at_center(f, beta, options.precision_cap);

    const ExtNat src = rep.source.embedding_dimension();
    const ExtNat tgt = rep.target.embedding_dimension();
    const ExtNat ord = as_ext(rep.ord_jac_f);
    rep.lower_bound_holds = leq(src, tgt);
    rep.upper_bound_holds = leq(tgt, plus(src, ord));
    rep.equality_holds = tgt == plus(src, ord);
    return rep;
}

DivisorialArcs divisorial_arc(const MorphismPresentation& f, std::size_t divisor_var, std::size_t q,
                              std::size_t precision)
{
    const auto& y = f.source;
    if (!y.generators.empty()) {
        throw InvalidArgument("divisorial arcs need a morphism from affine space");
    }
    if (divisor_var >= y.ambient_dim()) {
        throw InvalidArgument("divisor variable index " + std::to_string(divisor_var) + " out of range");
    }
    if (q == 0) {
        throw InvalidArgument("contact order q must be positive");
    }
    if (precision <= q) {
        throw PrecisionTooLow("precision must exceed the contact order");
    }
    std::vector<ComponentSpec> comps;
    for (std::size_t i = 0; i < y.ambient_dim(); ++i) {
        GenericComponent g{"u" + std::to_string(i + 1), {}};
        if (i == divisor_var) {
            g.leading.assign(q, FieldElement(y.field));
        }
        comps.emplace_back(std::move(g));
    }
    Arc beta = make_arc(y, std::move(comps), precision);
    Arc alpha = pushforward(f, beta);
    return DivisorialArcs{std::move(beta), std::move(alpha)};
}

MatherReport mather_discrepancy_check(const MorphismPresentation& f, std::size_t divisor_var, std::size_t q,
                                      const AnalysisOptions& options)
{
    const auto arcs = divisorial_arc(f, divisor_var, q, options.precision);
    MatherReport rep;
    rep.q = q;
    const OrderValue ord = ord_jacobian(f, arcs.beta, options.precision_cap);
    if (!ord.is_finite()) {
        throw PrecisionLimited("ord_beta(Jac_f) is " + ord.to_string());
    }
    if (ord.value() % q != 0) {
        throw NonDivisibleJacobianOrder("ord_beta(Jac_f) = " + std::to_string(ord.value()) +
                                        " is not divisible by q = " + std::to_string(q));
    }
    rep.ord_jac_f = ord.value();
    rep.k_hat = ord.value() / q;
    rep.expected = q * (rep.k_hat + 1);
    rep.source = embdim_arc(arcs.beta, options);
    rep.target = embdim_arc(arcs.alpha, options);
    rep.formula_holds = rep.target.embedding_dimension() == std::optional<std::uint64_t>(rep.expected);
    rep.center_is_point = divisor_maps_to_point(f, divisor_var);
    if (f.target.declared_dim) {
        rep.dim_target = *f.target.declared_dim;
        rep.dim_target_source = DimSource::Declared;
    } else {
        rep.dim_target = rep.target.dimension;
        rep.dim_target_source = DimSource::Betti;
    }
    if (rep.center_is_point) {
        rep.bound_holds = rep.k_hat + 1 >= rep.dim_target;
    }
    return rep;
}

}  // namespace jetspace
