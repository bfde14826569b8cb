#include "jetspace/arc.hpp"

#include <algorithm>
#include <map>

#include "jetspace/errors.hpp"
#include "jetspace/linear_algebra.hpp"

namespace jetspace {

namespace {

TruncatedSeries expand_generic(BaseField field, const GenericComponent& g, std::size_t precision)
{
    std::vector<FieldElement> coeffs;
    coeffs.reserve(precision);
    for (std::size_t p = 0; p < precision; ++p) {
        if (p < g.leading.size()) {
            coeffs.push_back(g.leading[p]);
        } else {
            coeffs.push_back(FieldElement::symbol(field, Symbol::intern(g.prefix + "_" + std::to_string(p))));
        }
    }
    return TruncatedSeries(std::move(coeffs));
}

class ComponentSource final : public ArcSource {
public:
    ComponentSource(BaseField field, std::vector<ComponentSpec> components)
        : field_(field), components_(std::move(components))
    {
    }

    [[nodiscard]] std::vector<TruncatedSeries> expand(std::size_t precision) const override
    {
        if (auto cap = max_precision(); cap && precision > *cap) {
            throw PrecisionTooLow("raw series components are known only to precision " + std::to_string(*cap));
        }
        std::vector<TruncatedSeries> out;
        out.reserve(components_.size());
        for (const auto& c : components_) {
            out.push_back(std::visit(
                [&](const auto& spec) -> TruncatedSeries {
                    using T = std::decay_t<decltype(spec)>;
                    if constexpr (std::is_same_v<T, SeriesExpression>) {
                        return jetspace::expand(spec, precision);
                    } else if constexpr (std::is_same_v<T, TruncatedSeries>) {
                        return spec.truncated(precision);
                    } else {
                        return expand_generic(field_, spec, precision);
                    }
                },
                c));
        }
        return out;
    }

    [[nodiscard]] std::optional<std::size_t> max_precision() const override
    {
        std::optional<std::size_t> cap;
        for (const auto& c : components_) {
            if (const auto* raw = std::get_if<TruncatedSeries>(&c)) {
                cap = cap ? std::min(*cap, raw->precision()) : raw->precision();
            }
        }
        return cap;
    }

private:
    BaseField field_;
    std::vector<ComponentSpec> components_;
};

class PushforwardSource final : public ArcSource {
public:
    PushforwardSource(MorphismPresentation f, std::shared_ptr<const ArcSource> inner)
        : f_(std::move(f)), inner_(std::move(inner))
    {
    }

    [[nodiscard]] std::vector<TruncatedSeries> expand(std::size_t precision) const override
    {
        const auto beta = inner_->expand(precision);
        std::map<Symbol, TruncatedSeries> values;
        for (std::size_t i = 0; i < f_.source.variables.size(); ++i) {
            values.emplace(f_.source.variables[i], beta[i]);
        }
        std::vector<TruncatedSeries> out;
        out.reserve(f_.components.size());
        for (const auto& c : f_.components) {
            out.push_back(evaluate(c, values, precision));
        }
        return out;
    }

    [[nodiscard]] std::optional<std::size_t> max_precision() const override { return inner_->max_precision(); }

private:
    MorphismPresentation f_;
    std::shared_ptr<const ArcSource> inner_;
};

std::map<Symbol, TruncatedSeries> as_values(const std::vector<Symbol>& vars,
                                           const std::vector<TruncatedSeries>& comps)
{
    std::map<Symbol, TruncatedSeries> values;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        values.emplace(vars[i], comps[i]);
    }
    return values;
}

}  // namespace

std::shared_ptr<const ArcSource> component_source(BaseField field, std::vector<ComponentSpec> components)
{
    return std::make_shared<ComponentSource>(field, std::move(components));
}

std::shared_ptr<const ArcSource> pushforward_source(const MorphismPresentation& f,
                                                    std::shared_ptr<const ArcSource> inner)
{
    return std::make_shared<PushforwardSource>(f, std::move(inner));
}

Arc::Arc(VarietyPresentation variety, std::shared_ptr<const ArcSource> source, std::size_t precision)
    : variety_(std::move(variety)), source_(std::move(source))
{
    if (precision == 0) {
        throw PrecisionTooLow("arc precision must be positive");
    }
    components_ = source_->expand(precision);
    if (components_.size() != variety_.ambient_dim()) {
        throw InvalidArgument("arc has " + std::to_string(components_.size()) + " components but " +
                              variety_.name + " has " + std::to_string(variety_.ambient_dim()) + " variables");
    }
    for (std::size_t j = 0; j < variety_.generators.size(); ++j) {
        const auto ord = pull_back(variety_.generators[j]).order();
        if (ord.is_finite()) {
            throw NotOnVariety(j + 1, ord.value());
        }
    }
}

bool Arc::can_reach(std::size_t precision) const
{
    const auto cap = source_->max_precision();
    return !cap || precision <= *cap;
}

Arc Arc::with_precision(std::size_t precision) const
{
    return Arc(variety_, source_, precision);
}

TruncatedSeries Arc::pull_back(const SparsePolynomial& f) const
{
    return evaluate(f, as_values(variety_.variables, components_), precision());
}

Arc make_arc(const VarietyPresentation& x, std::vector<ComponentSpec> components, std::size_t precision)
{
    if (components.size() != x.ambient_dim()) {
        throw InvalidArgument("arc needs " + std::to_string(x.ambient_dim()) + " components, got " +
                              std::to_string(components.size()));
    }
    return Arc(x, component_source(x.field, std::move(components)), precision);
}

OrderValue ord_ideal(const Arc& arc, const std::vector<SparsePolynomial>& generators)
{
    OrderValue best = OrderValue::at_least(arc.precision());
    for (const auto& g : generators) {
        best = min(best, arc.pull_back(g).order());
    }
    return best;
}

JetCoordinates jet_coordinates(const Arc& arc, std::size_t n)
{
    if (n >= arc.precision()) {
        throw PrecisionTooLow("truncation level " + std::to_string(n) + " needs precision > " +
                              std::to_string(n) + ", arc has " + std::to_string(arc.precision()));
    }
    JetCoordinates coords;
    for (const auto& c : arc.components()) {
        coords.emplace_back(c.coefficients().begin(), c.coefficients().begin() + static_cast<std::ptrdiff_t>(n + 1));
    }
    return coords;
}

JetPoint truncate(const Arc& arc, std::size_t n)
{
    JetPoint jp;
    jp.level = n;
    jp.coordinates = jet_coordinates(arc, n);
    std::vector<FieldElement> all;
    for (const auto& row : jp.coordinates) {
        all.insert(all.end(), row.begin(), row.end());
    }
    const auto td = transcendence_degree(all);
    jp.residue_dim = td.value;
    jp.char_p_jacobian = td.char_p_jacobian;
    return jp;
}

void validate_morphism_on_arc(const MorphismPresentation& f, const Arc& beta)
{
    const auto values = as_values(f.source.variables, beta.components());
    const auto pulled = pulled_back_generators(f);
    for (std::size_t j = 0; j < pulled.size(); ++j) {
        const auto ord = evaluate(pulled[j], values, beta.precision()).order();
        if (ord.is_finite()) {
            throw MorphismInvalidOnArc("target generator " + std::to_string(j + 1) +
                                       " does not vanish along f(beta) (order " + ord.to_string() + ")");
        }
    }
}

Arc pushforward(const MorphismPresentation& f, const Arc& beta)
{
    validate_morphism_on_arc(f, beta);
    return Arc(f.target, pushforward_source(f, beta.source()), beta.precision());
}

}  // namespace jetspace
