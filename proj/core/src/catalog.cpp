#include "jetspace/catalog.hpp"

#include <functional>

#include "jetspace/errors.hpp"
#include "jetspace/expression_parser.hpp"
#include "jetspace/jets.hpp"

namespace jetspace {

bool EmbdimExpectation::matches(const StabilizationReport& rep) const
{
    switch (kind) {
    case Kind::Finite:
        return rep.stabilized && rep.value == static_cast<std::int64_t>(value);
    case Kind::Infinite:
        return !rep.stabilized;
    case Kind::Unchecked:
        return true;
    }
    return false;
}

std::string EmbdimExpectation::to_string() const
{
    switch (kind) {
    case Kind::Finite:
        return std::to_string(value);
    case Kind::Infinite:
        return "infinite";
    case Kind::Unchecked:
        return "unchecked";
    }
    return "";
}

namespace {

VarietyPresentation variety(std::string name, BaseField field, const std::vector<std::string>& vars,
                            const std::vector<std::string>& gens, std::optional<std::size_t> dim)
{
    std::vector<SparsePolynomial> polys;
    polys.reserve(gens.size());
    for (const auto& g : gens) {
        polys.push_back(parse_polynomial(g, field, vars));
    }
    return make_variety(std::move(name), field, vars, std::move(polys), dim);
}

MorphismPresentation morphism(VarietyPresentation source, VarietyPresentation target,
                              const std::vector<std::string>& comps)
{
    std::vector<std::string> names;
    for (auto s : source.variables) {
        names.push_back(s.name());
    }
    std::vector<SparsePolynomial> polys;
    for (const auto& c : comps) {
        polys.push_back(parse_polynomial(c, source.field, names));
    }
    return make_morphism(std::move(source), std::move(target), std::move(polys));
}

ComponentSpec series(const std::string& text, BaseField field, const std::vector<std::string>& symbols = {})
{
    return parse_series(text, field, symbols);
}

ComponentSpec generic(const std::string& prefix, BaseField field, const std::vector<long>& leading = {})
{
    GenericComponent g{prefix, {}};
    for (long c : leading) {
        g.leading.emplace_back(field, c);
    }
    return g;
}

Arc via(const MorphismPresentation& f, std::vector<ComponentSpec> comps, std::size_t precision)
{
    return pushforward(f, make_arc(f.source, std::move(comps), precision));
}

std::string power(const std::string& base, std::size_t e)
{
    return base + "^" + std::to_string(e);
}

VarietyPresentation affine(std::size_t m, BaseField field, const std::string& prefix)
{
    std::vector<std::string> vars;
    for (std::size_t i = 1; i <= m; ++i) {
        vars.push_back(prefix + std::to_string(i));
    }
    return variety("A" + std::to_string(m), field, vars, {}, m);
}

using Inf = EmbdimExpectation;

}  // namespace

MorphismPresentation blowup_chart(std::size_t m, BaseField field)
{
    if (m == 0) {
        throw InvalidArgument("blow-up chart needs m >= 1");
    }
    std::vector<std::string> comps{"y1"};
    for (std::size_t i = 2; i <= m; ++i) {
        comps.push_back("y1*y" + std::to_string(i));
    }
    return morphism(affine(m, field, "y"), affine(m, field, "x"), comps);
}

MorphismPresentation identity_morphism(std::size_t m, BaseField field)
{
    std::vector<std::string> comps;
    for (std::size_t i = 1; i <= m; ++i) {
        comps.push_back("y" + std::to_string(i));
    }
    return morphism(affine(m, field, "y"), affine(m, field, "x"), comps);
}

MorphismPresentation cusp_normalization()
{
    const BaseField q;
    return morphism(variety("A1", q, {"s"}, {}, 1), variety("cusp", q, {"x", "y"}, {"y^2 - x^3"}, 1),
                    {"s^2", "s^3"});
}

MorphismPresentation whitney_normalization()
{
    const BaseField q;
    return morphism(variety("A2", q, {"s", "r"}, {}, 2),
                    variety("whitney", q, {"x", "y", "z"}, {"x*y^2 - z^2"}, 2), {"s^2", "r", "s*r"});
}

std::vector<CatalogVariety> catalog_varieties(std::size_t precision)
{
    const BaseField q;
    const std::size_t p = precision;
    std::vector<CatalogVariety> out;

    {
        auto x = variety("A1", q, {"x"}, {}, 1);
        out.push_back({"A1", x,
                       {{"generic", make_arc(x, {generic("u", q)}, p), true, Inf::finite(0)},
                        {"origin", make_arc(x, {series("0", q)}, p), true, Inf::infinite()},
                        {"line", make_arc(x, {series("t", q)}, p), true, Inf::infinite()}}});
    }
    {
        auto x = variety("A2", q, {"x", "y"}, {}, 2);
        out.push_back({"A2", x,
                       {{"generic", make_arc(x, {generic("u", q), generic("v", q)}, p), true, Inf::finite(0)},
                        {"parabola", make_arc(x, {series("t", q), series("t^2", q)}, p), true, Inf::infinite()}}});
    }
    {
        const auto f = cusp_normalization();
        const auto& x = f.target;
        out.push_back({"cusp", x,
                       {{"monomial", make_arc(x, {series("t^2", q), series("t^3", q)}, p), true, Inf::infinite()},
                        {"generic-branch", via(f, {generic("u", q, {0})}, p), true, Inf::finite(2)},
                        {"smooth-generic", via(f, {generic("u", q, {1})}, p), true, Inf::finite(1)},
                        {"smooth-point", make_arc(x, {series("(1+t)^2", q), series("(1+t)^3", q)}, p), true,
                         Inf::infinite()}}});
    }
    {
        auto x = variety("node", q, {"x", "y"}, {"y^2 - x^2*(x+1)"}, 1);
        const auto f = morphism(variety("A1", q, {"s"}, {}, 1), x, {"s^2 - 1", "s^3 - s"});
        out.push_back({"node", x,
                       {{"branch", make_arc(x, {series("2*t + t^2", q), series("2*t + 3*t^2 + t^3", q)}, p), true,
                         Inf::infinite()},
                        {"generic-branch", via(f, {generic("u", q, {1})}, p), true, Inf::finite(1)}}});
    }
    {
        const auto f = whitney_normalization();
        const auto& x = f.target;
        out.push_back(
            {"whitney", x,
             {{"singular-line", make_arc(x, {series("t", q), series("0", q), series("0", q)}, p), false,
               Inf::infinite()},
              {"singular-generic", make_arc(x, {generic("u", q), series("0", q), series("0", q)}, p), false,
               Inf::infinite()},
              {"generic", via(f, {generic("u", q), generic("v", q)}, p), true, Inf::finite(0)},
              {"pinch-generic", via(f, {generic("u", q, {0}), generic("v", q)}, p), true, Inf::finite(1)}}});
    }
    for (std::size_t k = 1; k <= 3; ++k) {
        const std::string name = "A" + std::to_string(k) + "-surface";
        auto x = variety(name, q, {"x", "y", "z"}, {"x*y - " + power("z", k + 1)}, 2);
        const auto f = morphism(variety("A2", q, {"a", "b"}, {}, 2), x,
                                {power("a", k + 1), power("b", k + 1), "a*b"});
        out.push_back(
            {name, x,
             {{"monomial",
               make_arc(x, {series(power("t", k + 1), q), series(power("t", k + 1), q), series("t^2", q)}, p), true,
               Inf::infinite()},
              {"generic", via(f, {generic("u", q), generic("v", q)}, p), true, Inf::finite(0)},
              {"origin-generic", via(f, {generic("u", q, {0}), generic("v", q, {0})}, p), true,
               Inf::unchecked()}}});
    }
    for (std::uint64_t prime : {2u, 3u}) {
        const BaseField fp = BaseField::prime(prime);
        const std::string pe = std::to_string(prime);
        const std::string name = "whitney-char" + pe;
        auto x = variety(name, fp, {"x", "y", "z"}, {"x*y^" + pe + " - z^" + pe}, 2);
        const auto f = morphism(variety("A2", fp, {"s", "r"}, {}, 2), x, {"s^" + pe, "r", "s*r"});
        out.push_back(
            {name, x,
             {{"singular-line", make_arc(x, {series("t", fp), series("0", fp), series("0", fp)}, p), false,
               Inf::infinite()},
              {"diagonal", make_arc(x, {series("1", fp), series("t", fp), series("t", fp)}, p), true,
               Inf::infinite()},
              {"scaled-diagonal",
               make_arc(x, {series("1", fp), series("w*t", fp, {"w"}), series("w*t", fp, {"w"})}, p), true,
               Inf::infinite()},
              {"generic", via(f, {generic("u", fp), generic("v", fp)}, p), true, Inf::finite(0)}}});
    }
    return out;
}

namespace {

CatalogCheck guarded(std::string group, std::string name, const std::function<CatalogCheck()>& body)
{
    try {
        return body();
    } catch (const Error& e) {
        return {std::move(group), std::move(name), false, e.name() + ": " + e.what()};
    }
}

std::string join(const std::vector<std::uint64_t>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s;
}

std::string ext(const std::optional<std::uint64_t>& v)
{
    return v ? std::to_string(*v) : "inf";
}

}  // namespace

std::vector<CatalogCheck> run_catalog(const AnalysisOptions& options)
{
    std::vector<CatalogCheck> checks;
    const auto varieties = catalog_varieties(options.precision);
    constexpr std::size_t oracle_levels = 6;

    for (const auto& v : varieties) {
        for (const auto& a : v.arcs) {
            const std::string id = v.name + "/" + a.name;
            checks.push_back(guarded("oracle", id, [&] {
                std::vector<std::uint64_t> formula;
                std::vector<std::uint64_t> oracle;
                for (std::size_t n = 0; n <= oracle_levels; ++n) {
                    formula.push_back(fiber_dim_formula(a.arc, n, options.precision_cap).value);
                    oracle.push_back(jet_jacobian_corank(v.variety, n, jet_coordinates(a.arc, n)));
                }
                return CatalogCheck{"oracle", id, formula == oracle,
                                    "formula=[" + join(formula) + "] oracle=[" + join(oracle) + "]"};
            }));
            checks.push_back(guarded("embdim", id, [&] {
                const auto rep = embdim_arc(a.arc, options);
                return CatalogCheck{"embdim", id, a.embdim.matches(rep),
                                    rep.verdict() + " D=" + std::to_string(rep.dimension) +
                                        " expected=" + a.embdim.to_string()};
            }));
            if (a.off_singular_locus && v.variety.declared_dim) {
                checks.push_back(guarded("codim", id, [&] {
                    const auto emb = embdim_arc(a.arc, options);
                    const auto codim = jet_codim(a.arc, DimSource::Declared, options);
                    const bool same = emb.stabilized == codim.stabilized && emb.value == codim.value;
                    return CatalogCheck{"codim", id, same, "embdim " + emb.verdict() + " jet_codim " + codim.verdict()};
                }));
            }
        }
    }

    checks.push_back(guarded("cusp", "monomial-arc", [&] {
        const auto& cusp = varieties[2];
        const Arc& arc = cusp.arcs[0].arc;
        const auto prof = profile_of_omega(arc, std::nullopt);
        const auto ord = ord_ideal(arc, omega_presentation(cusp.variety).relations[0]);
        const auto fiber = fiber_dim_formula(arc, 3, options.precision_cap);
        const auto oracle = jet_jacobian_corank(cusp.variety, 3, jet_coordinates(arc, 3));
        const auto jet = embdim_jet(arc, 3, options.precision_cap);
        const bool ok = prof.betti == 1 && prof.factors == std::vector<std::uint64_t>{3} &&
                        ord == OrderValue::finite(3) && fiber.value == 7 && oracle == 7 && jet.value == 7;
        return CatalogCheck{"cusp", "monomial-arc", ok,
                            "profile " + to_string(prof) + " ord(Jac)=" + ord.to_string() +
                                " fiber(3)=" + std::to_string(fiber.value) + " oracle(3)=" + std::to_string(oracle) +
                                " embdim_jet(3)=" + std::to_string(jet.value)};
    }));

    checks.push_back(guarded("whitney", "1-jet-(t,0,0)", [&] {
        const auto& w = varieties[4];
        const Arc& arc = w.arcs[0].arc;
        const auto prof = profile_of_omega(arc, std::nullopt);
        const auto ord = ord_ideal(arc, omega_presentation(w.variety).relations[0]);
        const bool ok = prof.betti == 3 && prof.precision_limited && !ord.is_finite();
        return CatalogCheck{"whitney", "1-jet-(t,0,0)", ok,
                            "profile " + to_string(prof) + " ord(gradient)=" + ord.to_string()};
    }));

    struct BtrCase {
        std::string name;
        MorphismPresentation f;
        std::vector<ComponentSpec> beta;
        std::optional<std::uint64_t> ord;
        std::optional<std::uint64_t> source;
        std::optional<std::uint64_t> target;
    };
    const BaseField q;
    std::vector<BtrCase> btr_cases;
    btr_cases.push_back({"blowup-A2-q1", blowup_chart(2), {generic("u1", q, {0}), generic("u2", q)}, 1, 1, 2});
    btr_cases.push_back({"identity-A2", identity_morphism(2), {generic("u1", q), generic("u2", q)}, 0, 0, 0});
    btr_cases.push_back({"cusp-normalization", cusp_normalization(), {generic("u", q, {0})}, 1, 1, 2});
    btr_cases.push_back(
        {"whitney-normalization", whitney_normalization(), {generic("u", q, {0}), generic("v", q)}, 0, 1, 1});
    for (auto& c : btr_cases) {
        checks.push_back(guarded("btr", c.name, [&] {
            const Arc beta = make_arc(c.f.source, c.beta, options.precision);
            const auto rep = btr_check(c.f, beta, options);
            const bool ok = rep.passed() && rep.ord_jac_f.is_finite() && rep.ord_jac_f.value() == *c.ord &&
                            rep.source.embedding_dimension() == c.source &&
                            rep.target.embedding_dimension() == c.target;
            return CatalogCheck{"btr", c.name, ok,
                                "ord(Jac_f)=" + rep.ord_jac_f.to_string() +
                                    " embdim(beta)=" + ext(rep.source.embedding_dimension()) +
                                    " embdim(alpha)=" + ext(rep.target.embedding_dimension())};
        }));
    }

    for (std::size_t m : {2u, 3u}) {
        for (std::size_t qq = 1; qq <= (m == 2 ? 4u : 2u); ++qq) {
            const std::string name = "blowup-A" + std::to_string(m) + "-q" + std::to_string(qq);
            checks.push_back(guarded("mather", name, [&] {
                const auto rep = mather_discrepancy_check(blowup_chart(m), 0, qq, options);
                return CatalogCheck{"mather", name, rep.passed() && rep.k_hat == m - 1,
                                    "k_hat=" + std::to_string(rep.k_hat) +
                                        " embdim(alpha)=" + ext(rep.target.embedding_dimension()) +
                                        " expected=" + std::to_string(rep.expected) +
                                        " dim=" + std::to_string(rep.dim_target)};
            }));
        }
    }
    return checks;
}

}  // namespace jetspace
