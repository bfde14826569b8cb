#include "jetspace/invariant_factors.hpp"

#include <algorithm>
#include <functional>

#include "jetspace/errors.hpp"

namespace jetspace {

OrderValue InvariantProfile::e(std::size_t i) const
{
    if (i >= columns) {
        throw InvalidArgument("invariant factor index " + std::to_string(i) + " out of range");
    }
    if (i < betti) {
        return level ? OrderValue::finite(*level + 1) : OrderValue::at_least(precision);
    }
    return OrderValue::finite(factors[i - betti]);
}

OrderValue InvariantProfile::c(std::size_t i) const
{
    return i < fitting.size() ? fitting[i] : OrderValue::finite(0);
}

namespace {

// The series s / t^e lifted back to precision P by zero padding, so that
// t^e * result == s modulo t^P whenever ord(s) >= e.
TruncatedSeries lifted_quotient(const TruncatedSeries& s, std::size_t e, std::size_t precision)
{
    std::vector<FieldElement> coeffs;
    coeffs.reserve(precision);
    for (std::size_t k = e; k < precision; ++k) {
        coeffs.push_back(s[k]);
    }
    for (std::size_t k = 0; k < e; ++k) {
        coeffs.emplace_back(s.field());
    }
    return TruncatedSeries(std::move(coeffs));
}

void check_shape(const SeriesMatrix& m, std::size_t columns, std::size_t precision)
{
    for (const auto& row : m) {
        if (row.size() != columns) {
            throw InvalidArgument("matrix row has " + std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(columns));
        }
        for (const auto& entry : row) {
            if (entry.precision() < precision) {
                throw PrecisionTooLow("matrix entry known to precision " + std::to_string(entry.precision()) +
                                      ", need " + std::to_string(precision));
            }
        }
    }
}

SeriesMatrix truncated_copy(const SeriesMatrix& m, std::size_t precision)
{
    SeriesMatrix out;
    out.reserve(m.size());
    for (const auto& row : m) {
        std::vector<TruncatedSeries> r;
        r.reserve(row.size());
        for (const auto& entry : row) {
            r.push_back(entry.truncated(precision));
        }
        out.push_back(std::move(r));
    }
    return out;
}

// Determinant by cofactor expansion along the first row.
TruncatedSeries determinant(const SeriesMatrix& m, const std::vector<std::size_t>& rows,
                            const std::vector<std::size_t>& cols, BaseField field, std::size_t precision)
{
    const std::size_t k = rows.size();
    if (k == 0) {
        return TruncatedSeries::constant(FieldElement(field, 1), precision);
    }
    if (k == 1) {
        return m[rows[0]][cols[0]];
    }
    const std::vector<std::size_t> rest_rows(rows.begin() + 1, rows.end());
    TruncatedSeries det(field, precision);
    for (std::size_t j = 0; j < k; ++j) {
        const auto& a = m[rows[0]][cols[j]];
        if (a.is_zero()) {
            continue;
        }
        std::vector<std::size_t> rest_cols;
        rest_cols.reserve(k - 1);
        for (std::size_t q = 0; q < k; ++q) {
            if (q != j) {
                rest_cols.push_back(cols[q]);
            }
        }
        const auto term = a * determinant(m, rest_rows, rest_cols, field, precision);
        if (j % 2 == 0) {
            det += term;
        } else {
            det -= term;
        }
    }
    return det;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn)
{
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) {
        idx[i] = i;
    }
    if (k > n) {
        return;
    }
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++idx[i - 1];
        for (std::size_t q = i; q < k; ++q) {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

BaseField matrix_field(const SeriesMatrix& m)
{
    return m.empty() || m.front().empty() ? BaseField() : m.front().front().field();
}

}  // namespace

InvariantProfile smith_orders(const SeriesMatrix& m, std::size_t columns, std::size_t precision, ProfileLevel level)
{
    const std::size_t p = level ? *level + 1 : precision;
    if (p > precision) {
        throw PrecisionTooLow("level " + std::to_string(*level) + " needs precision " + std::to_string(p) +
                              ", have " + std::to_string(precision));
    }
    check_shape(m, columns, p);
    SeriesMatrix a = truncated_copy(m, p);

    std::vector<bool> row_active(a.size(), true);
    std::vector<bool> col_active(columns, true);
    std::vector<std::uint64_t> pivots;

    while (true) {
        std::size_t pr = 0;
        std::size_t pc = 0;
        std::optional<std::uint64_t> best;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (!row_active[r]) {
                continue;
            }
            for (std::size_t c = 0; c < columns; ++c) {
                if (!col_active[c]) {
                    continue;
                }
                const auto ord = a[r][c].order();
                if (ord.is_finite() && (!best || ord.value() < *best)) {
                    best = ord.value();
                    pr = r;
                    pc = c;
                }
            }
        }
        if (!best) {
            break;
        }
        const std::size_t e = *best;
        const TruncatedSeries unit = lifted_quotient(a[pr][pc], e, p);
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == pr || !row_active[r] || a[r][pc].is_zero()) {
                continue;
            }
            const TruncatedSeries factor = lifted_quotient(a[r][pc], e, p);
            for (std::size_t c = 0; c < columns; ++c) {
                if (!col_active[c]) {
                    continue;
                }
                if (c == pc) {
                    a[r][c] = TruncatedSeries(a[r][c].field(), p);
                    continue;
                }
                a[r][c] = unit * a[r][c] - factor * a[pr][c];
            }
        }
        row_active[pr] = false;
        col_active[pc] = false;
        pivots.push_back(e);
    }

    InvariantProfile prof;
    prof.level = level;
    prof.precision = p;
    prof.columns = columns;
    prof.betti = columns - pivots.size();
    std::sort(pivots.begin(), pivots.end(), std::greater<>());
    prof.factors = std::move(pivots);
    if (!level) {
        const bool rows_left = std::find(row_active.begin(), row_active.end(), true) != row_active.end();
        prof.precision_limited = rows_left && prof.betti > 0;
    }

    prof.fitting.assign(columns + 1, OrderValue::finite(0));
    OrderValue tail = OrderValue::finite(0);
    for (std::size_t i = columns; i-- > 0;) {
        tail = tail + prof.e(i);
        // An infinite summand leaves nothing observed beyond the precision.
        prof.fitting[i] = level || !tail.is_finite() ? saturate(tail, p) : tail;
    }
    if (level) {
        // At a finite level every Fitting invariant is an honest number <= n+1.
        for (auto& c : prof.fitting) {
            if (!c.is_finite()) {
                c = OrderValue::finite(p);
            }
        }
    }
    return prof;
}

OrderValue fitting_minor_oracle(const SeriesMatrix& m, std::size_t columns, std::size_t precision, std::size_t i)
{
    if (m.size() > minor_oracle_limit || columns > minor_oracle_limit) {
        throw MatrixTooLarge("minor oracle accepts at most " + std::to_string(minor_oracle_limit) + "x" +
                             std::to_string(minor_oracle_limit) + " matrices");
    }
    if (i >= columns) {
        return OrderValue::finite(0);
    }
    check_shape(m, columns, precision);
    const SeriesMatrix a = truncated_copy(m, precision);
    const std::size_t k = columns - i;
    const BaseField field = matrix_field(a);
    OrderValue best = OrderValue::at_least(precision);
    for_each_subset(a.size(), k, [&](const std::vector<std::size_t>& rows) {
        for_each_subset(columns, k, [&](const std::vector<std::size_t>& cols) {
            best = min(best, determinant(a, rows, cols, field, precision).order());
        });
    });
    return best;
}

SeriesMatrix pull_back(const DifferentialPresentation& presentation, const Arc& arc)
{
    SeriesMatrix out;
    out.reserve(presentation.relations.size());
    for (const auto& row : presentation.relations) {
        std::vector<TruncatedSeries> r;
        r.reserve(row.size());
        for (const auto& entry : row) {
            r.push_back(arc.pull_back(entry));
        }
        out.push_back(std::move(r));
    }
    return out;
}

InvariantProfile profile_of_presentation(const DifferentialPresentation& presentation, const Arc& arc,
                                         ProfileLevel level)
{
    return smith_orders(pull_back(presentation, arc), presentation.column_symbols.size(), arc.precision(), level);
}

InvariantProfile profile_of_omega(const Arc& arc, ProfileLevel level)
{
    return profile_of_presentation(omega_presentation(arc.variety()), arc, level);
}

RefinedProfile refined_profile(const DifferentialPresentation& presentation, const Arc& arc,
                               std::size_t precision_cap)
{
    RefinedProfile out{profile_of_presentation(presentation, arc, std::nullopt), arc};
    while (out.profile.precision_limited) {
        const std::size_t next = std::min(2 * out.arc.precision(), precision_cap);
        if (next <= out.arc.precision() || !out.arc.can_reach(next)) {
            break;
        }
        out.arc = out.arc.with_precision(next);
        out.profile = profile_of_presentation(presentation, out.arc, std::nullopt);
    }
    return out;
}

std::string to_string(const InvariantProfile& profile)
{
    std::string s = "d=" + std::to_string(profile.betti) + " e=[";
    for (std::size_t i = 0; i < profile.factors.size(); ++i) {
        s += (i ? "," : "") + std::to_string(profile.factors[i]);
    }
    s += "] c=[";
    for (std::size_t i = 0; i < profile.fitting.size(); ++i) {
        s += (i ? "," : "") + profile.fitting[i].to_string();
    }
    s += "]";
    if (profile.precision_limited) {
        s += " precision-limited";
    }
    return s;
}

}  // namespace jetspace
