#include "jetspace/linear_algebra.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <tuple>

namespace jetspace {

std::size_t matrix_rank(FieldMatrix m)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m.front().size();
    std::vector<bool> row_active(rows, true);
    std::vector<bool> col_active(cols, true);
    std::size_t rank = 0;

    while (true) {
        std::vector<std::size_t> row_nnz(rows, 0);
        std::vector<std::size_t> col_nnz(cols, 0);
        for (std::size_t i = 0; i < rows; ++i) {
            if (!row_active[i]) {
                continue;
            }
            for (std::size_t j = 0; j < cols; ++j) {
                if (col_active[j] && !m[i][j].is_zero()) {
                    ++row_nnz[i];
                    ++col_nnz[j];
                }
            }
        }

        using Key = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;
        Key best{std::numeric_limits<std::size_t>::max(), 0, 0, 0};
        bool found = false;
        for (std::size_t i = 0; i < rows; ++i) {
            if (!row_active[i] || row_nnz[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < cols; ++j) {
                if (!col_active[j] || m[i][j].is_zero()) {
                    continue;
                }
                Key key{(row_nnz[i] - 1) * (col_nnz[j] - 1), m[i][j].weight(), i, j};
                if (!found || key < best) {
                    best = key;
                    found = true;
                }
            }
        }
        if (!found) {
            break;
        }

        const auto pr = std::get<2>(best);
        const auto pc = std::get<3>(best);
        const FieldElement pivot_inv = m[pr][pc].inverse();
        for (std::size_t k = 0; k < rows; ++k) {
            if (k == pr || !row_active[k] || m[k][pc].is_zero()) {
                continue;
            }
            const FieldElement factor = m[k][pc] * pivot_inv;
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == pc || !col_active[j] || m[pr][j].is_zero()) {
                    continue;
                }
                m[k][j] -= factor * m[pr][j];
            }
            m[k][pc] = FieldElement(m[k][pc].field());
        }
        row_active[pr] = false;
        col_active[pc] = false;
        ++rank;
    }
    return rank;
}

TranscendenceDegree transcendence_degree(const std::vector<FieldElement>& coeffs)
{
    TranscendenceDegree out;
    if (coeffs.empty()) {
        return out;
    }
    out.char_p_jacobian = !coeffs.front().field().is_rationals();

    std::set<Symbol> symbols;
    std::vector<const FieldElement*> nonconstant;
    for (const auto& c : coeffs) {
        if (c.is_constant()) {
            continue;
        }
        nonconstant.push_back(&c);
        for (auto s : c.variables()) {
            symbols.insert(s);
        }
    }
    if (nonconstant.empty()) {
        return out;
    }
    const std::vector<Symbol> vars(symbols.begin(), symbols.end());
    FieldMatrix jac;
    jac.reserve(nonconstant.size());
    for (const auto* c : nonconstant) {
        std::vector<FieldElement> row;
        row.reserve(vars.size());
        bool any = false;
        for (auto s : vars) {
            row.push_back(c->derivative(s));
            any = any || !row.back().is_zero();
        }
        if (any) {
            jac.push_back(std::move(row));
        }
    }
    out.value = matrix_rank(std::move(jac));
    return out;
}

}  // namespace jetspace
