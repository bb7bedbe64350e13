#include "mfr/one_param.hpp"

#include <algorithm>
#include <stdexcept>

namespace mfr {

FilteredMatrix anti_transpose(const FilteredMatrix& m) {
    const Index rows = Index(m.row_values.size()), cols = Index(m.col_values.size());
    FilteredMatrix t;
    t.row_values.resize(cols);
    t.col_values.resize(rows);
    t.columns.resize(rows);
    for (Index i = 0; i < cols; ++i) t.row_values[i] = -m.col_values[cols - 1 - i];
    for (Index j = 0; j < rows; ++j) t.col_values[j] = -m.row_values[rows - 1 - j];
    for (Index oj = cols - 1; oj >= 0; --oj)
        for (Index oi : m.columns[oj]) t.columns[rows - 1 - oi].push_back(cols - 1 - oj);
    return t;
}

namespace {

void check_sorted(const FilteredMatrix& m) {
    if (!std::is_sorted(m.row_values.begin(), m.row_values.end()) ||
        !std::is_sorted(m.col_values.begin(), m.col_values.end()))
        throw std::invalid_argument("one-parameter input is not sorted");
    if (m.columns.size() != m.col_values.size()) throw std::invalid_argument("column count mismatch");
}

} // namespace

BarcodeResult barcode_clearing(const std::vector<FilteredMatrix>& ms, bool clearing, int degree_offset) {
    BarcodeResult out;
    out.pivot_row.resize(ms.size());
    for (std::size_t k = 0; k < ms.size(); ++k) {
        const auto& m = ms[k];
        check_sorted(m);
        const Index n = Index(m.col_values.size());
        const int degree = int(k) + degree_offset;

        std::vector<char> paired_as_row(n, 0);
        if (k > 0) {
            if (ms[k - 1].row_values.size() != std::size_t(n))
                throw std::invalid_argument("consecutive matrices do not chain");
            for (Index i : out.pivot_row[k - 1])
                if (i != kNone) paired_as_row[i] = 1;
        }

        std::vector<Index> owner(m.row_values.size(), kNone);
        std::vector<HeapColumn> r(n);
        auto& piv = out.pivot_row[k];
        piv.assign(n, kNone);
        for (Index j = 0; j < n; ++j) {
            if (clearing && paired_as_row[j]) {
                ++out.cleared;
                continue;
            }
            r[j].assign(m.columns[j]);
            Index p;
            while ((p = r[j].pivot()) != kNone && owner[p] != kNone) {
                r[j].add(r[owner[p]]);
                ++out.additions;
            }
            if (p != kNone) {
                owner[p] = j;
                piv[j] = p;
                r[j].compact();
                if (m.row_values[p] != m.col_values[j]) out.bars.push_back({degree, m.row_values[p], m.col_values[j]});
            } else {
                r[j].clear();
                if (!paired_as_row[j]) out.bars.push_back({degree, m.col_values[j], 0, true});
            }
        }
    }
    std::sort(out.bars.begin(), out.bars.end());
    return out;
}

std::vector<RepBar> homology_reps(const std::vector<FilteredMatrix>& boundaries, const BarcodeResult& coh) {
    const int top = int(boundaries.size()) - 1;
    if (coh.pivot_row.size() != boundaries.size()) throw std::invalid_argument("homology_reps: inconsistent pairing input");
    auto cells = [&](int q) {
        return Index(q < 0 ? boundaries[0].row_values.size() : boundaries[q].col_values.size());
    };

    // death[k][t]: predicted pivot of column t of boundary k; essential[q][t]: unpaired cycle.
    std::vector<std::vector<Index>> death(top + 1);
    std::vector<std::vector<char>> essential(top + 1);
    for (int k = 0; k <= top; ++k) {
        const Index nk = cells(k), nprev = cells(k - 1);
        death[k].assign(nk, kNone);
        essential[k].assign(nk, 0);
        const auto& piv = coh.pivot_row[k];
        if (Index(piv.size()) != nprev) throw std::invalid_argument("homology_reps: inconsistent pairing input");
        for (Index j = 0; j < nprev; ++j)
            if (piv[j] != kNone) death[k][nk - 1 - piv[j]] = nprev - 1 - j;
    }
    // A degree-q cell is essential when it is neither a death in boundary q
    // nor a birth of boundary q+1.
    for (int q = 0; q < top; ++q) {
        std::vector<char> born(cells(q), 0);
        for (Index t = 0; t < cells(q + 1); ++t)
            if (death[q + 1][t] != kNone) born[death[q + 1][t]] = 1;
        for (Index t = 0; t < cells(q); ++t)
            if (death[q][t] == kNone && !born[t]) essential[q][t] = 1;
    }

    std::vector<RepBar> out;
    for (int k = 0; k <= top; ++k) {
        const auto& m = boundaries[k];
        std::vector<Index> owner(m.row_values.size(), kNone);
        std::vector<SparseColumn> r(cells(k)), v(cells(k));
        for (Index t = 0; t < cells(k); ++t) {
            if (death[k][t] == kNone && !essential[k][t]) continue;
            r[t] = m.columns[t];
            v[t] = {t};
            while (!r[t].empty() && owner[r[t].back()] != kNone) {
                Index o = owner[r[t].back()];
                r[t] = add_columns(r[t], r[o]);
                v[t] = add_columns(v[t], v[o]);
            }
            if (death[k][t] != kNone) {
                if (r[t].empty() || r[t].back() != death[k][t])
                    throw std::invalid_argument("homology_reps: inconsistent pairing input");
                Index s = r[t].back();
                owner[s] = t;
                if (m.row_values[s] != m.col_values[t])
                    out.push_back({{k - 1, m.row_values[s], m.col_values[t], false}, r[t], v[t]});
            } else {
                if (!r[t].empty()) throw std::invalid_argument("homology_reps: inconsistent pairing input");
                out.push_back({{k, m.col_values[t], 0, true}, v[t], {}});
                r[t].clear();
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const RepBar& a, const RepBar& b) { return a.bar < b.bar; });
    return out;
}

} // namespace mfr
