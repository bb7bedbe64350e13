#include "mfr/bireduce.hpp"

#include <numeric>

namespace mfr {

namespace {

// Rank of each row in the order (grade asc, index desc): the pivot of a column
// is its entry of largest rank, matching "smallest index among maximal grades".
std::vector<Index> pivot_ranks(const std::vector<Grade>& r, bool lex) {
    std::vector<Index> order(r.size());
    std::iota(order.begin(), order.end(), 0);
    auto less = lex ? lex_less : colex_less;
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
        if (r[a] != r[b]) return less(r[a], r[b]);
        return a > b;
    });
    std::vector<Index> rank(r.size());
    for (Index k = 0; k < Index(order.size()); ++k) rank[order[k]] = k;
    return rank;
}

std::vector<Index> relabel(const std::vector<Index>& entries, const std::vector<Index>& map) {
    std::vector<Index> out;
    out.reserve(entries.size());
    for (Index e : entries) out.push_back(map[e]);
    std::sort(out.begin(), out.end());
    return out;
}

template <class Col>
BireduceResult bireduce_impl(const std::vector<SparseColumn>& b, const std::vector<Grade>& r,
                             const BireduceOptions& opts) {
    if (!rows_sorted(r, Order::colex)) throw std::invalid_argument("bireduce: rows are not colex-sorted");
    const Index m = Index(r.size()), n = Index(b.size());
    BireduceResult res;
    auto& st = res.stats;

    const bool lex_first = opts.lex_first;
    std::vector<Index> rank1 = pivot_ranks(r, lex_first), rank2 = pivot_ranks(r, !lex_first);
    std::vector<Index> row1(m), row2(m);
    for (Index i = 0; i < m; ++i) {
        row1[rank1[i]] = i;
        row2[rank2[i]] = i;
    }

    std::vector<Col> cols(n);
    std::vector<Index> owner(m, kNone);
    std::vector<Index> piv1(n, kNone); // first-phase pivot, as a rank
    for (Index j = 0; j < n; ++j) {
        if (b[j].empty()) continue;
        ++st.input_columns;
        cols[j].assign(relabel(b[j], rank1));
        Index p;
        while ((p = cols[j].pivot()) != kNone) {
            if (owner[p] == kNone) {
                owner[p] = j;
                break;
            }
            cols[j].add(cols[owner[p]]);
            ++st.phase1_additions;
        }
        piv1[j] = p;
        cols[j].compact();
    }

    // Second phase: same columns, other order.
    std::vector<Index> to2(m);
    for (Index k = 0; k < m; ++k) to2[k] = rank2[row1[k]];
    for (Index j = 0; j < n; ++j)
        if (piv1[j] != kNone) cols[j].assign(relabel(std::vector<Index>(cols[j].entries()), to2));
        else cols[j].clear();
    std::fill(owner.begin(), owner.end(), kNone);
    for (Index jj = 0; jj < n; ++jj) {
        Index j = jj;
        Index p;
        while ((p = cols[j].pivot()) != kNone) {
            if (owner[p] == kNone) {
                owner[p] = j;
                break;
            }
            // Only add a column with a smaller first-phase pivot, so those
            // pivots survive this phase.
            if (piv1[j] < piv1[owner[p]]) {
                std::swap(owner[p], j);
                ++st.phase2_swaps;
            }
            cols[j].add(cols[owner[p]]);
            ++st.phase2_additions;
        }
        cols[j].compact();
    }

    std::vector<SparseColumn> kept;
    for (Index j = 0; j < n; ++j) {
        if (piv1[j] == kNone) continue;
        auto e = relabel(std::vector<Index>(cols[j].entries()), row2);
        if (e.empty()) continue; // cannot happen: phase 2 preserves first-phase pivots
        kept.push_back(std::move(e));
        res.colex_pivots.push_back(lex_first ? pivot(kept.back(), r, PivotKind::colex) : row1[piv1[j]]);
    }
    res.basis = with_minimal_col_grades(kept, r);
    return res;
}

} // namespace

BireduceResult bireduce(const std::vector<SparseColumn>& b, const std::vector<Grade>& r,
                        const BireduceOptions& opts) {
    return with_column_kind(opts.kind, [&]<class Col>(Col) { return bireduce_impl<Col>(b, r, opts); });
}

SparsifyResult sparsify(const GradedMatrix& m) {
    const Index rows = m.num_rows(), n = m.num_cols();
    if (!rows_sorted(m.row_grades, Order::colex) && !rows_sorted(m.row_grades, Order::lex))
        for (Index i = 0; i < rows; ++i)
            for (Index j = i + 1; j < rows; ++j)
                if (m.row_grades[j].leq(m.row_grades[i]) && m.row_grades[i] != m.row_grades[j])
                    throw std::invalid_argument("sparsify: row order precondition violated");

    std::vector<std::vector<Index>> row_entries(rows);
    for (Index j = 0; j < n; ++j)
        for (Index i : m.columns[j]) row_entries[i].push_back(j);

    SparsifyResult res;
    std::vector<std::vector<Index>> singles(n); // d_j
    std::vector<std::vector<char>> drop(n);
    for (Index j = 0; j < n; ++j) drop[j].assign(m.columns[j].size(), 0);
    for (Index i = rows - 1; i >= 0; --i) {
        Index kept = 0, last = kNone;
        for (Index j : row_entries[i]) {
            Index via = kNone;
            for (Index h : singles[j])
                if (m.row_grades[i].leq(m.row_grades[h])) {
                    via = h;
                    break;
                }
            if (via != kNone) {
                auto& col = m.columns[j];
                drop[j][std::lower_bound(col.begin(), col.end(), i) - col.begin()] = 1;
                res.row_ops.emplace_back(i, via);
            } else {
                ++kept;
                last = j;
            }
        }
        if (kept == 1) singles[last].push_back(i);
    }
    res.matrix.row_grades = m.row_grades;
    res.matrix.col_grades = m.col_grades;
    res.matrix.columns.resize(n);
    for (Index j = 0; j < n; ++j)
        for (std::size_t k = 0; k < m.columns[j].size(); ++k)
            if (!drop[j][k]) res.matrix.columns[j].push_back(m.columns[j][k]);
    return res;
}

} // namespace mfr
