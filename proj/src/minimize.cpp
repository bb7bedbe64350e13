#include "mfr/minimize.hpp"

#include "mfr/parallel.hpp"

namespace mfr {

namespace {

template <class Col>
MinimizeResult minimize_impl(const GradedMatrix& d, unsigned threads) {
    if (!validate(d)) throw std::invalid_argument("minimize: graded matrix is not valid");
    const Index m = d.num_rows(), n = d.num_cols();
    std::vector<Index> owner(m, kNone);
    std::vector<SparseColumn> cols(n);
    std::vector<Index> deferred;

    // Local pairs: pivot row of the same grade as the column.
    Col work;
    for (Index j = 0; j < n; ++j) {
        work.assign(d.columns[j]);
        for (;;) {
            Index i = work.pivot();
            if (i == kNone || d.row_grades[i] != d.col_grades[j]) {
                deferred.push_back(j);
                break;
            }
            if (owner[i] == kNone) {
                owner[i] = j;
                break;
            }
            work.add(Col(cols[owner[i]]));
        }
        cols[j] = std::vector<Index>(work.entries());
    }

    // Clear paired rows out of the surviving columns, largest first. Paired
    // columns are frozen now, so columns are independent.
    parallel_for(deferred.size(), threads, [&](std::size_t k) {
        auto& c = cols[deferred[k]];
        Index bound = m;
        for (;;) {
            auto it = std::lower_bound(c.begin(), c.end(), bound);
            Index hit = kNone;
            while (it != c.begin()) {
                --it;
                if (owner[*it] != kNone) {
                    hit = *it;
                    break;
                }
            }
            if (hit == kNone) break;
            c = add_columns(c, cols[owner[hit]]);
            bound = hit;
        }
    });

    MinimizeResult res;
    res.cols = deferred;
    for (Index i = 0; i < m; ++i)
        if (owner[i] == kNone) res.rows.push_back(i);
    res.pairs = std::size_t(m) - res.rows.size();
    GradedMatrix reduced(d.row_grades, d.col_grades, std::move(cols));
    res.matrix = select_rows(select_cols(reduced, res.cols), res.rows);
    return res;
}

} // namespace

MinimizeResult minimize_map(const GradedMatrix& d, ColumnKind kind, unsigned threads) {
    return with_column_kind(kind, [&]<class Col>(Col) { return minimize_impl<Col>(d, threads); });
}

std::vector<GradedMatrix> minimize_chain(const std::vector<GradedMatrix>& ds, ColumnKind kind, unsigned threads) {
    std::vector<GradedMatrix> out(ds);
    std::vector<Index> keep_cols;
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (k > 0) {
            if (out[k].num_rows() != ds[k - 1].num_cols()) throw std::invalid_argument("minimize_chain: dimension mismatch");
            out[k] = select_rows(out[k], keep_cols);
        }
        auto r = minimize_map(out[k], kind, threads);
        out[k] = std::move(r.matrix);
        if (k > 0) out[k - 1] = select_cols(out[k - 1], r.rows);
        keep_cols = std::move(r.cols);
    }
    return out;
}

std::vector<GradedMatrix> minimize_cochain(const std::vector<GradedMatrix>& ds, ColumnKind kind, unsigned threads) {
    std::vector<GradedMatrix> out(ds);
    std::vector<Index> keep_rows;
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (k > 0) {
            if (out[k].num_cols() != ds[k - 1].num_rows())
                throw std::invalid_argument("minimize_cochain: dimension mismatch");
            out[k] = select_cols(out[k], keep_rows);
        }
        auto r = minimize_map(out[k], kind, threads);
        out[k] = std::move(r.matrix);
        if (k > 0) out[k - 1] = select_rows(out[k - 1], r.cols);
        keep_rows = std::move(r.rows);
    }
    return out;
}

} // namespace mfr
