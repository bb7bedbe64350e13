#include "mfr/lw.hpp"

#include <queue>

#include "mfr/parallel.hpp"

namespace mfr {

namespace {

struct QEntry {
    Grade z;
    Index j;
    bool native; // z is the column's own grade
};

// Min-queue on (z lex, re-enqueued before native, j). Re-enqueued columns
// must go first so that everything generated strictly below z is in the
// pivot table before a native column at z is judged.
struct QAfter {
    bool operator()(const QEntry& a, const QEntry& b) const {
        if (a.z != b.z) return lex_less(b.z, a.z);
        if (a.native != b.native) return a.native;
        return a.j > b.j;
    }
};

using GradeQueue = std::priority_queue<QEntry, std::vector<QEntry>, QAfter>;

void check_input(const GradedMatrix& m) {
    if (!validate(m)) throw std::invalid_argument("graded matrix is not valid");
}

// Shared sweep of Ker and MgsWithKer. `cur[j]` is the grade at which column j
// was last processed; an owner is usable at z only if cur[owner] <= z.
template <class Col, class OnReduce, class OnAdd, class OnDone>
void lw_sweep(const GradedMatrix& m, std::vector<Col>& cols, LwStats* stats, OnReduce&& zero, OnAdd&& added,
              OnDone&& done) {
    const Index n = m.num_cols();
    std::vector<Index> owner(m.num_rows(), kNone);
    std::vector<Grade> cur(m.col_grades);
    GradeQueue q;
    for (Index j = 0; j < n; ++j) q.push({m.col_grades[j], j, true});
    while (!q.empty()) {
        auto [z, j, native] = q.top();
        (void)native;
        q.pop();
        cur[j] = z;
        for (;;) {
            Index i = cols[j].pivot();
            if (i == kNone) {
                zero(j, z);
                break;
            }
            Index o = owner[i];
            if (o == kNone) {
                owner[i] = j;
                break;
            }
            if (!cur[o].leq(z)) {
                q.push({join(cur[o], z), o, false});
                owner[i] = j;
                if (stats) ++stats->evictions;
                break;
            }
            cols[j].add(cols[o]);
            added(j, o, z);
            if (stats) ++stats->additions;
        }
        done(j, z);
    }
}

template <class Col>
GradedMatrix ker_impl(const GradedMatrix& m, LwStats* stats) {
    check_input(m);
    const Index n = m.num_cols();
    std::vector<Col> cols(n), v(n);
    for (Index j = 0; j < n; ++j) {
        cols[j].assign(m.columns[j]);
        v[j].assign({j});
    }
    GradedMatrix k;
    k.row_grades = m.col_grades;
    lw_sweep(
        m, cols, stats,
        [&](Index j, Grade z) {
            k.columns.push_back(v[j].entries());
            k.col_grades.push_back(z);
            v[j].clear();
        },
        [&](Index j, Index o, Grade) { v[j].add(v[o]); },
        [&](Index j, Grade) {
            cols[j].compact();
            v[j].compact();
        });
    return k;
}

template <class Col>
MgsResult mgs_impl(const GradedMatrix& m, LwStats* stats) {
    check_input(m);
    const Index n = m.num_cols();
    std::vector<Col> cols(n);
    for (Index j = 0; j < n; ++j) cols[j].assign(m.columns[j]);
    std::vector<Index> idx(n, kNone); // position of column j in the generating system
    std::vector<Col> v;
    MgsResult r;
    r.mgs.row_grades = m.row_grades;
    lw_sweep(
        m, cols, stats,
        [&](Index j, Grade z) {
            // A column that dies at its own grade never entered the generating
            // system and carries no relation.
            if (idx[j] == kNone) return;
            r.kernel.columns.push_back(v[idx[j]].entries());
            r.kernel.col_grades.push_back(z);
        },
        [&](Index j, Index o, Grade z) {
            if (z != m.col_grades[j]) v[idx[j]].add(v[idx[o]]);
        },
        [&](Index j, Grade z) {
            cols[j].compact();
            if (z == m.col_grades[j] && !cols[j].empty()) {
                idx[j] = r.mgs.num_cols();
                r.mgs.columns.push_back(std::vector<Index>(cols[j].entries()));
                r.mgs.col_grades.push_back(z);
                v.emplace_back(std::vector<Index>{idx[j]});
            } else if (idx[j] != kNone) {
                v[idx[j]].compact();
            }
        });
    r.kernel.row_grades = r.mgs.col_grades;
    return r;
}

template <class Col>
GradedMatrix factorize_impl(const GradedMatrix& b, const GradedMatrix& a, unsigned threads) {
    if (b.num_rows() != a.num_rows()) throw std::invalid_argument("factorize: row count mismatch");
    // Echelonize A, remembering each reduced column as a combination of A's columns.
    std::vector<Index> owner(a.num_rows(), kNone);
    std::vector<Col> acols(a.num_cols());
    std::vector<SparseColumn> combo(a.num_cols());
    for (Index j = 0; j < a.num_cols(); ++j) {
        acols[j].assign(a.columns[j]);
        Col t;
        t.assign({j});
        Index p;
        while ((p = acols[j].pivot()) != kNone && owner[p] != kNone) {
            acols[j].add(acols[owner[p]]);
            Col u;
            u.assign(combo[owner[p]]);
            t.add(u);
        }
        if (p == kNone) throw std::invalid_argument("factorize: basis columns are dependent");
        owner[p] = j;
        acols[j].compact();
        combo[j] = t.entries();
    }
    GradedMatrix nmat;
    nmat.row_grades = a.col_grades;
    nmat.col_grades = b.col_grades;
    nmat.columns.resize(b.num_cols());
    parallel_for(std::size_t(b.num_cols()), threads, [&](std::size_t j) {
        Col l;
        l.assign(b.columns[j]);
        std::vector<char> odd(a.num_cols(), 0);
        Index i;
        while ((i = l.pivot()) != kNone) {
            if (owner[i] == kNone) throw AlgebraError("factorize: not in span");
            l.add(acols[owner[i]]);
            for (Index k : combo[owner[i]]) odd[k] ^= 1;
        }
        for (Index k = 0; k < a.num_cols(); ++k)
            if (odd[k]) nmat.columns[j].push_back(k);
    });
    return nmat;
}

} // namespace

GradedMatrix ker_basis(const GradedMatrix& m, ColumnKind kind, LwStats* stats) {
    return with_column_kind(kind, [&]<class Col>(Col) { return ker_impl<Col>(m, stats); });
}

MgsResult mgs_with_ker(const GradedMatrix& m, ColumnKind kind, LwStats* stats) {
    return with_column_kind(kind, [&]<class Col>(Col) { return mgs_impl<Col>(m, stats); });
}

GradedMatrix factorize(const GradedMatrix& b, const GradedMatrix& a, ColumnKind kind, unsigned threads) {
    return with_column_kind(kind, [&]<class Col>(Col) { return factorize_impl<Col>(b, a, threads); });
}

} // namespace mfr
