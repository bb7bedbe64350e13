#include "oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace oracle {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits dense(const SparseColumn& c, Index rows) {
    Bits b((rows + 63) / 64 + 1, 0);
    for (Index i : c) b[i / 64] ^= std::uint64_t(1) << (i % 64);
    return b;
}

int highest(const Bits& b) {
    for (std::size_t w = b.size(); w-- > 0;)
        if (b[w]) return int(w * 64 + 63 - __builtin_clzll(b[w]));
    return -1;
}

// Gaussian elimination into a pivot -> row table; returns whether v was new.
bool reduce_into(std::vector<Bits>& table, Bits v) {
    for (;;) {
        int h = highest(v);
        if (h < 0) return false;
        if (table[h].empty()) {
            table[h] = std::move(v);
            return true;
        }
        for (std::size_t w = 0; w < v.size(); ++w) v[w] ^= table[h][w];
    }
}

} // namespace

int rank(const std::vector<SparseColumn>& cols, Index rows) {
    std::vector<Bits> table(std::size_t((rows + 63) / 64 + 1) * 64);
    int r = 0;
    for (const auto& c : cols) r += reduce_into(table, dense(c, rows));
    return r;
}

bool in_span(const std::vector<SparseColumn>& cols, const SparseColumn& v, Index rows) {
    auto with = cols;
    with.push_back(v);
    return rank(with, rows) == rank(cols, rows);
}

bool independent(const std::vector<SparseColumn>& cols, Index rows) { return rank(cols, rows) == int(cols.size()); }

std::vector<SparseColumn> columns_below(const GradedMatrix& m, Grade z) {
    std::vector<SparseColumn> out;
    for (Index j = 0; j < m.num_cols(); ++j)
        if (m.col_grades[j].leq(z)) out.push_back(m.columns[j]);
    return out;
}

std::vector<SparseColumn> columns_strictly_below(const GradedMatrix& m, Grade z) {
    std::vector<SparseColumn> out;
    for (Index j = 0; j < m.num_cols(); ++j)
        if (m.col_grades[j].leq(z) && m.col_grades[j] != z) out.push_back(m.columns[j]);
    return out;
}

SparseColumn apply(const GradedMatrix& m, const SparseColumn& v) {
    SparseColumn out;
    for (Index j : v) out = mfr::add_columns(out, m.columns[j]);
    return out;
}

std::vector<Grade> grid(mfr::GradeBox box) {
    std::vector<Grade> out;
    for (auto x = box.lo.x; x <= box.hi.x; ++x)
        for (auto y = box.lo.y; y <= box.hi.y; ++y) out.push_back({x, y});
    return out;
}

std::vector<Grade> grid(const GradedMatrix& m) {
    std::vector<Grade> all(m.row_grades);
    all.insert(all.end(), m.col_grades.begin(), m.col_grades.end());
    if (all.empty()) return {{0, 0}};
    Grade lo = all[0], hi = all[0];
    for (const auto& g : all) {
        lo = mfr::meet(lo, g);
        hi = mfr::join(hi, g);
    }
    return grid(mfr::GradeBox{lo - Grade{1, 1}, hi + Grade{1, 1}});
}

int pullback_dim(const std::vector<SparseColumn>& b, const std::vector<Grade>& r, Grade z) {
    const Index m = Index(r.size());
    std::vector<SparseColumn> ez;
    for (Index i = 0; i < m; ++i)
        if (r[i].leq(z)) ez.push_back({i});
    auto both = b;
    both.insert(both.end(), ez.begin(), ez.end());
    return rank(b, m) + int(ez.size()) - rank(both, m);
}

std::int64_t resolution_homology_at(const mfr::FreeResolution& r, Grade z, bool& exact) {
    auto restrict = [&](const GradedMatrix& m) {
        // Rows with grade <= z are all that a column of grade <= z can touch.
        return columns_below(m, z);
    };
    auto u1z = restrict(r.u1), u2z = restrict(r.u2);
    std::int64_t f0 = 0, f1 = 0, f2 = 0;
    for (const auto& g : r.f0()) f0 += g.leq(z);
    for (const auto& g : r.f1()) f1 += g.leq(z);
    for (const auto& g : r.f2()) f2 += g.leq(z);
    int r1 = rank(u1z, r.u1.num_rows()), r2 = rank(u2z, r.u2.num_rows());
    if (r2 != f2 || f1 - r1 != r2) exact = false;
    return f0 - r1;
}

GradedMatrix random_matrix(std::mt19937_64& rng, Index rows, Index cols, int grade_max, double density,
                           bool sort_rows_colex) {
    std::uniform_int_distribution<int> g(0, grade_max);
    std::bernoulli_distribution keep(density);
    GradedMatrix m;
    for (Index i = 0; i < rows; ++i) m.row_grades.push_back({g(rng), g(rng)});
    if (sort_rows_colex) std::sort(m.row_grades.begin(), m.row_grades.end(), mfr::colex_less);
    for (Index j = 0; j < cols; ++j) {
        Grade c{g(rng), g(rng)};
        SparseColumn col;
        for (Index i = 0; i < rows; ++i)
            if (m.row_grades[i].leq(c) && keep(rng)) col.push_back(i);
        m.col_grades.push_back(c);
        m.columns.push_back(col);
    }
    return m;
}

Instance random_instance(std::mt19937_64& rng, Index n, bool ties) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::array<double, 2>> p(n);
    for (auto& q : p) q = {u(rng), u(rng)};
    std::vector<double> lower;
    for (Index i = 1; i < n; ++i)
        for (Index j = 0; j < i; ++j) {
            double d = std::hypot(p[i][0] - p[j][0], p[i][1] - p[j][1]);
            lower.push_back(ties ? std::round(d * 6) / 6 : d);
        }
    Instance inst{{}, mfr::DistanceMatrix(n, lower)};
    std::uniform_int_distribution<int> f(0, ties ? 3 : int(n));
    for (Index i = 0; i < n; ++i) inst.values.push_back(f(rng));
    return inst;
}

std::vector<mfr::FilteredMatrix> random_filtration(std::mt19937_64& rng, Index n, int maxdim) {
    auto inst = random_instance(rng, n, std::bernoulli_distribution(0.5)(rng));
    auto c = mfr::to_chain_complex(mfr::build_function_rips(inst.dist, inst.values, maxdim));
    auto axis = std::bernoulli_distribution(0.5)(rng) ? mfr::Axis::x : mfr::Axis::y;
    return mfr::collapse(c, axis).boundaries;
}

std::vector<mfr::Bar> standard_barcode(const std::vector<mfr::FilteredMatrix>& bds) {
    const int top = int(bds.size()) - 1;
    std::vector<mfr::Bar> bars;
    // zero[q][t]: column t of boundary q reduced to zero; paired[q][t]: cell t of
    // degree q is the pivot of some reduced column in boundary q+1.
    std::vector<std::vector<char>> zero(top + 1), paired(top + 2);
    for (int k = 0; k <= top; ++k) {
        const auto& m = bds[k];
        std::vector<SparseColumn> r = m.columns;
        std::vector<Index> owner(m.row_values.size(), mfr::kNone);
        zero[k].assign(r.size(), 0);
        paired[k].assign(m.row_values.size(), 0);
        for (Index j = 0; j < Index(r.size()); ++j) {
            while (!r[j].empty() && owner[r[j].back()] != mfr::kNone) r[j] = mfr::add_columns(r[j], r[owner[r[j].back()]]);
            if (r[j].empty()) {
                zero[k][j] = 1;
                continue;
            }
            Index i = r[j].back();
            owner[i] = j;
            paired[k][i] = 1;
            if (m.row_values[i] != m.col_values[j]) bars.push_back({k - 1, m.row_values[i], m.col_values[j], false});
        }
    }
    for (int q = 0; q < top; ++q)
        for (Index t = 0; t < Index(zero[q].size()); ++t)
            if (zero[q][t] && !paired[q + 1][t]) bars.push_back({q, bds[q].col_values[t], 0, true});
    std::sort(bars.begin(), bars.end());
    return bars;
}

} // namespace oracle
