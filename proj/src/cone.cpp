#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mfr/complex.hpp"
#include "mfr/one_param.hpp"

namespace mfr {

namespace {

struct Cell {
    Grade grade;
    SparseColumn boundary; // extended ids in the degree below
};

} // namespace

Collapsed collapse(const ChainComplex& c, Axis axis) {
    const int top = c.top();
    auto kept = [&](const Grade& g) { return axis == Axis::x ? g.y : g.x; };
    Collapsed out;
    std::vector<std::vector<Index>> rank(top + 2);
    out.order.resize(top + 2);
    for (int q = -1; q <= top; ++q) {
        const auto& g = c.grades(q);
        auto& o = out.order[q + 1];
        o.resize(g.size());
        std::iota(o.begin(), o.end(), 0);
        std::stable_sort(o.begin(), o.end(), [&](Index a, Index b) { return kept(g[a]) < kept(g[b]); });
        rank[q + 1].resize(g.size());
        for (Index p = 0; p < Index(o.size()); ++p) rank[q + 1][o[p]] = p;
    }
    out.boundaries.resize(top + 1);
    for (int k = 0; k <= top; ++k) {
        const auto& m = c.boundary[k];
        auto& f = out.boundaries[k];
        for (Index p : out.order[k]) f.row_values.push_back(kept(m.row_grades[p]));
        for (Index p : out.order[k + 1]) {
            f.col_values.push_back(kept(m.col_grades[p]));
            SparseColumn col;
            for (Index i : m.columns[p]) col.push_back(rank[k][i]);
            std::sort(col.begin(), col.end());
            f.columns.push_back(std::move(col));
        }
    }
    return out;
}

ChainComplex cone_off(const ChainComplex& c, Axis axis, std::optional<std::int32_t> z0) {
    const int top = c.top();
    if (top < 0) return c;
    auto collapsed = [&](const Grade& g) { return axis == Axis::x ? g.x : g.y; };
    auto place = [&](std::int32_t z, std::int64_t k) {
        return axis == Axis::x ? Grade{z, std::int32_t(k)} : Grade{std::int32_t(k), z};
    };

    bool any = false;
    std::int32_t zmax = 0;
    for (int q = -1; q <= top; ++q)
        for (const auto& g : c.grades(q)) {
            zmax = any ? std::max(zmax, collapsed(g)) : collapsed(g);
            any = true;
        }
    if (!any) return c;
    if (!z0) z0 = zmax + 1;
    if (*z0 < zmax) throw std::invalid_argument("cone_off: z0 does not dominate the collapsed coordinate");

    auto col = collapse(c, axis);
    const auto& order = col.order;
    const auto& bds = col.boundaries;
    std::vector<FilteredMatrix> cobds;
    for (const auto& b : bds) cobds.push_back(anti_transpose(b));
    auto reps = homology_reps(bds, barcode_clearing(cobds, true, -1));

    // Existing cells first, then cone cells, per degree.
    std::vector<std::vector<Cell>> cells(top + 2);
    for (int q = -1; q <= top; ++q) {
        const auto& g = c.grades(q);
        for (Index i = 0; i < Index(g.size()); ++i)
            cells[q + 1].push_back({g[i], q >= 0 ? c.boundary[q].columns[i] : SparseColumn{}});
    }
    auto back_to_original = [&](const SparseColumn& s, int q) {
        SparseColumn out;
        for (Index p : s) out.push_back(order[q + 1][p]);
        std::sort(out.begin(), out.end());
        return out;
    };
    for (const auto& rb : reps) {
        const int q = rb.bar.degree;
        if (q + 1 > top) continue;
        Index hat = Index(cells[q + 2].size());
        cells[q + 2].push_back({place(*z0, rb.bar.birth), back_to_original(rb.cycle, q)});
        if (rb.bar.infinite || q + 2 > top) continue;
        SparseColumn bd = back_to_original(rb.chain, q + 1);
        bd.push_back(hat); // extended ids of new cells exceed all original ids
        cells[q + 3].push_back({place(*z0, rb.bar.death), bd});
    }

    // Re-sort each degree colexicographically; ties keep existing cells first.
    std::vector<std::vector<Index>> newpos(top + 2);
    std::vector<std::vector<Index>> perm(top + 2);
    for (int q = -1; q <= top; ++q) {
        auto& cs = cells[q + 1];
        auto& p = perm[q + 1];
        p.resize(cs.size());
        std::iota(p.begin(), p.end(), 0);
        std::stable_sort(p.begin(), p.end(), [&](Index a, Index b) { return colex_less(cs[a].grade, cs[b].grade); });
        newpos[q + 1].resize(cs.size());
        for (Index k = 0; k < Index(p.size()); ++k) newpos[q + 1][p[k]] = k;
    }
    ChainComplex out;
    out.boundary.resize(top + 1);
    for (int k = 0; k <= top; ++k) {
        auto& m = out.boundary[k];
        for (Index e : perm[k]) m.row_grades.push_back(cells[k][e].grade);
        for (Index e : perm[k + 1]) {
            const auto& cell = cells[k + 1][e];
            m.col_grades.push_back(cell.grade);
            SparseColumn col;
            for (Index i : cell.boundary) col.push_back(newpos[k][i]);
            std::sort(col.begin(), col.end());
            m.columns.push_back(std::move(col));
        }
    }
    return out;
}

} // namespace mfr
