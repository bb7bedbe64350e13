#include "mfr/pipelines.hpp"

#include <chrono>
#include <numeric>

#include "mfr/bireduce.hpp"
#include "mfr/lw.hpp"
#include "mfr/minimize.hpp"

namespace mfr {

namespace {

class Timer {
public:
    explicit Timer(double* sink) : sink_(sink), start_(std::chrono::steady_clock::now()) {}
    ~Timer() {
        if (sink_) *sink_ += std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    double* sink_;
    std::chrono::steady_clock::time_point start_;
};

double* field(PipelineStats* s, double PipelineStats::*f) { return s ? &(s->*f) : nullptr; }

void note_width(PipelineStats* s, const GradedMatrix& m) {
    if (s) s->peak_columns = std::max(s->peak_columns, std::size_t(m.num_cols()));
}

ChainComplex coned(const ChainComplex& c, const PipelineOptions& opts, PipelineStats* stats) {
    if (!opts.cone) return c;
    Timer t(field(stats, &PipelineStats::seconds_cone));
    return cone_off(c, *opts.cone);
}

// Degrees 0..upto of the boundary sequence, minimized as chain or cochain complex.
ChainComplex chunk(const ChainComplex& c, int upto, const PipelineOptions& opts) {
    std::vector<GradedMatrix> ds(c.boundary.begin(), c.boundary.begin() + upto + 1);
    ChainComplex out;
    if (opts.chunk == Chunk::chain) {
        out.boundary = minimize_chain(ds, opts.columns, opts.threads);
    } else {
        for (auto& m : ds) m = shift(graded_transpose(m), kEpsilon);
        for (auto& m : minimize_cochain(ds, opts.columns, opts.threads))
            out.boundary.push_back(shift(graded_transpose(m), kEpsilon));
    }
    return out;
}

// Per degree: whether the one-parameter homology along both far edges vanishes.
std::vector<char> finite_degrees(const ChainComplex& c) {
    std::vector<char> ok(std::max(0, c.top()), 1);
    for (Axis a : {Axis::x, Axis::y}) {
        auto col = collapse(c, a);
        std::vector<FilteredMatrix> cob;
        for (const auto& b : col.boundaries) cob.push_back(anti_transpose(b));
        for (const auto& bar : barcode_clearing(cob, true, -1).bars)
            if (bar.degree >= 0 && bar.degree < int(ok.size())) ok[bar.degree] = 0;
    }
    return ok;
}

} // namespace

bool has_finite_homology(const ChainComplex& c, int d) {
    auto ok = finite_degrees(c);
    if (d < 0 || d >= int(ok.size())) throw std::out_of_range("has_finite_homology: degree out of range");
    return ok[d];
}

FreeResolution homology_mfr(const ChainComplex& input, int d, const PipelineOptions& opts, PipelineStats* stats) {
    ChainComplex c = coned(input, opts, stats);
    if (d < 0 || d + 1 > c.top()) throw std::out_of_range("homology_mfr: degree out of range");
    if (opts.chunk != Chunk::none) {
        Timer t(field(stats, &PipelineStats::seconds_chunk));
        c = chunk(c, std::min(d + 2, c.top()), opts);
    }
    FreeResolution r;
    r.degree = d;
    {
        Timer t(field(stats, &PipelineStats::seconds_reduce));
        LwStats lw;
        note_width(stats, c.boundary[d]);
        note_width(stats, c.boundary[d + 1]);
        GradedMatrix cycles = ker_basis(c.boundary[d], opts.columns, &lw);
        MgsResult gens = mgs_with_ker(c.boundary[d + 1], opts.columns, &lw);
        r.u1 = factorize(gens.mgs, cycles, opts.columns, opts.threads);
        r.u2 = std::move(gens.kernel);
        if (stats) stats->lw_additions += lw.additions;
    }
    if (opts.minimize) {
        Timer t(field(stats, &PipelineStats::seconds_minimize));
        r = minimize_resolution(r, opts.columns, opts.threads);
    }
    return r;
}

std::vector<FreeResolution> cohomology_mfr(const ChainComplex& input, int dmax, const PipelineOptions& opts,
                                           PipelineStats* stats) {
    ChainComplex c = coned(input, opts, stats);
    if (dmax < 0) return {};
    if (dmax + 1 > c.top()) throw std::out_of_range("cohomology_mfr: degree out of range");
    {
        auto ok = finite_degrees(c);
        for (int d = 0; d <= dmax; ++d)
            if (!ok[d])
                throw InfiniteHomologyError("H_" + std::to_string(d) + " has infinite total dimension" +
                                            (opts.cone ? " even after coning (unreduced H_0 always does); use "
                                                         "reduced homology or the homology pipeline"
                                                       : "; cone off the complex first"));
    }

    if (opts.chunk != Chunk::none) {
        Timer t(field(stats, &PipelineStats::seconds_chunk));
        c = chunk(c, std::min(dmax + 2, c.top()), opts);
    }

    std::vector<FreeResolution> out;
    std::vector<Index> cleared; // colex pivots of the previous degree
    for (int d = 0; d <= dmax; ++d) {
        FreeResolution coh;
        coh.degree = d;
        {
            Timer t(field(stats, &PipelineStats::seconds_reduce));
            GradedMatrix delta = c.coboundary(d);
            note_width(stats, delta);
            if (opts.clearing)
                for (Index j : cleared) {
                    if (stats && !delta.columns[j].empty()) ++stats->cleared_columns;
                    delta.columns[j].clear();
                }
            auto br = bireduce(delta.columns, delta.row_grades, {opts.columns, opts.lex_first});
            if (stats) {
                stats->phase1_columns += br.stats.input_columns;
                stats->phase1_additions += br.stats.phase1_additions;
                stats->phase2_additions += br.stats.phase2_additions;
            }
            cleared = std::move(br.colex_pivots);
            GradedMatrix cocycles = opts.sparsify ? sparsify(br.basis).matrix : std::move(br.basis);
            LwStats lw;
            MgsResult g = mgs_with_ker(graded_transpose(cocycles), opts.columns, &lw);
            if (stats) stats->lw_additions += lw.additions;
            coh.u1 = graded_transpose(g.kernel);
            coh.u2 = graded_transpose(g.mgs);
        }
        if (opts.minimize) {
            Timer t(field(stats, &PipelineStats::seconds_minimize));
            coh = minimize_resolution(coh, opts.columns, opts.threads);
        }
        Timer t(field(stats, &PipelineStats::seconds_dualize));
        out.push_back(dualize_resolution(coh));
    }
    return out;
}

GradeBox bounding_box(const ChainComplex& c, std::int32_t margin) {
    bool any = false;
    Grade lo{}, hi{};
    for (int q = -1; q <= c.top(); ++q)
        for (const auto& g : c.grades(q)) {
            lo = any ? meet(lo, g) : g;
            hi = any ? join(hi, g) : g;
            any = true;
        }
    return {lo - Grade{margin, margin}, hi + Grade{margin, margin}};
}

namespace {

// Incremental GF(2) rank over dense bit rows.
class XorBasis {
public:
    explicit XorBasis(Index bits) : words_((bits + 63) / 64), slot_(bits, kNone) {}

    bool insert(const SparseColumn& col) {
        std::vector<std::uint64_t> v(words_, 0);
        for (Index i : col) v[i / 64] ^= std::uint64_t(1) << (i % 64);
        for (;;) {
            Index top = highest(v);
            if (top == kNone) return false;
            if (slot_[top] == kNone) {
                slot_[top] = Index(rows_.size());
                rows_.push_back(std::move(v));
                return true;
            }
            const auto& b = rows_[slot_[top]];
            for (std::size_t w = 0; w < words_; ++w) v[w] ^= b[w];
        }
    }

private:
    Index highest(const std::vector<std::uint64_t>& v) const {
        for (std::size_t w = words_; w-- > 0;)
            if (v[w]) return Index(w * 64 + 63 - __builtin_clzll(v[w]));
        return kNone;
    }
    std::size_t words_;
    std::vector<Index> slot_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

// rank[x][y] of the columns of m with grade <= (x, y), over the box.
std::vector<std::int64_t> prefix_ranks(const GradedMatrix& m, const GradeBox& box) {
    const std::int32_t w = box.hi.y - box.lo.y + 1;
    std::vector<std::int64_t> out;
    std::vector<Index> by_y(m.num_cols());
    std::iota(by_y.begin(), by_y.end(), 0);
    std::stable_sort(by_y.begin(), by_y.end(),
                     [&](Index a, Index b) { return m.col_grades[a].y < m.col_grades[b].y; });
    for (std::int32_t x = box.lo.x; x <= box.hi.x; ++x) {
        XorBasis basis(m.num_rows());
        std::int64_t rank = 0;
        std::size_t k = 0;
        for (std::int32_t yi = 0; yi < w; ++yi) {
            const std::int32_t y = box.lo.y + yi;
            for (; k < by_y.size() && m.col_grades[by_y[k]].y <= y; ++k)
                if (m.col_grades[by_y[k]].x <= x) rank += basis.insert(m.columns[by_y[k]]);
            out.push_back(rank);
        }
    }
    return out;
}

} // namespace

HilbertGrid hilbert_oracle(const ChainComplex& c, int d, const GradeBox& box) {
    if (d < 0 || d > c.top()) throw std::out_of_range("hilbert_oracle: degree out of range");
    HilbertGrid h{box, {}};
    auto below = prefix_ranks(c.boundary[d], box);
    std::vector<std::int64_t> above(below.size(), 0);
    if (d + 1 <= c.top()) above = prefix_ranks(c.boundary[d + 1], box);
    std::size_t k = 0;
    for (std::int32_t x = box.lo.x; x <= box.hi.x; ++x)
        for (std::int32_t y = box.lo.y; y <= box.hi.y; ++y, ++k) {
            std::int64_t cells = 0;
            for (const auto& g : c.grades(d)) cells += g.leq({x, y});
            h.dims.push_back(cells - below[k] - above[k]);
        }
    return h;
}

} // namespace mfr
