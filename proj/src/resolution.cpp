#include "mfr/resolution.hpp"

#include "mfr/minimize.hpp"

namespace mfr {

bool is_resolution_consistent(const FreeResolution& r) {
    if (r.u1.col_grades != r.u2.row_grades) return false;
    if (!validate(r.u1) || !validate(r.u2)) return false;
    return multiply(r.u1, r.u2).nonzeros() == 0;
}

FreeResolution minimize_resolution(const FreeResolution& r, ColumnKind kind, unsigned threads) {
    auto ds = minimize_chain({r.u1, r.u2}, kind, threads);
    FreeResolution out;
    out.degree = r.degree;
    out.u1 = std::move(ds[0]);
    out.u2 = std::move(ds[1]);
    out.minimal = true;
    return out;
}

FreeResolution dualize_resolution(const FreeResolution& r) {
    FreeResolution out;
    out.degree = r.degree;
    out.u1 = shift(graded_transpose(r.u2), kEpsilon);
    out.u2 = shift(graded_transpose(r.u1), kEpsilon);
    out.minimal = r.minimal;
    if (out.u1.col_grades != out.u2.row_grades) throw std::logic_error("dualize_resolution: dimension mismatch");
    return out;
}

BettiDiagram betti(const FreeResolution& r) {
    if (!r.minimal || !is_minimal(r.u1) || !is_minimal(r.u2))
        throw AlgebraError("betti: resolution is not minimal");
    auto sorted = [](std::vector<Grade> g) {
        std::sort(g.begin(), g.end(), colex_less);
        return g;
    };
    return {sorted(r.f0()), sorted(r.f1()), sorted(r.f2())};
}

HilbertGrid hilbert_from_resolution(const FreeResolution& r, const GradeBox& box) {
    HilbertGrid h{box, {}};
    const std::vector<Grade>* lists[3] = {&r.f0(), &r.f1(), &r.f2()};
    for (std::int32_t x = box.lo.x; x <= box.hi.x; ++x)
        for (std::int32_t y = box.lo.y; y <= box.hi.y; ++y) {
            std::int64_t v = 0;
            for (int q = 0; q < 3; ++q) {
                std::int64_t c = 0;
                for (const auto& g : *lists[q]) c += g.leq({x, y});
                v += (q % 2 ? -c : c);
            }
            if (v < 0) throw AlgebraError("hilbert_from_resolution: negative dimension");
            h.dims.push_back(v);
        }
    return h;
}

} // namespace mfr
