#pragma once

#include <vector>

#include "mfr/graded_matrix.hpp"

namespace mfr {

// 0 -> F2 --u2--> F1 --u1--> F0. Generator grades live in the matrices:
// F0 = u1.row_grades, F1 = u1.col_grades = u2.row_grades, F2 = u2.col_grades.
struct FreeResolution {
    int degree = 0;
    GradedMatrix u1;
    GradedMatrix u2;
    bool minimal = false;

    const std::vector<Grade>& f0() const { return u1.row_grades; }
    const std::vector<Grade>& f1() const { return u1.col_grades; }
    const std::vector<Grade>& f2() const { return u2.col_grades; }

    friend bool operator==(const FreeResolution&, const FreeResolution&) = default;
};

// Shape and composition check: u1 u2 = 0, both valid, F1 consistent.
bool is_resolution_consistent(const FreeResolution& r);

// Minimizes via minimize_chain and sets the flag.
FreeResolution minimize_resolution(const FreeResolution& r, ColumnKind kind = ColumnKind::heap, unsigned threads = 1);

// Resolution of M from one of M^*: reverse, transpose, shift by eps.
FreeResolution dualize_resolution(const FreeResolution& r);

struct BettiDiagram {
    std::vector<Grade> b0, b1, b2; // colex-sorted multisets
    friend bool operator==(const BettiDiagram&, const BettiDiagram&) = default;
};

BettiDiagram betti(const FreeResolution& r);

struct GradeBox {
    Grade lo, hi; // inclusive
    friend bool operator==(const GradeBox&, const GradeBox&) = default;
};

struct HilbertGrid {
    GradeBox box;
    std::vector<std::int64_t> dims; // x-major

    std::int64_t at(Grade z) const {
        return dims[std::size_t(z.x - box.lo.x) * std::size_t(box.hi.y - box.lo.y + 1) + std::size_t(z.y - box.lo.y)];
    }
    friend bool operator==(const HilbertGrid&, const HilbertGrid&) = default;
};

HilbertGrid hilbert_from_resolution(const FreeResolution& r, const GradeBox& box);

} // namespace mfr
