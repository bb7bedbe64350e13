#pragma once

#include <utility>

#include "mfr/graded_matrix.hpp"

namespace mfr {

struct LwStats {
    std::size_t additions = 0;
    std::size_t evictions = 0;
};

// Basis of ker M. Rows of the result are the columns of M (rg = cg^M).
GradedMatrix ker_basis(const GradedMatrix& m, ColumnKind kind = ColumnKind::heap, LwStats* stats = nullptr);

struct MgsResult {
    GradedMatrix mgs;    // minimal generating system of im M; rows as in M
    GradedMatrix kernel; // basis of ker(mgs); rows are the columns of mgs
};

MgsResult mgs_with_ker(const GradedMatrix& m, ColumnKind kind = ColumnKind::heap, LwStats* stats = nullptr);

// N with B = A N. A's columns must be linearly independent. Throws
// AlgebraError("not in span") if some column of B is not a combination of A.
GradedMatrix factorize(const GradedMatrix& b, const GradedMatrix& a, ColumnKind kind = ColumnKind::heap,
                       unsigned threads = 1);

} // namespace mfr
