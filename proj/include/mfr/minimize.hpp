#pragma once

#include "mfr/graded_matrix.hpp"

namespace mfr {

struct MinimizeResult {
    GradedMatrix matrix;    // rows `rows`, columns `cols` of the reduced matrix
    std::vector<Index> rows; // surviving row indices
    std::vector<Index> cols; // surviving column indices
    std::size_t pairs = 0;   // balls split off
};

// Splits off balls (a row and column of equal grade paired by a pivot). Rows
// should be sorted along a linear extension of the partial order for the
// result to be minimal.
MinimizeResult minimize_map(const GradedMatrix& d, ColumnKind kind = ColumnKind::heap, unsigned threads = 1);

// ds[k] * ds[k+1] = 0 (ds[0] is the lowest map). Output is minimal and
// quasi-isomorphic to the input.
std::vector<GradedMatrix> minimize_chain(const std::vector<GradedMatrix>& ds, ColumnKind kind = ColumnKind::heap,
                                         unsigned threads = 1);

// ds[k+1] * ds[k] = 0 (ds[0] is the lowest coboundary).
std::vector<GradedMatrix> minimize_cochain(const std::vector<GradedMatrix>& ds, ColumnKind kind = ColumnKind::heap,
                                           unsigned threads = 1);

} // namespace mfr
