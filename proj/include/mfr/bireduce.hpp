#pragma once

#include <utility>

#include "mfr/graded_matrix.hpp"

namespace mfr {

struct BireduceStats {
    std::size_t input_columns = 0;   // nonzero columns entering phase 1
    std::size_t phase1_additions = 0;
    std::size_t phase2_additions = 0;
    std::size_t phase2_swaps = 0;
};

struct BireduceOptions {
    ColumnKind kind = ColumnKind::heap;
    bool lex_first = false; // run the lex phase first (benchmarking only)
};

struct BireduceResult {
    GradedMatrix basis;               // [B]_r, zero columns dropped
    std::vector<Index> colex_pivots;  // per basis column, row index
    BireduceStats stats;
};

// Basis of the pullback to F(r_1) + ... + F(r_m) of the span of b's columns.
// Rows must be sorted colexicographically.
BireduceResult bireduce(const std::vector<SparseColumn>& b, const std::vector<Grade>& r,
                        const BireduceOptions& opts = {});

struct SparsifyResult {
    GradedMatrix matrix;
    std::vector<std::pair<Index, Index>> row_ops; // (i, h): row i += row h, with i < h
};

// Removes entries using rows that hold a single entry. Rows must satisfy
// rg_i > rg_j never holding for i < j.
SparsifyResult sparsify(const GradedMatrix& m);

} // namespace mfr
