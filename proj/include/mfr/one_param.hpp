#pragma once

#include <cstdint>
#include <vector>

#include "mfr/graded_matrix.hpp"

namespace mfr {

// Matrix with one-parameter grades. Rows and columns must be sorted ascending.
struct FilteredMatrix {
    std::vector<std::int64_t> row_values;
    std::vector<std::int64_t> col_values;
    std::vector<SparseColumn> columns;
};

// Reversed, negated transpose: turns a boundary into the matching coboundary.
FilteredMatrix anti_transpose(const FilteredMatrix& m);

struct Bar {
    int degree = 0;
    std::int64_t birth = 0;
    std::int64_t death = 0; // meaningless when infinite
    bool infinite = false;

    friend bool operator==(const Bar&, const Bar&) = default;
    friend auto operator<=>(const Bar&, const Bar&) = default;
};

struct BarcodeResult {
    std::vector<Bar> bars; // sorted
    // pivot_row[k][j]: pivot of reduced column j of matrix k, or kNone.
    std::vector<std::vector<Index>> pivot_row;
    std::size_t additions = 0;
    std::size_t cleared = 0;
};

// Standard left-to-right reduction of each matrix in turn, where the rows of
// matrix k are the columns of matrix k+1. With clearing, columns of matrix k+1
// whose index was a pivot of matrix k are zeroed without reduction. Emits
// (rg_i, cg_j) for every pivot, dropping zero-length pairs, and (cg_j, inf) for
// columns that die without being paired on either side. Bars from matrix k
// are labelled degree k + degree_offset.
BarcodeResult barcode_clearing(const std::vector<FilteredMatrix>& ms, bool clearing = true, int degree_offset = 0);

struct RepBar {
    Bar bar;
    SparseColumn cycle; // degree bar.degree cells, born at bar.birth
    SparseColumn chain; // degree bar.degree + 1 cells with boundary `cycle` (finite bars only)
};

// Homological reduction with representatives. boundaries[k] maps degree k to
// degree k-1 (k = 0..top). `coh` must come from barcode_clearing over the
// anti-transposes of `boundaries`; its pairing tells which columns die and
// which are essential, so every other column is skipped. Degree-top classes
// are not reported.
std::vector<RepBar> homology_reps(const std::vector<FilteredMatrix>& boundaries, const BarcodeResult& coh);

} // namespace mfr
