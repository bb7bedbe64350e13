#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mfr/column.hpp"
#include "mfr/grade.hpp"

namespace mfr {

// Sparse GF(2) column: sorted row indices.
using SparseColumn = std::vector<Index>;

struct GradedMatrix {
    std::vector<Grade> row_grades;
    std::vector<Grade> col_grades;
    std::vector<SparseColumn> columns;

    GradedMatrix() = default;
    GradedMatrix(std::vector<Grade> rg, std::vector<Grade> cg, std::vector<SparseColumn> cols)
        : row_grades(std::move(rg)), col_grades(std::move(cg)), columns(std::move(cols)) {
        if (columns.size() != col_grades.size())
            throw std::invalid_argument("column count does not match column grades");
    }

    Index num_rows() const { return Index(row_grades.size()); }
    Index num_cols() const { return Index(col_grades.size()); }
    bool entry(Index i, Index j) const;
    std::size_t nonzeros() const;

    friend bool operator==(const GradedMatrix&, const GradedMatrix&) = default;
};

class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Every nonzero entry satisfies rg_i <= cg_j.
bool validate(const GradedMatrix& m);
// Every nonzero entry satisfies rg_i <= cg_j and rg_i != cg_j.
bool is_minimal(const GradedMatrix& m);

GradedMatrix graded_transpose(const GradedMatrix& m);
GradedMatrix shift(const GradedMatrix& m, Grade z);

// [B]_r: column grades are the joins of the row grades in their support.
// Zero columns have no grade and are rejected.
GradedMatrix with_minimal_col_grades(const std::vector<SparseColumn>& b, const std::vector<Grade>& r);

enum class PivotKind { index, lex, colex };

// 0-based; kNone for the zero column.
Index pivot(const SparseColumn& b, const std::vector<Grade>& r, PivotKind kind);

bool rows_sorted(const std::vector<Grade>& g, Order order);

SparseColumn add_columns(const SparseColumn& a, const SparseColumn& b);

// Product over GF(2); row grades from a, column grades from b.
GradedMatrix multiply(const GradedMatrix& a, const GradedMatrix& b);

// Keeps the listed rows/columns (in the given order) and renumbers.
GradedMatrix select_rows(const GradedMatrix& m, const std::vector<Index>& rows);
GradedMatrix select_cols(const GradedMatrix& m, const std::vector<Index>& cols);

std::string to_string(const GradedMatrix& m);

} // namespace mfr
