#include "mfr/graded_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace mfr {

ColumnKind parse_column_kind(std::string_view s) {
    if (s == "heap") return ColumnKind::heap;
    if (s == "vector") return ColumnKind::vector;
    throw std::invalid_argument("unknown column kind: " + std::string(s));
}

bool GradedMatrix::entry(Index i, Index j) const {
    const auto& c = columns.at(j);
    return std::binary_search(c.begin(), c.end(), i);
}

std::size_t GradedMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns) n += c.size();
    return n;
}

bool validate(const GradedMatrix& m) {
    for (Index j = 0; j < m.num_cols(); ++j)
        for (Index i : m.columns[j]) {
            if (i < 0 || i >= m.num_rows()) return false;
            if (!m.row_grades[i].leq(m.col_grades[j])) return false;
        }
    return true;
}

bool is_minimal(const GradedMatrix& m) {
    if (!validate(m)) return false;
    for (Index j = 0; j < m.num_cols(); ++j)
        for (Index i : m.columns[j])
            if (m.row_grades[i] == m.col_grades[j]) return false;
    return true;
}

GradedMatrix graded_transpose(const GradedMatrix& m) {
    const Index rows = m.num_rows(), cols = m.num_cols();
    GradedMatrix t;
    t.row_grades.resize(cols);
    t.col_grades.resize(rows);
    t.columns.resize(rows);
    for (Index i = 0; i < cols; ++i) t.row_grades[i] = -m.col_grades[cols - 1 - i];
    for (Index j = 0; j < rows; ++j) t.col_grades[j] = -m.row_grades[rows - 1 - j];
    // (M^T)_{ij} = M_{m-1-j, n-1-i}; walk old columns from the right so new
    // row indices arrive in increasing order.
    for (Index oj = cols - 1; oj >= 0; --oj) {
        Index ni = cols - 1 - oj;
        for (Index oi : m.columns[oj]) t.columns[rows - 1 - oi].push_back(ni);
    }
    return t;
}

GradedMatrix shift(const GradedMatrix& m, Grade z) {
    GradedMatrix s = m;
    for (auto& g : s.row_grades) g = g + z;
    for (auto& g : s.col_grades) g = g + z;
    return s;
}

GradedMatrix with_minimal_col_grades(const std::vector<SparseColumn>& b, const std::vector<Grade>& r) {
    GradedMatrix out;
    out.row_grades = r;
    out.columns = b;
    out.col_grades.reserve(b.size());
    for (const auto& c : b) {
        if (c.empty()) throw AlgebraError("[B]_r: zero column has no grade");
        Grade g = r.at(c.front());
        for (Index i : c) g = join(g, r.at(i));
        out.col_grades.push_back(g);
    }
    return out;
}

Index pivot(const SparseColumn& b, const std::vector<Grade>& r, PivotKind kind) {
    if (b.empty()) return kNone;
    if (kind == PivotKind::index) return b.back();
    auto less = kind == PivotKind::lex ? lex_less : colex_less;
    Index best = b.front();
    for (Index i : b)
        if (less(r[best], r[i])) best = i; // strict: keeps the smallest index among ties
    return best;
}

bool rows_sorted(const std::vector<Grade>& g, Order order) {
    for (std::size_t k = 1; k < g.size(); ++k) {
        Cmp c = grade_compare(g[k - 1], g[k], order);
        if (c == Cmp::greater || c == Cmp::incomparable) return false;
    }
    return true;
}

SparseColumn add_columns(const SparseColumn& a, const SparseColumn& b) {
    SparseColumn out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

GradedMatrix multiply(const GradedMatrix& a, const GradedMatrix& b) {
    if (a.num_cols() != b.num_rows()) throw std::invalid_argument("multiply: dimension mismatch");
    GradedMatrix p;
    p.row_grades = a.row_grades;
    p.col_grades = b.col_grades;
    p.columns.resize(b.num_cols());
    for (Index j = 0; j < b.num_cols(); ++j) {
        SparseColumn acc;
        for (Index k : b.columns[j]) acc = add_columns(acc, a.columns[k]);
        p.columns[j] = std::move(acc);
    }
    return p;
}

GradedMatrix select_rows(const GradedMatrix& m, const std::vector<Index>& rows) {
    std::vector<Index> newpos(m.num_rows(), kNone);
    GradedMatrix s;
    s.row_grades.reserve(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        newpos[rows[k]] = Index(k);
        s.row_grades.push_back(m.row_grades[rows[k]]);
    }
    s.col_grades = m.col_grades;
    s.columns.resize(m.num_cols());
    for (Index j = 0; j < m.num_cols(); ++j) {
        for (Index i : m.columns[j])
            if (newpos[i] != kNone) s.columns[j].push_back(newpos[i]);
        std::sort(s.columns[j].begin(), s.columns[j].end());
    }
    return s;
}

GradedMatrix select_cols(const GradedMatrix& m, const std::vector<Index>& cols) {
    GradedMatrix s;
    s.row_grades = m.row_grades;
    s.col_grades.reserve(cols.size());
    s.columns.reserve(cols.size());
    for (Index j : cols) {
        s.col_grades.push_back(m.col_grades[j]);
        s.columns.push_back(m.columns[j]);
    }
    return s;
}

std::string to_string(const GradedMatrix& m) {
    std::ostringstream os;
    os << m.num_rows() << "x" << m.num_cols() << "\n rg:";
    for (auto& g : m.row_grades) os << ' ' << g;
    os << "\n";
    for (Index j = 0; j < m.num_cols(); ++j) {
        os << ' ' << m.col_grades[j] << " :";
        for (Index i : m.columns[j]) os << ' ' << i;
        os << "\n";
    }
    return os.str();
}

} // namespace mfr
