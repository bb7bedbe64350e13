#pragma once

#include <optional>
#include <vector>

#include "mfr/graded_matrix.hpp"
#include "mfr/one_param.hpp"

namespace mfr {

// Strict lower triangle, row by row: entry (i, j) with i > j lives at i(i-1)/2 + j.
struct DistanceMatrix {
    Index n = 0;
    std::vector<double> lower;

    DistanceMatrix() = default;
    DistanceMatrix(Index n_, std::vector<double> lower_);
    double operator()(Index i, Index j) const;
};

// Distinct positive distances r_1 < ... < r_k map to 1..k; 0 maps to 0.
class ScaleMap {
public:
    explicit ScaleMap(const DistanceMatrix& d);
    std::int32_t index(double r) const;
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> values_;
};

// Full function-Rips bifiltration. Simplices of each dimension are stored flat
// and sorted colexicographically by grade, ties broken by vertex tuple.
struct Bifiltration {
    Index num_points = 0;
    int maxdim = 0; // highest homology degree of interest; simplices go to maxdim + 1
    bool reduced = true;
    Grade empty_grade{};
    std::vector<std::vector<Index>> vertices; // vertices[d]: (d+1) * count(d) entries
    std::vector<std::vector<Grade>> grades;   // grades[d]

    int top_dim() const { return int(grades.size()) - 1; }
    Index count(int d) const { return Index(grades.at(d).size()); }
    std::vector<Index> simplex(int d, Index k) const {
        return {vertices[d].begin() + (d + 1) * k, vertices[d].begin() + (d + 1) * (k + 1)};
    }
};

Bifiltration build_function_rips(const DistanceMatrix& dist, const std::vector<std::int32_t>& f, int maxdim,
                                 bool reduced = true);

// Rows are (d-1)-simplices, columns d-simplices. d = 0 gives the augmentation
// row (or a 0-row matrix when unreduced).
GradedMatrix boundary_matrix(const Bifiltration& k, int d);

// Graded transpose of boundary_matrix(k, d+1), translated so simplex s carries
// grade eps - g(s). Rows are (d+1)-simplices and columns d-simplices, both in
// reversed order.
GradedMatrix coboundary_matrix(const Bifiltration& k, int d);

// Generic free chain complex: boundary[d] maps degree d to degree d-1 for
// d = 0..top; boundary[0]'s rows are degree -1.
struct ChainComplex {
    std::vector<GradedMatrix> boundary;

    int top() const { return int(boundary.size()) - 1; }
    const std::vector<Grade>& grades(int d) const {
        return d < 0 ? boundary.at(0).row_grades : boundary.at(d).col_grades;
    }
    Index count(int d) const { return Index(grades(d).size()); }
    GradedMatrix coboundary(int d) const; // degree d -> d+1, as coboundary_matrix
};

ChainComplex to_chain_complex(const Bifiltration& k);

// Checks grade validity and that consecutive boundaries compose to zero.
bool is_chain_complex(const ChainComplex& c);

enum class Axis { x, y };

// Colimit along `axis`: a one-parameter complex in the other coordinate, cells
// of each degree stably sorted by it. order[q+1][p] is the original index of
// the degree-q cell at sorted position p.
struct Collapsed {
    std::vector<FilteredMatrix> boundaries;
    std::vector<std::vector<Index>> order;
};

Collapsed collapse(const ChainComplex& c, Axis axis);

// Cones off the complex along `axis`: after this, homology vanishes once the
// collapsed coordinate reaches z0 (default: one past the largest coordinate).
// Cells that would land above the top degree are omitted.
ChainComplex cone_off(const ChainComplex& c, Axis axis, std::optional<std::int32_t> z0 = std::nullopt);

std::vector<double> gaussian_density(const DistanceMatrix& dist, double sigma);

struct Discretization {
    enum class Mode { rank_desc, rank_asc, scale } mode = Mode::rank_desc;
    double quantum = 1.0; // for scale
};

std::vector<std::int32_t> discretize_values(const std::vector<double>& v, Discretization mode);

} // namespace mfr
