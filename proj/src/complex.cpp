#include "mfr/complex.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mfr {

DistanceMatrix::DistanceMatrix(Index n_, std::vector<double> lower_) : n(n_), lower(std::move(lower_)) {
    if (lower.size() != std::size_t(n) * std::size_t(n > 0 ? n - 1 : 0) / 2)
        throw std::invalid_argument("distance matrix: wrong number of entries");
}

double DistanceMatrix::operator()(Index i, Index j) const {
    if (i == j) return 0.0;
    if (i < j) std::swap(i, j);
    return lower[std::size_t(i) * (i - 1) / 2 + j];
}

ScaleMap::ScaleMap(const DistanceMatrix& d) {
    for (double r : d.lower) {
        if (!std::isfinite(r)) throw std::invalid_argument("non-finite distance");
        if (r < 0) throw std::invalid_argument("negative distance");
        if (r > 0) values_.push_back(r);
    }
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

std::int32_t ScaleMap::index(double r) const {
    if (r == 0) return 0;
    auto it = std::lower_bound(values_.begin(), values_.end(), r);
    if (it == values_.end() || *it != r) throw std::invalid_argument("distance not in scale map");
    return std::int32_t(it - values_.begin()) + 1;
}

namespace {

class Binomial {
public:
    Binomial(Index n, int k) : k_(k + 1), t_(std::size_t(n + 1) * (k + 1), 0) {
        for (Index i = 0; i <= n; ++i) {
            at(i, 0) = 1;
            for (int j = 1; j <= k && j <= i; ++j) at(i, j) = at(i - 1, j - 1) + (j <= i - 1 ? at(i - 1, j) : 0);
        }
    }
    std::int64_t operator()(Index n, int k) const { return k > n ? 0 : t_[std::size_t(n) * k_ + k]; }

private:
    std::int64_t& at(Index n, int k) { return t_[std::size_t(n) * k_ + k]; }
    int k_;
    std::vector<std::int64_t> t_;
};

// Colex rank of a sorted vertex tuple; dense in [0, C(n, size)).
std::int64_t tuple_rank(const Index* v, int size, const Binomial& b) {
    std::int64_t r = 0;
    for (int i = 0; i < size; ++i) r += b(v[i], i + 1);
    return r;
}

struct Enumerator {
    const DistanceMatrix& dist;
    const std::vector<std::int32_t>& f;
    const ScaleMap& scale;
    int size;
    std::vector<Index>& verts;
    std::vector<Grade>& grades;
    std::vector<Index> cur;

    void run(Index start, std::int32_t fx, double diam) {
        if (int(cur.size()) == size) {
            verts.insert(verts.end(), cur.begin(), cur.end());
            grades.push_back({fx, scale.index(diam)});
            return;
        }
        for (Index v = start; v < dist.n; ++v) {
            double d = diam;
            for (Index u : cur) d = std::max(d, dist(u, v));
            cur.push_back(v);
            run(v + 1, cur.size() == 1 ? f[v] : std::max(fx, f[v]), d);
            cur.pop_back();
        }
    }
};

} // namespace

Bifiltration build_function_rips(const DistanceMatrix& dist, const std::vector<std::int32_t>& f, int maxdim,
                                 bool reduced) {
    if (dist.n == 0) throw std::invalid_argument("empty point set");
    if (Index(f.size()) != dist.n) throw std::invalid_argument("function values do not match point count");
    if (maxdim < 0) throw std::invalid_argument("maxdim must be nonnegative");
    ScaleMap scale(dist);

    Bifiltration k;
    k.num_points = dist.n;
    k.maxdim = maxdim;
    k.reduced = reduced;
    k.empty_grade = {*std::min_element(f.begin(), f.end()), 0};
    int top = std::min<int>(maxdim + 1, dist.n - 1);
    k.vertices.resize(top + 1);
    k.grades.resize(top + 1);
    for (int d = 0; d <= top; ++d) {
        std::vector<Index> verts;
        std::vector<Grade> grades;
        Enumerator e{dist, f, scale, d + 1, verts, grades, {}};
        e.run(0, 0, 0.0);

        // Enumeration is lexicographic in the vertex tuple, so a stable sort
        // by grade gives the tie-break for free.
        std::vector<Index> perm(grades.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::stable_sort(perm.begin(), perm.end(),
                         [&](Index a, Index b) { return colex_less(grades[a], grades[b]); });
        auto& kv = k.vertices[d];
        auto& kg = k.grades[d];
        kv.reserve(verts.size());
        kg.reserve(grades.size());
        for (Index p : perm) {
            kv.insert(kv.end(), verts.begin() + (d + 1) * p, verts.begin() + (d + 1) * (p + 1));
            kg.push_back(grades[p]);
        }
    }
    // Keep the dimension count fixed even when there are too few points.
    for (int d = top + 1; d <= maxdim + 1; ++d) {
        k.vertices.emplace_back();
        k.grades.emplace_back();
    }
    return k;
}

GradedMatrix boundary_matrix(const Bifiltration& k, int d) {
    if (d < 0 || d > k.top_dim()) throw std::out_of_range("boundary_matrix: dimension out of range");
    GradedMatrix m;
    m.col_grades = k.grades[d];
    m.columns.resize(k.count(d));
    if (d == 0) {
        if (k.reduced) {
            m.row_grades = {k.empty_grade};
            for (auto& c : m.columns) c = {0};
        }
        return m;
    }
    m.row_grades = k.grades[d - 1];
    Binomial b(k.num_points, d + 1);
    std::vector<Index> pos(b(k.num_points, d), kNone);
    for (Index t = 0; t < k.count(d - 1); ++t) pos[tuple_rank(&k.vertices[d - 1][std::size_t(d) * t], d, b)] = t;
    std::vector<Index> facet(d);
    for (Index s = 0; s < k.count(d); ++s) {
        const Index* v = &k.vertices[d][std::size_t(d + 1) * s];
        auto& col = m.columns[s];
        for (int drop = 0; drop <= d; ++drop) {
            int w = 0;
            for (int i = 0; i <= d; ++i)
                if (i != drop) facet[w++] = v[i];
            col.push_back(pos[tuple_rank(facet.data(), d, b)]);
        }
        std::sort(col.begin(), col.end());
    }
    return m;
}

GradedMatrix coboundary_matrix(const Bifiltration& k, int d) {
    if (d < -1 || d + 1 > k.top_dim()) throw std::out_of_range("coboundary_matrix: dimension out of range");
    return shift(graded_transpose(boundary_matrix(k, d + 1)), kEpsilon);
}

GradedMatrix ChainComplex::coboundary(int d) const {
    if (d < -1 || d + 1 > top()) throw std::out_of_range("coboundary: dimension out of range");
    return shift(graded_transpose(boundary[d + 1]), kEpsilon);
}

ChainComplex to_chain_complex(const Bifiltration& k) {
    ChainComplex c;
    for (int d = 0; d <= k.top_dim(); ++d) c.boundary.push_back(boundary_matrix(k, d));
    return c;
}

bool is_chain_complex(const ChainComplex& c) {
    for (int d = 0; d <= c.top(); ++d) {
        const auto& m = c.boundary[d];
        if (!validate(m)) return false;
        if (d > 0 && m.num_rows() != c.boundary[d - 1].num_cols()) return false;
        if (d > 0 && multiply(c.boundary[d - 1], m).nonzeros() != 0) return false;
    }
    return true;
}

std::vector<double> gaussian_density(const DistanceMatrix& dist, double sigma) {
    if (!(sigma > 0)) throw std::invalid_argument("sigma must be positive");
    std::vector<double> rho(dist.n, 0.0);
    for (Index i = 0; i < dist.n; ++i)
        for (Index j = 0; j < i; ++j) {
            double d = dist(i, j);
            double w = std::exp(-d * d / (2 * sigma * sigma));
            rho[i] += w;
            rho[j] += w;
        }
    return rho;
}

std::vector<std::int32_t> discretize_values(const std::vector<double>& v, Discretization mode) {
    std::vector<std::int32_t> out(v.size());
    if (mode.mode == Discretization::Mode::scale) {
        if (!(mode.quantum > 0)) throw std::invalid_argument("scale quantum must be positive");
        for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::int32_t(std::floor(v[i] / mode.quantum));
        return out;
    }
    std::vector<double> distinct(v);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    const auto k = std::int32_t(distinct.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto r = std::int32_t(std::lower_bound(distinct.begin(), distinct.end(), v[i]) - distinct.begin());
        out[i] = mode.mode == Discretization::Mode::rank_asc ? r : k - 1 - r;
    }
    return out;
}

} // namespace mfr
