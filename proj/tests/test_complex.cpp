#include <doctest.h>

#include <cmath>
#include <random>

#include "mfr/complex.hpp"
#include "mfr/pipelines.hpp"
#include "support/oracle.hpp"

using namespace mfr;

namespace {

Bifiltration triangle(int maxdim = 1, bool reduced = true) {
    return build_function_rips(DistanceMatrix(3, {1, 3, 2}), {0, 1, 2}, maxdim, reduced);
}

std::int64_t choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST_CASE("triangle bifiltration") {
    auto k = triangle();
    REQUIRE(k.top_dim() == 2);
    CHECK(k.grades[0] == std::vector<Grade>{{0, 0}, {1, 0}, {2, 0}});
    CHECK(k.grades[1] == std::vector<Grade>{{1, 1}, {2, 2}, {2, 3}});
    CHECK(k.simplex(1, 0) == std::vector<Index>{0, 1});
    CHECK(k.simplex(1, 1) == std::vector<Index>{1, 2});
    CHECK(k.simplex(1, 2) == std::vector<Index>{0, 2});
    CHECK(k.grades[2] == std::vector<Grade>{{2, 3}});
    CHECK(k.empty_grade == Grade{0, 0});

    auto d1 = boundary_matrix(k, 1);
    CHECK(d1.columns == std::vector<SparseColumn>{{0, 1}, {1, 2}, {0, 2}});
    auto d0 = boundary_matrix(k, 0);
    CHECK(d0.num_rows() == 1);
    CHECK(d0.columns == std::vector<SparseColumn>{{0}, {0}, {0}});
    CHECK_THROWS_AS(boundary_matrix(k, 3), std::out_of_range);

    auto c0 = coboundary_matrix(k, 0);
    CHECK(c0.num_rows() == 3);
    CHECK(c0.row_grades[0] == Grade{-1, -2}); // ac
    CHECK(c0.col_grades[2] == Grade{1, 1});   // a
    CHECK(validate(c0));
}

TEST_CASE("small builds") {
    auto one = build_function_rips(DistanceMatrix(1, {}), {5}, 0);
    CHECK(one.grades[0] == std::vector<Grade>{{5, 0}});
    CHECK(one.empty_grade == Grade{5, 0});
    auto twin = build_function_rips(DistanceMatrix(2, {0}), {0, 0}, 0);
    CHECK(twin.grades[1] == std::vector<Grade>{{0, 0}});
    CHECK_THROWS_WITH(build_function_rips(DistanceMatrix(0, {}), {}, 1), "empty point set");
    CHECK_THROWS(build_function_rips(DistanceMatrix(2, {INFINITY}), {0, 0}, 1));
    CHECK_THROWS(DistanceMatrix(3, {1, 2}));
    auto unreduced = to_chain_complex(triangle(1, false));
    CHECK(unreduced.boundary[0].num_rows() == 0);
}

TEST_CASE("function-Rips invariants on random instances") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 40; ++it) {
        Index n = 1 + it % 8;
        auto inst = oracle::random_instance(rng, n, it % 2);
        auto k = build_function_rips(inst.dist, inst.values, 2);
        auto c = to_chain_complex(k);
        CHECK(is_chain_complex(c));
        for (int d = 0; d <= k.top_dim(); ++d) {
            CHECK(k.count(d) == choose(n, d + 1));
            CHECK(rows_sorted(k.grades[d], Order::colex));
            // facets enter no later than the simplex
            auto b = boundary_matrix(k, d);
            CHECK(validate(b));
            if (d >= 1)
                for (Index j = 0; j < b.num_cols(); ++j) CHECK(b.columns[j].size() == std::size_t(d + 1));
        }
        for (int d = -1; d + 1 <= k.top_dim(); ++d) {
            auto cb = coboundary_matrix(k, d);
            CHECK(validate(cb));
            CHECK(cb == shift(graded_transpose(boundary_matrix(k, d + 1)), kEpsilon));
            CHECK(cb == c.coboundary(d));
        }
    }
}

TEST_CASE("cone off two points") {
    ChainComplex c;
    c.boundary.push_back(GradedMatrix({{0, 0}}, {{0, 0}, {1, 1}}, {{0}, {0}}));
    c.boundary.push_back(GradedMatrix({{0, 0}, {1, 1}}, {}, {}));
    auto coned = cone_off(c, Axis::x, 2);
    REQUIRE(coned.boundary[1].num_cols() == 1);
    CHECK(coned.boundary[1].col_grades[0] == Grade{2, 1});
    CHECK(coned.boundary[1].columns[0] == SparseColumn{0, 1});
    CHECK(is_chain_complex(coned));
    CHECK_THROWS(cone_off(c, Axis::x, 0));

    ChainComplex empty;
    CHECK(cone_off(empty, Axis::y).boundary.empty());
}

TEST_CASE("cone off an acyclic complex changes nothing") {
    // one vertex, reduced: the augmentation kills everything
    auto c = to_chain_complex(build_function_rips(DistanceMatrix(1, {}), {0}, 0));
    CHECK(cone_off(c, Axis::x).boundary == c.boundary);
}

TEST_CASE("coning kills homology at the dominating value") {
    std::mt19937_64 rng(9);
    for (int it = 0; it < 30; ++it) {
        auto inst = oracle::random_instance(rng, 3 + it % 7, it % 2);
        auto c = to_chain_complex(build_function_rips(inst.dist, inst.values, 1));
        for (Axis axis : {Axis::x, Axis::y}) {
            auto coned = cone_off(c, axis);
            REQUIRE(is_chain_complex(coned));
            auto box = bounding_box(coned, 1);
            std::int32_t z0 = axis == Axis::x ? box.hi.x - 1 : box.hi.y - 1;
            for (int d = 0; d <= 1; ++d) {
                auto h = hilbert_oracle(coned, d, box);
                for (auto z : oracle::grid(box))
                    if ((axis == Axis::x ? z.x : z.y) >= z0) CHECK(h.at(z) == 0);
                // below the cone the complex is untouched
                auto h0 = hilbert_oracle(c, d, box);
                for (auto z : oracle::grid(box))
                    if ((axis == Axis::x ? z.x : z.y) < z0) CHECK(h.at(z) == h0.at(z));
            }
        }
    }
}

TEST_CASE("density and discretization") {
    CHECK(gaussian_density(DistanceMatrix(1, {}), 1.0) == std::vector<double>{0.0});
    auto two = gaussian_density(DistanceMatrix(2, {std::sqrt(2.0)}), 1.0);
    CHECK(two[0] == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(gaussian_density(DistanceMatrix(2, {0.0}), 0.3) == std::vector<double>{1.0, 1.0});
    CHECK_THROWS(gaussian_density(DistanceMatrix(2, {1.0}), 0.0));

    using M = Discretization::Mode;
    CHECK(discretize_values({0.9, 0.1, 0.5}, {M::rank_desc}) == std::vector<std::int32_t>{0, 2, 1});
    CHECK(discretize_values({0.9, 0.1, 0.5}, {M::rank_asc}) == std::vector<std::int32_t>{2, 0, 1});
    CHECK(discretize_values({0.4, 0.4, 0.4}, {M::rank_desc}) == std::vector<std::int32_t>{0, 0, 0});
    CHECK(discretize_values({0.9, 0.1, 0.5}, {M::scale, 0.5}) == std::vector<std::int32_t>{1, 0, 1});
}

TEST_CASE("scale map") {
    DistanceMatrix d(3, {2.5, 1.0, 2.5});
    ScaleMap s(d);
    CHECK(s.values() == std::vector<double>{1.0, 2.5});
    CHECK(s.index(0) == 0);
    CHECK(s.index(1.0) == 1);
    CHECK(s.index(2.5) == 2);
    CHECK_THROWS(s.index(2.0));
}
