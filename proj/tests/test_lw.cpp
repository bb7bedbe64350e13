#include <doctest.h>

#include <random>

#include "mfr/lw.hpp"
#include "support/oracle.hpp"

using namespace mfr;

namespace {

const ColumnKind kKinds[] = {ColumnKind::heap, ColumnKind::vector};

// Kernel basis check at every grade of the box.
void check_kernel(const GradedMatrix& m, const GradedMatrix& k) {
    REQUIRE(validate(k));
    REQUIRE(k.row_grades == m.col_grades);
    CHECK(oracle::independent(k.columns, k.num_rows()));
    for (const auto& c : k.columns) CHECK(oracle::apply(m, c).empty());
    for (auto z : oracle::grid(m)) {
        int cols = 0;
        for (const auto& g : m.col_grades) cols += g.leq(z);
        int nullity = cols - oracle::rank(oracle::columns_below(m, z), m.num_rows());
        CHECK(oracle::rank(oracle::columns_below(k, z), k.num_rows()) == nullity);
    }
}

} // namespace

TEST_CASE("kernel of a 1x2 matrix") {
    GradedMatrix m({{0, 0}}, {{1, 0}, {0, 1}}, {{0}, {0}});
    for (auto kind : kKinds) {
        LwStats st;
        auto k = ker_basis(m, kind, &st);
        REQUIRE(k.num_cols() == 1);
        CHECK(k.columns[0] == SparseColumn{0, 1});
        CHECK(k.col_grades[0] == Grade{1, 1});
        CHECK(st.evictions == 1);
    }
}

TEST_CASE("kernel edge cases") {
    GradedMatrix id({{0, 0}, {1, 1}}, {{0, 0}, {1, 1}}, {{0}, {1}});
    CHECK(ker_basis(id).num_cols() == 0);
    GradedMatrix z({{0, 0}}, {{2, 1}}, {{}});
    auto k = ker_basis(z);
    REQUIRE(k.num_cols() == 1);
    CHECK(k.columns[0] == SparseColumn{0});
    CHECK(k.col_grades[0] == Grade{2, 1});
    CHECK_THROWS(ker_basis(GradedMatrix({{1, 0}}, {{0, 1}}, {{0}})));
}

TEST_CASE("kernel matches the rank oracle") {
    std::mt19937_64 rng(1);
    for (int it = 0; it < 300; ++it) {
        auto m = oracle::random_matrix(rng, 1 + it % 6, 1 + it % 7, 4, 0.6);
        auto kh = ker_basis(m, ColumnKind::heap);
        CHECK(kh == ker_basis(m, ColumnKind::vector));
        check_kernel(m, kh);
    }
}

TEST_CASE("mgs examples") {
    GradedMatrix m({{0, 0}}, {{1, 0}, {0, 1}}, {{0}, {0}});
    auto r = mgs_with_ker(m);
    CHECK(r.mgs.num_cols() == 2);
    REQUIRE(r.kernel.num_cols() == 1);
    CHECK(r.kernel.columns[0] == SparseColumn{0, 1});
    CHECK(r.kernel.col_grades[0] == Grade{1, 1});

    GradedMatrix same({{0, 0}}, {{0, 0}, {0, 0}}, {{0}, {0}});
    auto s = mgs_with_ker(same);
    CHECK(s.mgs.num_cols() == 1);
    CHECK(s.kernel.num_cols() == 0);

    GradedMatrix zero({{0, 0}}, {{1, 1}}, {{}});
    auto e = mgs_with_ker(zero);
    CHECK(e.mgs.num_cols() == 0);
    CHECK(e.kernel.num_cols() == 0);
}

TEST_CASE("mgs is minimal and generates the image; its kernel is a kernel basis") {
    std::mt19937_64 rng(2);
    for (int it = 0; it < 300; ++it) {
        auto m = oracle::random_matrix(rng, 1 + it % 6, 1 + it % 8, 4, 0.6);
        for (auto kind : kKinds) {
            auto r = mgs_with_ker(m, kind);
            REQUIRE(validate(r.mgs));
            REQUIRE(r.mgs.row_grades == m.row_grades);
            CHECK(r.kernel.row_grades == r.mgs.col_grades);
            for (auto z : oracle::grid(m)) {
                auto im = oracle::columns_below(m, z);
                auto gens = oracle::columns_below(r.mgs, z);
                int rank_im = oracle::rank(im, m.num_rows());
                CHECK(oracle::rank(gens, m.num_rows()) == rank_im);
                auto all = im;
                all.insert(all.end(), gens.begin(), gens.end());
                CHECK(oracle::rank(all, m.num_rows()) == rank_im);
                // generators needed exactly at z
                auto lower = oracle::columns_strictly_below(m, z);
                int need = rank_im - oracle::rank(lower, m.num_rows());
                int have = 0;
                for (const auto& g : r.mgs.col_grades) have += g == z;
                CHECK(have == need);
            }
            check_kernel(r.mgs, r.kernel);
        }
    }
}

TEST_CASE("factorize") {
    GradedMatrix a({{0, 0}, {0, 0}}, {{1, 1}}, {{0, 1}});
    GradedMatrix b({{0, 0}, {0, 0}}, {{2, 2}}, {{0, 1}});
    auto n = factorize(b, a);
    CHECK(n.columns == std::vector<SparseColumn>{{0}});
    CHECK(n.row_grades == std::vector<Grade>{{1, 1}});
    CHECK(n.col_grades == std::vector<Grade>{{2, 2}});

    // pivots need not be distinct
    GradedMatrix a2({{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}, {{0, 1}, {1}});
    GradedMatrix b2({{0, 0}, {0, 0}}, {{1, 1}}, {{0}});
    for (auto kind : kKinds) CHECK(factorize(b2, a2, kind).columns == std::vector<SparseColumn>{{0, 1}});

    GradedMatrix outside({{0, 0}, {0, 0}}, {{1, 1}}, {{1}});
    CHECK_THROWS_AS(factorize(outside, a), AlgebraError);
    CHECK_THROWS(factorize(b, GradedMatrix({{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}, {{0}, {0}})));
}

TEST_CASE("factorize through kernels reproduces the target") {
    std::mt19937_64 rng(8);
    for (int it = 0; it < 200; ++it) {
        auto m = oracle::random_matrix(rng, 1 + it % 5, 2 + it % 7, 4, 0.6);
        auto k = ker_basis(m);
        if (k.num_cols() == 0) continue;
        // random combinations of kernel columns at grades above theirs
        std::uniform_int_distribution<int> pick(0, k.num_cols() - 1), up(0, 2);
        GradedMatrix b;
        b.row_grades = k.row_grades;
        for (int c = 0; c < 4; ++c) {
            SparseColumn col;
            Grade g{-100, -100};
            for (int t = 0; t < 3; ++t) {
                int j = pick(rng);
                col = add_columns(col, k.columns[j]);
                g = join(g, k.col_grades[j]);
            }
            b.columns.push_back(col);
            b.col_grades.push_back(g + Grade{up(rng), up(rng)});
        }
        for (unsigned threads : {1u, 3u}) {
            auto n = factorize(b, k, ColumnKind::heap, threads);
            CHECK(validate(n));
            auto prod = multiply(k, n);
            CHECK(prod.columns == b.columns);
            CHECK(n == factorize(b, k, ColumnKind::vector, threads));
        }
    }
}
