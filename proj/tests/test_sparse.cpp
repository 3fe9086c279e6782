#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "tothom/sparse.hpp"

using namespace tothom;

namespace {
SparseMat random_mat(std::mt19937& rng, int rows, int cols) {
    std::uniform_int_distribution<int> val(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::bernoulli_distribution fill(0.4);
    SparseMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (fill(rng)) m.set(i, j, rat(val(rng), den(rng)));
    return m;
}
}  // namespace

TEST_CASE("rational string round trip") {
    CHECK(rat_to_string(Rat(3)) == "3");
    CHECK(rat_to_string(rat(-2, 4)) == "-1/2");
    CHECK(rat_from_string("7/3") == Rat(7, 3));
    CHECK(rat_from_string("-5") == Rat(-5));
    CHECK(rat_from_string("2/4") == Rat(1, 2));
    CHECK_THROWS(rat_from_string(""));
    CHECK_THROWS(rat_from_string("x"));
    CHECK_THROWS(rat_from_string("1/0"));
}

TEST_CASE("basic matrix algebra") {
    auto a = SparseMat::from_dense({{1, 2}, {3, 4}});
    auto b = SparseMat::from_dense({{0, 1}, {1, 0}});
    CHECK((a * b) == SparseMat::from_dense({{2, 1}, {4, 3}}));
    CHECK((a + b - b) == a);
    CHECK((-a + a).is_zero());
    CHECK(a.transpose().transpose() == a);
    CHECK((a * SparseMat::identity(2)) == a);
    CHECK(a.at(1, 0) == 3);
    auto v = a.apply({Rat(1), Rat(1)});
    CHECK(v[0] == 3);
    CHECK(v[1] == 7);
}

TEST_CASE("block assembly") {
    auto a = SparseMat::from_dense({{1, 2}, {3, 4}});
    auto h = a.hcat(SparseMat::identity(2));
    CHECK(h.cols() == 4);
    CHECK(h.col_slice(0, 2) == a);
    CHECK(h.col_slice(2, 2) == SparseMat::identity(2));
    auto s = a.vcat(SparseMat::zero(1, 2));
    CHECK(s.rows() == 3);
    SparseMat big(4, 4);
    big.insert_block(1, 2, a);
    CHECK(big.at(2, 3) == 4);
}

TEST_CASE("rank on spec examples") {
    CHECK(rank(SparseMat::zero(2, 2)) == 0);
    CHECK(kernel_basis(SparseMat::zero(2, 2)).cols() == 2);
    CHECK(rank(SparseMat::identity(3)) == 3);
    CHECK(kernel_basis(SparseMat::identity(3)).cols() == 0);
    auto a = SparseMat::from_dense({{1, 2}, {2, 4}});
    CHECK(rank(a) == 1);
    auto k = kernel_basis(a);
    REQUIRE(k.cols() == 1);
    // spanned by (2, -1) up to scale
    CHECK(k.at(0, 0) * Rat(-1) == k.at(1, 0) * Rat(2));
    CHECK((a * k).is_zero());
}

TEST_CASE("solve on spec examples") {
    auto id = SparseMat::identity(2);
    auto x = solve1(id, {Rat(5), Rat(-3, 2)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 5);
    CHECK((*x)[1] == Rat(-3, 2));

    CHECK(!solve1(SparseMat::zero(2, 2), {Rat(1), Rat(0)}).has_value());

    auto a = SparseMat::from_dense({{1, 1}, {0, 1}});
    auto y = solve1(a, {Rat(3), Rat(1)});
    REQUIRE(y.has_value());
    CHECK((*y)[0] == 2);
    CHECK((*y)[1] == 1);
}

TEST_CASE("randomized rank/kernel/image against dense oracle") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        int r = 1 + trial % 7, c = 1 + (trial * 3) % 8;
        auto a = random_mat(rng, r, c);
        int rk = rank(a);
        CHECK(rk == oracle::dense_rank(a));
        CHECK(rk == rank(a.transpose()));
        auto k = kernel_basis(a);
        CHECK(k.cols() == c - rk);
        CHECK((a * k).is_zero());
        CHECK(rank(k) == k.cols());
        auto img = image_basis(a);
        CHECK(img.cols() == rk);
        CHECK(rank(img) == rk);
        CHECK(rank(a.hcat(img)) == rk);
    }
}

TEST_CASE("randomized solve: exactness and rank certificate") {
    std::mt19937 rng(999);
    for (int trial = 0; trial < 40; ++trial) {
        int r = 1 + trial % 6, c = 1 + (trial * 5) % 7;
        auto a = random_mat(rng, r, c);
        auto rhs = random_mat(rng, r, 3);
        auto sols = solve(a, rhs);
        for (int j = 0; j < 3; ++j) {
            if (sols[j]) {
                auto ax = a.apply(*sols[j]);
                for (int i = 0; i < r; ++i) CHECK(ax[i] == rhs.at(i, j));
            } else {
                CHECK(oracle::dense_rank(a.hcat(rhs.col(j))) == rank(a) + 1);
            }
        }
        // consistent rhs built from a known solution must solve
        auto x0 = random_mat(rng, c, 1);
        auto b = a * x0;
        auto got = solve_matrix(a, b);
        REQUIRE(got.has_value());
        CHECK((a * *got) == b);
    }
}

TEST_CASE("echelon form structure") {
    std::mt19937 rng(777);
    auto a = random_mat(rng, 5, 6);
    Echelon e = echelon(a);
    CHECK(e.rank == oracle::dense_rank(a));
    for (int pr = 0; pr < e.rank; ++pr) {
        int c = e.pivot_cols[pr];
        CHECK(e.rref.at(pr, c) == 1);
        for (int i = 0; i < e.rref.rows(); ++i)
            if (i != pr) CHECK(e.rref.at(i, c) == 0);
    }
    // row space is preserved
    CHECK(oracle::dense_rank(a.vcat(e.rref)) == e.rank);
}
