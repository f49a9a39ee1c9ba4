#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "kces/linalg.hpp"

using namespace kces;
using namespace kces::testing;

TEST_CASE("rank") {
    CHECK(rank(mat({{1, 1, 1, 1}, {1, 2, 4, 8}, {1, 3, 9, 27}, {1, 4, 16, 64}})) == 4);
    CHECK(rank(RMatrix(3, 5)) == 0);
    CHECK(rank(RMatrix::identity(2)) == 2);
    CHECK(rank(mat({{2, 4}, {1, 2}})) == 1);
}

TEST_CASE("rref") {
    auto r1 = rref(mat({{2, 4}, {1, 2}}));
    CHECK(r1.reduced == mat({{1, 2}, {0, 0}}));
    CHECK(r1.pivot_columns == std::vector<std::size_t>{0});

    auto r2 = rref(RMatrix::identity(3));
    CHECK(r2.reduced == RMatrix::identity(3));
    CHECK(r2.pivot_columns == std::vector<std::size_t>{0, 1, 2});

    auto r3 = rref(mat({{0, 3}, {0, 0}}));
    CHECK(r3.reduced == mat({{0, 1}, {0, 0}}));
    CHECK(r3.pivot_columns == std::vector<std::size_t>{1});
}

TEST_CASE("nullspace_basis conventions") {
    CHECK(nullspace_basis(RMatrix::identity(4)).rows == 0);

    auto ns = nullspace_basis(mat({{1, 1, 1}}));
    CHECK(ns == mat({{-1, 1, 0}, {-1, 0, 1}}));
}

TEST_CASE("kron") {
    CHECK(kron(vec({1, 1}), vec({1, -1})) == vec({1, -1, 1, -1}));
    CHECK(kron(vec({1, 3}), vec({1, 9})) == vec({1, 9, 3, 27}));
    CHECK(kron(vec({1, 0}), vec({1, 0})) == vec({1, 0, 0, 0}));
}

TEST_CASE("kron associativity") {
    std::mt19937 rng(7);
    for (int it = 0; it < 50; ++it) {
        auto a = random_nonzero_vector(rng, 2), b = random_nonzero_vector(rng, 3),
             c = random_nonzero_vector(rng, 2);
        CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
    }
}

TEST_CASE("gram_projector") {
    CHECK(gram_projector(mat({{1, 0}})) == mat({{1, 0}, {0, 0}}));
    CHECK(gram_projector(RMatrix::identity(3)) == RMatrix::identity(3));

    auto p = gram_projector(mat({{1, 1}}));
    RMatrix expected(2, 2);
    expected.at(0, 0) = expected.at(0, 1) = expected.at(1, 0) = expected.at(1, 1) =
        Rational(1, 2);
    CHECK(p == expected);

    CHECK_THROWS_AS(gram_projector(mat({{1, 1}, {2, 2}})), std::invalid_argument);
}

TEST_CASE("gram_projector is an idempotent symmetric projector") {
    std::mt19937 rng(11);
    for (int it = 0; it < 20; ++it) {
        RMatrix b = random_matrix(rng, 2, 5);
        if (rank(b) < 2)
            continue;
        RMatrix p = gram_projector(b);
        CHECK(p == transpose(p));
        CHECK(matmul(p, p) == p);
        CHECK(rank(p) == 2);
        // P fixes each basis row.
        CHECK(matmul(b, p) == b);
    }
}

TEST_CASE("psd_check") {
    CHECK(psd_check(RMatrix::identity(4)));
    CHECK_FALSE(psd_check(mat({{1, 2}, {2, 1}})));
    CHECK(psd_check(RMatrix(2, 2)));
    CHECK(psd_check(mat({{2, 1}, {1, 1}})));
    CHECK_FALSE(psd_check(mat({{0, 1}, {1, 0}})));
    CHECK_THROWS_AS(psd_check(mat({{0, 1}, {0, 0}})), std::invalid_argument);
}

TEST_CASE("partial_transpose basics") {
    std::mt19937 rng(3);
    const std::vector<long> dims{2, 2};
    RMatrix m = random_matrix(rng, 4, 4);

    CHECK(partial_transpose(m, dims, {0, 1}) == transpose(m));
    CHECK(partial_transpose(m, dims, {}) == m);
    CHECK_THROWS_AS(partial_transpose(m, {2, 3}, {0}), std::invalid_argument);
}

TEST_CASE("partial_transpose of a Bell projector is not PSD") {
    // Projector onto (|00> + |11>)/sqrt(2).
    RMatrix p(4, 4);
    p.at(0, 0) = p.at(0, 3) = p.at(3, 0) = p.at(3, 3) = Rational(1, 2);
    CHECK(psd_check(p));
    RMatrix pt = partial_transpose(p, {2, 2}, {1});
    CHECK_FALSE(psd_check(pt));
}

TEST_CASE("partial_transpose involution and composition") {
    std::mt19937 rng(13);
    const std::vector<long> dims{2, 3, 2};
    RMatrix m = random_matrix(rng, 12, 12);
    CHECK(partial_transpose(partial_transpose(m, dims, {1}), dims, {1}) == m);
    CHECK(partial_transpose(partial_transpose(m, dims, {0}), dims, {2}) ==
          partial_transpose(m, dims, {0, 2}));
}

TEST_CASE("all_minors_positive") {
    CHECK(all_minors_positive(mat({{1, 1, 1}, {1, 2, 4}, {1, 3, 9}})));
    CHECK_FALSE(all_minors_positive(RMatrix::identity(2)));
    CHECK_FALSE(all_minors_positive(mat({{1, 2}, {3, 4}})));
}

TEST_CASE("nullspace dimensions and orthogonality") {
    std::mt19937 rng(21);
    for (int it = 0; it < 30; ++it) {
        RMatrix m = random_matrix(rng, 3, 5);
        RMatrix ns = nullspace_basis(m);
        CHECK(m.cols == rank(m) + ns.rows);
        for (std::size_t i = 0; i < ns.rows; ++i) {
            const RVector v = ns.row(i);
            for (std::size_t row = 0; row < m.rows; ++row)
                CHECK(dot(m.row(row), v) == 0);
        }
    }
}

TEST_CASE("determinant") {
    CHECK(determinant(mat({{1, 2}, {3, 4}})) == -2);
    CHECK(determinant(RMatrix::identity(5)) == 1);
    CHECK(determinant(mat({{2, 4}, {1, 2}})) == 0);
}
