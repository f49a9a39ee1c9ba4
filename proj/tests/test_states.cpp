#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "kces/states.hpp"

using namespace kces;
using namespace kces::testing;

namespace {

ProductVector pv(const std::vector<std::vector<long>>& factors) {
    ProductVector v;
    for (const auto& f : factors) {
        v.dims.push_back(static_cast<long>(f.size()));
        v.factors.push_back(vec(f));
    }
    return v;
}

}  // namespace

TEST_CASE("expand") {
    CHECK(expand(pv({{1, 0}, {1, 0}, {1, 0}})) == vec({1, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(expand(pv({{0, 1}, {1, 1}, {1, -1}})) == vec({0, 0, 0, 0, 1, -1, 1, -1}));
    // Powers of a single node: (1, x, ..., x^7) at x = 2.
    CHECK(expand(pv({{1, 16}, {1, 4}, {1, 2}})) ==
          vec({1, 2, 4, 8, 16, 32, 64, 128}));
}

TEST_CASE("coarse_grain") {
    const ProductVector v = pv({{1, 2}, {3, 4}, {5, 6}});
    const ProductVector same = coarse_grain(v, Partition::singletons(3));
    CHECK(same == v);

    const ProductVector merged =
        coarse_grain(pv({{1, 0}, {1, 0}, {1, 0}}), Partition::canonical({{0, 1}, {2}}));
    CHECK(merged.dims == std::vector<long>{4, 2});
    CHECK(merged.factors[0] == vec({1, 0, 0, 0}));
    CHECK(merged.factors[1] == vec({1, 0}));

    // x = 2: merged factors carry exponents (0,4,8,12) and (0,1,2,3).
    const ProductVector vand = pv({{1, 256}, {1, 16}, {1, 4}, {1, 2}});
    const ProductVector cg = coarse_grain(vand, Partition::canonical({{0, 1}, {2, 3}}));
    CHECK(cg.factors[0] == vec({1, 16, 256, 4096}));
    CHECK(cg.factors[1] == vec({1, 2, 4, 8}));
}

TEST_CASE("coarse_grain preserves inner products") {
    std::mt19937 rng(5);
    const std::vector<long> dims{2, 2, 3, 2};
    const Partition p = Partition::canonical({{0, 2}, {1, 3}});
    for (int it = 0; it < 20; ++it) {
        const ProductVector a = random_product_vector(rng, dims);
        const ProductVector b = random_product_vector(rng, dims);
        CHECK(dot(expand(coarse_grain(a, p)), expand(coarse_grain(b, p))) ==
              dot(expand(a), expand(b)));
    }
}

TEST_CASE("coarse_grain over interval blocks preserves the expansion") {
    std::mt19937 rng(9);
    const std::vector<long> dims{2, 3, 2, 2};
    for (const auto& blocks : {std::vector<std::vector<int>>{{0, 1}, {2, 3}},
                               std::vector<std::vector<int>>{{0}, {1, 2, 3}},
                               std::vector<std::vector<int>>{{0, 1, 2}, {3}}}) {
        const Partition p = Partition::canonical(blocks);
        const ProductVector v = random_product_vector(rng, dims);
        CHECK(expand(coarse_grain(v, p)) == expand(v));
    }
}

TEST_CASE("mutual_orthogonality") {
    CHECK(mutual_orthogonality(std::get<ProductSet>(catalog("shifts"))).orthogonal);
    CHECK(mutual_orthogonality(std::get<ProductSet>(catalog("k5"))).orthogonal);

    ProductSet bad;
    bad.dims = {2, 2};
    bad.vectors = {pv({{1, 0}, {1, 0}}), pv({{1, 0}, {1, 1}})};
    const auto r = mutual_orthogonality(bad);
    CHECK_FALSE(r.orthogonal);
    CHECK(r.violating_pair == std::make_pair<std::size_t, std::size_t>(0, 1));
}

TEST_CASE("enumerate_maximal_partitions") {
    const auto p42 = enumerate_maximal_partitions(4, 2);
    REQUIRE(p42.size() == 3);
    CHECK(p42[0].blocks == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
    CHECK(p42[1].blocks == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
    CHECK(p42[2].blocks == std::vector<std::vector<int>>{{0, 3}, {1, 2}});

    const auto p53 = enumerate_maximal_partitions(5, 3);
    CHECK(p53.size() == 10);
    for (const auto& p : p53) {
        REQUIRE(p.blocks.size() == 2);
        CHECK(p.blocks[0].size() + p.blocks[1].size() == 5);
        CHECK(std::max(p.blocks[0].size(), p.blocks[1].size()) == 3);
    }

    CHECK(enumerate_maximal_partitions(3, 2).size() == 3);
    CHECK(enumerate_maximal_partitions(4, 1).size() == 1);
    CHECK(enumerate_maximal_partitions(4, 4).size() == 1);
    CHECK_THROWS_AS(enumerate_maximal_partitions(11, 2), std::invalid_argument);
}

TEST_CASE("vector_depth basics") {
    const auto product = vector_depth(vec({1, 0, 0, 0, 0, 0, 0, 0}), {2, 2, 2});
    CHECK(product.depth == 1);
    CHECK(product.finest == Partition::singletons(3));

    const auto ghz = vector_depth(vec({1, 0, 0, 0, 0, 0, 0, 1}), {2, 2, 2});
    CHECK(ghz.depth == 3);
    CHECK(ghz.finest.blocks == std::vector<std::vector<int>>{{0, 1, 2}});

    CHECK_THROWS_AS(vector_depth(vec({0, 0, 0, 0}), {2, 2}), std::invalid_argument);
}

TEST_CASE("vector_depth of expanded product vectors is 1") {
    std::mt19937 rng(23);
    for (int it = 0; it < 20; ++it) {
        const ProductVector v = random_product_vector(rng, {2, 3, 2});
        const auto r = vector_depth(expand(v), v.dims);
        CHECK(r.depth == 1);
        CHECK(r.finest == Partition::singletons(3));
    }
}

TEST_CASE("vector_depth is invariant under invertible diagonal scaling") {
    std::mt19937 rng(29);
    const std::vector<long> dims{2, 2, 2};
    RVector ghz = vec({1, 0, 0, 0, 0, 0, 0, 1});
    RVector w = vec({0, 1, 1, 0, 1, 0, 0, 0});
    for (RVector base : {ghz, w}) {
        const auto before = vector_depth(base, dims);
        // Scale party 1's |0> component by 3 and |1> component by -1/2.
        RVector scaled = base;
        for (std::size_t g = 0; g < scaled.size(); ++g) {
            const bool bit = (g >> 1) & 1u;  // party 1 digit
            scaled[g] *= bit ? Rational(-1, 2) : Rational(3);
        }
        const auto after = vector_depth(scaled, dims);
        CHECK(after.depth == before.depth);
        CHECK(after.finest == before.finest);
    }
}

TEST_CASE("catalog sets") {
    const auto shifts = std::get<ProductSet>(catalog("shifts"));
    CHECK(shifts.dims == std::vector<long>{2, 2, 2});
    CHECK(shifts.vectors.size() == 4);

    const auto k4 = std::get<ProductSet>(catalog("k4"));
    CHECK(k4.vectors.size() == 8);
    const auto k4bar = std::get<ProductSet>(catalog("k4bar"));
    CHECK(k4bar.vectors.size() == 8);

    const auto k5 = std::get<ProductSet>(catalog("k5"));
    CHECK(k5.dims == std::vector<long>(5, 2));
    CHECK(k5.vectors.size() == 16);

    for (const char* name : {"shifts", "k4", "k4bar", "k5"}) {
        const auto s = std::get<ProductSet>(catalog(name));
        CHECK(mutual_orthogonality(s).orthogonal);
        std::vector<RVector> rows;
        for (const auto& v : s.vectors)
            rows.push_back(expand(v));
        CHECK(rank(RMatrix::from_rows(rows)) == s.vectors.size());
    }

    CHECK_THROWS_AS(catalog("nope"), std::invalid_argument);
}

TEST_CASE("catalog bases") {
    const auto shor = std::get<SubspaceBasis>(catalog("shor"));
    CHECK(shor.dims == std::vector<long>(9, 2));
    REQUIRE(shor.basis.rows == 2);
    CHECK(shor.basis.cols == 512);
    for (std::size_t i = 0; i < 2; ++i) {
        int nonzero = 0;
        for (std::size_t j = 0; j < 512; ++j) {
            const Rational& e = shor.basis.at(i, j);
            if (e != 0) {
                ++nonzero;
                CHECK((e == 1 || e == -1));
            }
        }
        CHECK(nonzero == 8);
    }

    const auto ghz4 = std::get<SubspaceBasis>(catalog("ghz4"));
    CHECK(ghz4.basis.rows == 1);
    CHECK(ghz4.basis.cols == 16);
    CHECK(std::get<SubspaceBasis>(catalog("ghz(3)")).basis.cols == 8);
}

TEST_CASE("ppt_state_from_set on a single vector") {
    ProductSet s;
    s.dims = {2, 2};
    s.vectors = {pv({{1, 0}, {1, 0}})};
    const PptState st = ppt_state_from_set(s);
    RMatrix expected(4, 4);
    expected.at(1, 1) = expected.at(2, 2) = expected.at(3, 3) = Rational(1, 3);
    CHECK(st.rho == expected);
    REQUIRE(st.ppt_verdicts.size() == 1);
    CHECK(st.ppt_verdicts[0].second);
}

TEST_CASE("ppt_state_from_set on shifts") {
    const auto shifts = std::get<ProductSet>(catalog("shifts"));
    const PptState st = ppt_state_from_set(shifts);

    Rational trace = 0;
    for (std::size_t i = 0; i < st.rho.rows; ++i)
        trace += st.rho.at(i, i);
    CHECK(trace == 1);
    CHECK(rank(st.rho) == 4);
    CHECK(psd_check(st.rho));

    // Support orthogonal to every member.
    for (const auto& v : shifts.vectors) {
        const RVector e = expand(v);
        for (std::size_t i = 0; i < st.rho.rows; ++i)
            CHECK(dot(st.rho.row(i), e) == 0);
    }

    REQUIRE(st.ppt_verdicts.size() == 3);
    for (const auto& [block, ok] : st.ppt_verdicts)
        CHECK(ok);
}

TEST_CASE("ppt_state_from_set error paths") {
    ProductSet spanning;
    spanning.dims = {2, 2};
    spanning.vectors = {pv({{1, 0}, {1, 0}}), pv({{1, 0}, {0, 1}}),
                        pv({{0, 1}, {1, 0}}), pv({{0, 1}, {0, 1}})};
    CHECK_THROWS_AS(ppt_state_from_set(spanning), std::invalid_argument);

    ProductSet dependent;
    dependent.dims = {2, 2};
    dependent.vectors = {pv({{1, 0}, {1, 0}}), pv({{2, 0}, {3, 0}})};
    CHECK_THROWS_AS(ppt_state_from_set(dependent), std::invalid_argument);
}
