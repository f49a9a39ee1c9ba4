#pragma once

#include <random>
#include <vector>

#include "kces/linalg.hpp"
#include "kces/states.hpp"

namespace kces::testing {

inline RMatrix mat(const std::vector<std::vector<long>>& rows) {
    std::vector<RVector> rs;
    for (const auto& r : rows) {
        RVector v;
        for (long x : r)
            v.emplace_back(x);
        rs.push_back(std::move(v));
    }
    return RMatrix::from_rows(rs);
}

inline RVector vec(const std::vector<long>& xs) {
    RVector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

inline RMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                             long lo = -3, long hi = 3) {
    std::uniform_int_distribution<long> dist(lo, hi);
    RMatrix m(rows, cols);
    for (auto& e : m.entries)
        e = dist(rng);
    return m;
}

inline RVector random_nonzero_vector(std::mt19937& rng, std::size_t len,
                                     long lo = -2, long hi = 2) {
    std::uniform_int_distribution<long> dist(lo, hi);
    while (true) {
        RVector v(len);
        bool nonzero = false;
        for (auto& e : v) {
            e = dist(rng);
            if (e != 0)
                nonzero = true;
        }
        if (nonzero)
            return v;
    }
}

inline ProductVector random_product_vector(std::mt19937& rng, const std::vector<long>& dims) {
    ProductVector v;
    v.dims = dims;
    for (long d : dims)
        v.factors.push_back(random_nonzero_vector(rng, static_cast<std::size_t>(d)));
    return v;
}

inline ProductSet random_product_set(std::mt19937& rng, const std::vector<long>& dims,
                                     std::size_t count) {
    ProductSet s;
    s.dims = dims;
    for (std::size_t i = 0; i < count; ++i)
        s.vectors.push_back(random_product_vector(rng, dims));
    return s;
}

}  // namespace kces::testing
