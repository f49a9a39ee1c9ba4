#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "kces/rational.hpp"

namespace kces {

using RVector = std::vector<Rational>;

/// Dense row-major rational matrix. rows == 0 is allowed as the empty basis.
struct RMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> entries;  // row-major, size rows*cols

    RMatrix() = default;
    RMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    Rational& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    RVector row(std::size_t i) const {
        return RVector(entries.begin() + static_cast<std::ptrdiff_t>(i * cols),
                       entries.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols));
    }

    static RMatrix identity(std::size_t n);
    static RMatrix from_rows(const std::vector<RVector>& rs);

    bool operator==(const RMatrix&) const = default;
};

Rational dot(const RVector& a, const RVector& b);

RMatrix matmul(const RMatrix& a, const RMatrix& b);
RMatrix transpose(const RMatrix& m);

/// Exact rank over the rationals.
std::size_t rank(const RMatrix& m);

struct RrefResult {
    RMatrix reduced;
    std::vector<std::size_t> pivot_columns;  // ascending
};

/// Reduced row echelon form with leading 1s. Deterministic: pivots on the
/// first row with a nonzero entry in the leftmost unresolved column.
RrefResult rref(const RMatrix& m);

/// Basis of {v : m v = 0}, one row per free column of rref(m), in ascending
/// free-column order; the emitted row has 1 at its free column, 0 at the
/// other free columns, and solved pivot coordinates. Row count = cols - rank.
RMatrix nullspace_basis(const RMatrix& m);

/// Kronecker product, left factor most significant:
/// result[i*len(b)+j] = a[i]*b[j].
RVector kron(const RVector& a, const RVector& b);

Rational determinant(const RMatrix& m);

/// Orthogonal projector onto the row space: P = B^T (B B^T)^{-1} B.
/// Throws std::invalid_argument when the rows are not linearly independent.
RMatrix gram_projector(const RMatrix& basis);

/// Exact positive-semidefiniteness test by symmetric elimination. A zero
/// diagonal entry forces its whole row to be zero, a negative one fails.
/// Throws std::invalid_argument on non-symmetric input.
bool psd_check(const RMatrix& s);

/// Transposes the multi-indices of the parties in `block`; party 0 is most
/// significant. `m` must be D x D with D the product of dims.
RMatrix partial_transpose(const RMatrix& m, const std::vector<long>& dims,
                          const std::set<int>& block);

/// True iff every square minor of every order is strictly positive.
/// Exhaustive; intended for small matrices.
bool all_minors_positive(const RMatrix& m);

}  // namespace kces
