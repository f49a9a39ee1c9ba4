#pragma once

#include <optional>
#include <vector>

#include "kces/bounds.hpp"
#include "kces/states.hpp"
#include "kces/unextend.hpp"

namespace kces {

struct KcesResult {
    Scenario scenario;
    std::vector<Rational> nodes;  // strictly increasing, positive
    ProductSet spanning;          // the K Vandermonde product vectors
    SubspaceBasis complement;     // dimension d^n - K
    int certified_level;          // the subspace contains no state of depth <= this
};

/// The product vector whose expansion is (1, x, x^2, ..., x^{d^n - 1}):
/// factor m (0-based) has entries x^{s * d^{n-1-m}}, s = 0..d-1. Requires
/// x > 0.
ProductVector vandermonde_product_vector(long d, long n, const Rational& x);

/// Minimal number of spanning vectors: t d^{k-1} + d^{n-t(k-1)} - t;
/// equals d^n - max_kces_dim.
Int min_spanning_count(const Scenario& s);

/// Builds the spanning set of K Vandermonde vectors (default nodes 1..K)
/// and its orthocomplement, then certifies level k-1 unextendibility.
KcesResult build_kces(const Scenario& s, long count,
                      std::optional<std::vector<Rational>> nodes = std::nullopt);

/// Checks that every coarse-grained local matrix of the Vandermonde set is
/// totally positive for the given partition. Guarded to block dimension <= 8
/// and K <= 10.
bool total_positivity_certificate(const Scenario& s, long count,
                                  const std::vector<Rational>& nodes, const Partition& p);

/// Tensors every basis row (on the left) with the expanded pad vector. An
/// empty pad returns the input unchanged.
SubspaceBasis pad_construction(const SubspaceBasis& ges, const ProductVector& pad);

}  // namespace kces
