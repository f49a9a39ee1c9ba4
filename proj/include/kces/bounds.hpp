#pragma once

#include <vector>

#include "kces/rational.hpp"

namespace kces {

/// Homogeneous multipartite scenario: n parties of local dimension d,
/// depth threshold k.
struct Scenario {
    long d;  // >= 2
    long n;  // >= 3
    long k;  // 2 <= k <= n

    Scenario(long d_, long n_, long k_);

    /// t = floor(n / (k-1)).
    long t() const { return n / (k - 1); }
};

/// List of non-negative integer parts.
struct Composition {
    std::vector<long> parts;

    bool operator==(const Composition&) const = default;
};

Int pow_int(long base, long exp);

/// Maximal dimension of a subspace of (C^d)^{x n} void of (k-1)-producible
/// states: d^n - (t d^{k-1} + d^{n-(k-1)t} - t).
Int max_kces_dim(const Scenario& s);

/// The block-size profile attaining the dimension bound: k-1 repeated t
/// times, then the remainder n - t(k-1) when nonzero.
Composition optimal_partition_shape(const Scenario& s);

/// Maximal CES dimension for arbitrary local dimensions:
/// prod d_i - [sum (d_i - 1) + 1].
Int max_ces_dim_hetero(const std::vector<long>& dims);

/// Lower bound on the cardinality of any unextendible product set:
/// sum (d_i - 1) + 1.
Int min_unextendible_size(const std::vector<long>& dims);

/// Minimal UPB cardinality of the coarse-grained system, three cases:
/// d^n when d = 2 and k = n; t(d^{k-1}-1) + d^{n-(k-1)t} when d is odd, or d
/// is even and ((k-1 | n and t odd) or (k-1 does not divide n and t even));
/// otherwise that value + 1.
Int min_upb_trivial(const Scenario& s);

/// Pigeonhole lower bound on the size of a set unextendible with
/// (k-1)-producible vectors:
/// d^{k-1} + (n-k+1) (floor((d^{k-1}-2)/(k-1)) + 1).
Int pigeonhole_bound(const Scenario& s);

struct CombinedBound {
    Int value;               // max of the two bounds
    bool pigeonhole_strict;  // pigeonhole bound strictly exceeds the trivial one
};

CombinedBound combined_lower_bound(const Scenario& s);

/// f_w(m) = (n-w) floor((m-1)/n) + max(m - w - n floor((m-1)/n), 1).
Int f_w(long m, long n, long w);

/// s(m) = w floor((m-1)/n) + min(w, m - 1 - n floor((m-1)/n)).
Int s_value(long m, long n, long w);

/// Generalized pigeonhole: with p*q + r objects in q boxes, some s boxes
/// jointly hold at least p*s + min(r, s) objects.
Int guaranteed_box_total(long p, long q, long r, long s);

struct PartitionOptimum {
    Int value;
    Composition argmax;  // non-increasing, zero parts dropped
};

/// Exhaustively maximizes sum_i (d^{n_i} - 1) + 1 over compositions of n
/// with parts in [0, k-1]. Requires n <= 12.
PartitionOptimum brute_force_partition_optimum(const Scenario& s);

/// True iff x is majorized by y: after sorting non-increasing and
/// zero-padding, every prefix sum of y dominates that of x and the totals
/// agree (unequal totals yield false).
bool majorizes(const Composition& x, const Composition& y);

}  // namespace kces
