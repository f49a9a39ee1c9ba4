#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "kces/linalg.hpp"

namespace kces {

/// Unnormalized fully product vector: one nonzero local factor per party.
struct ProductVector {
    std::vector<long> dims;
    std::vector<RVector> factors;

    bool operator==(const ProductVector&) const = default;
};

struct ProductSet {
    std::vector<long> dims;
    std::vector<ProductVector> vectors;

    bool operator==(const ProductSet&) const = default;
};

/// Partition of the parties {0..n-1} into disjoint non-empty blocks.
/// Canonical form: each block sorted ascending, blocks ordered by their
/// smallest element.
struct Partition {
    std::vector<std::vector<int>> blocks;

    static Partition singletons(int n);
    static Partition canonical(std::vector<std::vector<int>> blocks);

    int party_count() const;

    bool operator==(const Partition&) const = default;
};

struct SubspaceBasis {
    std::vector<long> dims;
    RMatrix basis;  // rows are global vectors of length prod(dims)

    bool operator==(const SubspaceBasis&) const = default;
};

long total_dimension(const std::vector<long>& dims);

void validate(const ProductVector& v);
void validate(const ProductSet& s);

/// Global vector of the product vector: left fold of kron over the factors,
/// party 0 most significant.
RVector expand(const ProductVector& v);

/// Merges each block's factors (ascending party order) into a single factor.
ProductVector coarse_grain(const ProductVector& v, const Partition& p);

struct OrthogonalityResult {
    bool orthogonal;
    std::optional<std::pair<std::size_t, std::size_t>> violating_pair;
};

OrthogonalityResult mutual_orthogonality(const ProductSet& s);

/// All partitions with every block of size <= max_block such that no two
/// blocks could merge without exceeding max_block. Deterministic order
/// (restricted-growth-string lexicographic). Requires n <= 10.
std::vector<Partition> enumerate_maximal_partitions(int n, int max_block);

struct DepthResult {
    int depth;         // size of the largest factor block
    Partition finest;  // finest product factorization of the vector
};

/// Entanglement depth of a pure state, by exhaustive bipartition rank tests:
/// a bipartition splits the vector iff the corresponding reshape has rank 1;
/// the finest factor blocks are the classes of parties never separated by a
/// splitting bipartition. Requires n <= 9 and a nonzero vector.
DepthResult vector_depth(const RVector& v, const std::vector<long>& dims);

using CatalogEntry = std::variant<ProductSet, SubspaceBasis>;

/// Named sets: "shifts", "k4", "k4bar", "k5", "shor", "ghz3".."ghz9".
/// Qubit bases use 0=(1,0), 1=(0,1), e=(1,1), f=(1,-1).
CatalogEntry catalog(std::string_view name);

struct PptState {
    std::vector<long> dims;
    RMatrix rho;
    // One entry per bipartition; the block lists the parties (0-based) on
    // the transposed side, always containing party 0.
    std::vector<std::pair<std::vector<int>, bool>> ppt_verdicts;
};

/// Normalized projector onto the orthocomplement of the set:
/// rho = (I - P) / (D - m). Throws when the expanded vectors are linearly
/// dependent or span the whole space.
PptState ppt_state_from_set(const ProductSet& s);

}  // namespace kces
