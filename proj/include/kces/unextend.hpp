#pragma once

#include <optional>
#include <vector>

#include "kces/states.hpp"

namespace kces {

/// Certificate of extendibility: a fully product vector over the partition's
/// blocks, orthogonal to every member of the input set, together with the
/// assignment of members to blocks that produced it.
struct ExtensionWitness {
    Partition partition;
    ProductVector vector;         // over the partition's block dimensions
    std::vector<int> assignment;  // member index -> block index
};

struct Verdict {
    int level;
    std::optional<ExtensionWitness> witness;

    bool unextendible() const { return !witness.has_value(); }
};

/// Searches assignments of the set's members to the partition's blocks such
/// that no block's assigned local vectors span that block's space (empty
/// assignments allowed). Depth-first with incremental rank pruning; members
/// scanned in order, blocks tried in ascending index order, witness factors
/// taken as the first nullspace row of the assigned local vectors. The
/// returned witness is verified orthogonal to every member.
std::optional<ExtensionWitness> extension_witness(const ProductSet& s, const Partition& p);

/// True iff, for every block, every D_i-tuple of the coarse-grained local
/// vectors has full rank D_i (D_i = block dimension). Requires the set's
/// cardinality to meet the unextendibility bound sum(D_i - 1) + 1; throws
/// otherwise.
bool full_local_spanning(const ProductSet& s, const Partition& p);

/// Runs extension_witness over every maximal partition with blocks of size
/// <= j, in canonical order; returns the first witness found, otherwise
/// "unextendible at level j".
Verdict verify_level(const ProductSet& s, int j);

/// True iff the set is mutually orthogonal, does not span the whole space,
/// and admits no fully product vector in its orthocomplement.
bool is_upb(const ProductSet& s);

/// Largest k such that the set is unextendible at level k-1, by ascending
/// iteration; 1 when even a fully product extension exists. Throws when the
/// set spans the whole space.
int depth_floor(const ProductSet& s);

}  // namespace kces
