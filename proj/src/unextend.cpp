#include "kces/unextend.hpp"

#include <functional>
#include <stdexcept>

namespace kces {

namespace {

// Echelonized rows with leading entry 1; supports incremental rank tracking.
struct EchelonBasis {
    std::vector<RVector> rows;  // each with a leading 1
    std::vector<std::size_t> leads;

    // Reduces v against the basis; returns the residual (zero if dependent).
    RVector reduce(RVector v) const {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Rational& c = v[leads[i]];
            if (c == 0)
                continue;
            const Rational f = c;
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] -= f * rows[i][j];
        }
        return v;
    }

    void push(RVector residual) {
        std::size_t lead = 0;
        while (residual[lead] == 0)
            ++lead;
        const Rational inv = 1 / residual[lead];
        for (auto& x : residual)
            x *= inv;
        rows.push_back(std::move(residual));
        leads.push_back(lead);
    }

    void pop() {
        rows.pop_back();
        leads.pop_back();
    }
};

bool is_zero(const RVector& v) {
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

RVector first_orthogonal_vector(const std::vector<RVector>& assigned, long dim) {
    RMatrix m;
    if (assigned.empty())
        m = RMatrix(1, static_cast<std::size_t>(dim));  // zero row, no constraint
    else
        m = RMatrix::from_rows(assigned);
    const RMatrix ns = nullspace_basis(m);
    if (ns.rows == 0)
        throw std::logic_error("assigned local vectors unexpectedly span the block");
    return ns.row(0);
}

void combinations(std::size_t n, std::size_t k,
                  const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    if (k > n)
        return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        if (!visit(idx))
            return;
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k)
                break;
            if (i == 0)
                return;
        }
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::optional<ExtensionWitness> extension_witness(const ProductSet& s, const Partition& p) {
    validate(s);
    if (p.party_count() != static_cast<int>(s.dims.size()))
        throw std::invalid_argument("partition does not match the set's parties");

    const std::size_t m = s.vectors.size();
    const std::size_t r = p.blocks.size();

    std::vector<ProductVector> coarse;
    coarse.reserve(m);
    for (const auto& v : s.vectors)
        coarse.push_back(coarse_grain(v, p));
    const std::vector<long>& block_dims = coarse.front().dims;

    std::vector<EchelonBasis> bases(r);
    std::vector<int> assignment(m, -1);
    bool found = false;

    std::function<void(std::size_t)> dfs = [&](std::size_t member) {
        if (found)
            return;
        if (member == m) {
            found = true;
            return;
        }
        for (std::size_t b = 0; b < r && !found; ++b) {
            const RVector& local = coarse[member].factors[b];
            RVector residual = bases[b].reduce(local);
            assignment[member] = static_cast<int>(b);
            if (is_zero(residual)) {
                dfs(member + 1);
            } else if (static_cast<long>(bases[b].rows.size()) + 1 <
                       block_dims[b]) {
                bases[b].push(std::move(residual));
                dfs(member + 1);
                if (!found)
                    bases[b].pop();
            }
            if (!found)
                assignment[member] = -1;
        }
    };
    dfs(0);
    if (!found)
        return std::nullopt;

    ExtensionWitness w;
    w.partition = p;
    w.assignment = assignment;
    w.vector.dims = block_dims;
    for (std::size_t b = 0; b < r; ++b) {
        std::vector<RVector> assigned;
        for (std::size_t j = 0; j < m; ++j)
            if (assignment[j] == static_cast<int>(b))
                assigned.push_back(coarse[j].factors[b]);
        w.vector.factors.push_back(first_orthogonal_vector(assigned, block_dims[b]));
    }

    // Soundness check on every return: the witness factors must make the
    // product vector orthogonal to each member.
    for (std::size_t j = 0; j < m; ++j) {
        Rational ip = 1;
        for (std::size_t b = 0; b < r; ++b)
            ip *= dot(w.vector.factors[b], coarse[j].factors[b]);
        if (ip != 0)
            throw std::logic_error("extension witness failed the orthogonality check");
    }
    return w;
}

bool full_local_spanning(const ProductSet& s, const Partition& p) {
    validate(s);
    if (p.party_count() != static_cast<int>(s.dims.size()))
        throw std::invalid_argument("partition does not match the set's parties");

    std::vector<ProductVector> coarse;
    for (const auto& v : s.vectors)
        coarse.push_back(coarse_grain(v, p));
    const std::vector<long>& block_dims = coarse.front().dims;

    long bound = 1;
    for (long d : block_dims)
        bound += d - 1;
    if (static_cast<long>(s.vectors.size()) < bound)
        throw std::invalid_argument(
            "set cardinality below the unextendibility bound m >= sum(d_i - 1) + 1");

    for (std::size_t b = 0; b < block_dims.size(); ++b) {
        const std::size_t dim = static_cast<std::size_t>(block_dims[b]);
        bool ok = true;
        combinations(s.vectors.size(), dim, [&](const std::vector<std::size_t>& tuple) {
            std::vector<RVector> rows;
            rows.reserve(dim);
            for (std::size_t idx : tuple)
                rows.push_back(coarse[idx].factors[b]);
            if (rank(RMatrix::from_rows(rows)) != dim) {
                ok = false;
                return false;
            }
            return true;
        });
        if (!ok)
            return false;
    }
    return true;
}

Verdict verify_level(const ProductSet& s, int j) {
    validate(s);
    const int n = static_cast<int>(s.dims.size());
    if (j < 1 || j > n - 1)
        throw std::invalid_argument("verify_level requires 1 <= j <= n-1");
    for (const Partition& p : enumerate_maximal_partitions(n, j))
        if (auto w = extension_witness(s, p))
            return Verdict{j, std::move(w)};
    return Verdict{j, std::nullopt};
}

bool is_upb(const ProductSet& s) {
    validate(s);
    if (!mutual_orthogonality(s).orthogonal)
        return false;
    std::vector<RVector> expanded;
    for (const auto& v : s.vectors)
        expanded.push_back(expand(v));
    if (static_cast<long>(rank(RMatrix::from_rows(expanded))) >= total_dimension(s.dims))
        return false;
    return verify_level(s, 1).unextendible();
}

int depth_floor(const ProductSet& s) {
    validate(s);
    std::vector<RVector> expanded;
    for (const auto& v : s.vectors)
        expanded.push_back(expand(v));
    if (static_cast<long>(rank(RMatrix::from_rows(expanded))) >= total_dimension(s.dims))
        throw std::invalid_argument("complement empty");

    const int n = static_cast<int>(s.dims.size());
    int j = 1;
    while (j <= n - 1 && verify_level(s, j).unextendible())
        ++j;
    return j;
}

}  // namespace kces
