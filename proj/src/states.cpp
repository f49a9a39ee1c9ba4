#include "kces/states.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <initializer_list>
#include <stdexcept>

namespace kces {

Partition Partition::singletons(int n) {
    Partition p;
    p.blocks.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        p.blocks.push_back({i});
    return p;
}

Partition Partition::canonical(std::vector<std::vector<int>> blocks) {
    for (auto& b : blocks) {
        if (b.empty())
            throw std::invalid_argument("partition blocks must be non-empty");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    Partition p;
    p.blocks = std::move(blocks);
    // Disjoint cover of {0..n-1}.
    std::vector<int> all;
    for (const auto& b : p.blocks)
        all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] != static_cast<int>(i))
            throw std::invalid_argument("partition blocks must disjointly cover the parties");
    return p;
}

int Partition::party_count() const {
    int n = 0;
    for (const auto& b : blocks)
        n += static_cast<int>(b.size());
    return n;
}

long total_dimension(const std::vector<long>& dims) {
    long total = 1;
    for (long d : dims) {
        if (d < 2)
            throw std::invalid_argument("local dimensions must be >= 2");
        total *= d;
    }
    return total;
}

void validate(const ProductVector& v) {
    if (v.dims.empty() || v.factors.size() != v.dims.size())
        throw std::invalid_argument("product vector needs one factor per party");
    for (std::size_t i = 0; i < v.dims.size(); ++i) {
        if (static_cast<long>(v.factors[i].size()) != v.dims[i])
            throw std::invalid_argument("factor length does not match local dimension");
        if (std::all_of(v.factors[i].begin(), v.factors[i].end(),
                        [](const Rational& q) { return q == 0; }))
            throw std::invalid_argument("product vector factors must be nonzero");
    }
}

void validate(const ProductSet& s) {
    if (s.vectors.empty())
        throw std::invalid_argument("product set must be non-empty");
    for (const auto& v : s.vectors) {
        if (v.dims != s.dims)
            throw std::invalid_argument("all vectors must share the set's dims");
        validate(v);
    }
}

RVector expand(const ProductVector& v) {
    RVector r{1};
    for (const auto& f : v.factors)
        r = kron(r, f);
    return r;
}

ProductVector coarse_grain(const ProductVector& v, const Partition& p) {
    if (p.party_count() != static_cast<int>(v.dims.size()))
        throw std::invalid_argument("partition does not match the vector's parties");
    ProductVector out;
    for (const auto& block : p.blocks) {
        RVector f{1};
        long dim = 1;
        for (int party : block) {
            f = kron(f, v.factors[static_cast<std::size_t>(party)]);
            dim *= v.dims[static_cast<std::size_t>(party)];
        }
        out.dims.push_back(dim);
        out.factors.push_back(std::move(f));
    }
    return out;
}

OrthogonalityResult mutual_orthogonality(const ProductSet& s) {
    std::vector<RVector> expanded;
    expanded.reserve(s.vectors.size());
    for (const auto& v : s.vectors)
        expanded.push_back(expand(v));
    for (std::size_t i = 0; i < expanded.size(); ++i)
        for (std::size_t j = i + 1; j < expanded.size(); ++j)
            if (dot(expanded[i], expanded[j]) != 0)
                return {false, std::make_pair(i, j)};
    return {true, std::nullopt};
}

namespace {

void enumerate_rgs(int n, int pos, int max_used, std::vector<int>& code,
                   const std::function<void(const std::vector<int>&)>& visit) {
    if (pos == n) {
        visit(code);
        return;
    }
    for (int b = 0; b <= max_used + 1; ++b) {
        code[static_cast<std::size_t>(pos)] = b;
        enumerate_rgs(n, pos + 1, std::max(max_used, b), code, visit);
    }
}

Partition partition_from_rgs(const std::vector<int>& code) {
    const int nblocks = *std::max_element(code.begin(), code.end()) + 1;
    Partition p;
    p.blocks.resize(static_cast<std::size_t>(nblocks));
    for (int i = 0; i < static_cast<int>(code.size()); ++i)
        p.blocks[static_cast<std::size_t>(code[static_cast<std::size_t>(i)])].push_back(i);
    return p;
}

}  // namespace

std::vector<Partition> enumerate_maximal_partitions(int n, int max_block) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("enumerate_maximal_partitions limited to 1 <= n <= 10");
    if (max_block < 1 || max_block > n)
        throw std::invalid_argument("enumerate_maximal_partitions requires 1 <= max_block <= n");

    std::vector<Partition> out;
    std::vector<int> code(static_cast<std::size_t>(n));
    enumerate_rgs(n, 1, 0, code, [&](const std::vector<int>& rgs) {
        Partition p = partition_from_rgs(rgs);
        std::vector<std::size_t> sizes;
        for (const auto& b : p.blocks) {
            if (static_cast<int>(b.size()) > max_block)
                return;
            sizes.push_back(b.size());
        }
        // Maximality: no two blocks may merge without exceeding max_block.
        for (std::size_t i = 0; i < sizes.size(); ++i)
            for (std::size_t j = i + 1; j < sizes.size(); ++j)
                if (static_cast<int>(sizes[i] + sizes[j]) <= max_block)
                    return;
        out.push_back(std::move(p));
    });
    return out;
}

namespace {

// rank(reshape of v across row_mask | complement) <= 1
bool reshape_rank_one(const RVector& v, const std::vector<long>& dims, unsigned row_mask) {
    const int n = static_cast<int>(dims.size());
    long nrows = 1, ncols = 1;
    for (int p = 0; p < n; ++p)
        ((row_mask >> p) & 1u ? nrows : ncols) *= dims[static_cast<std::size_t>(p)];

    RMatrix m(static_cast<std::size_t>(nrows), static_cast<std::size_t>(ncols));
    for (std::size_t g = 0; g < v.size(); ++g) {
        std::size_t rest = g;
        long r = 0, c = 0;
        // party 0 most significant
        std::vector<long> digit(static_cast<std::size_t>(n));
        for (int p = n - 1; p >= 0; --p) {
            digit[static_cast<std::size_t>(p)] =
                static_cast<long>(rest % static_cast<std::size_t>(dims[static_cast<std::size_t>(p)]));
            rest /= static_cast<std::size_t>(dims[static_cast<std::size_t>(p)]);
        }
        for (int p = 0; p < n; ++p) {
            if ((row_mask >> p) & 1u)
                r = r * dims[static_cast<std::size_t>(p)] + digit[static_cast<std::size_t>(p)];
            else
                c = c * dims[static_cast<std::size_t>(p)] + digit[static_cast<std::size_t>(p)];
        }
        m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = v[g];
    }

    // All rows proportional to the first nonzero row.
    std::size_t base = m.rows;
    for (std::size_t i = 0; i < m.rows && base == m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0) {
                base = i;
                break;
            }
    if (base == m.rows)
        return true;  // zero matrix
    for (std::size_t i = base + 1; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            for (std::size_t l = 0; l < m.cols; ++l)
                if (m.at(base, j) * m.at(i, l) != m.at(base, l) * m.at(i, j))
                    return false;
    return true;
}

}  // namespace

DepthResult vector_depth(const RVector& v, const std::vector<long>& dims) {
    const int n = static_cast<int>(dims.size());
    if (n < 1 || n > 9)
        throw std::invalid_argument("vector_depth limited to n <= 9");
    if (static_cast<long>(v.size()) != total_dimension(dims))
        throw std::invalid_argument("vector length does not match dims");
    if (std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; }))
        throw std::invalid_argument("vector_depth requires a nonzero vector");

    // One representative mask per unordered bipartition: party 0 on the row side.
    std::vector<unsigned> splitting;
    const unsigned full = (1u << n) - 1u;
    for (unsigned mask = 1; mask < full; ++mask) {
        if (!(mask & 1u))
            continue;
        if (reshape_rank_one(v, dims, mask))
            splitting.push_back(mask);
    }

    // Parties never separated by any splitting bipartition share a factor.
    std::vector<std::vector<bool>> signature(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p)
        for (unsigned mask : splitting)
            signature[static_cast<std::size_t>(p)].push_back((mask >> p) & 1u);

    std::vector<std::vector<int>> blocks;
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (int p = 0; p < n; ++p) {
        for (std::size_t b = 0; b < blocks.size(); ++b)
            if (signature[static_cast<std::size_t>(blocks[b].front())] ==
                signature[static_cast<std::size_t>(p)]) {
                owner[static_cast<std::size_t>(p)] = static_cast<int>(b);
                break;
            }
        if (owner[static_cast<std::size_t>(p)] < 0) {
            owner[static_cast<std::size_t>(p)] = static_cast<int>(blocks.size());
            blocks.push_back({});
        }
        blocks[static_cast<std::size_t>(owner[static_cast<std::size_t>(p)])].push_back(p);
    }

    int depth = 0;
    for (const auto& b : blocks)
        depth = std::max(depth, static_cast<int>(b.size()));
    return {depth, Partition::canonical(std::move(blocks))};
}

namespace {

RVector qubit_symbol(char c) {
    switch (c) {
        case '0':
            return {1, 0};
        case '1':
            return {0, 1};
        case 'e':
        case '+':
            return {1, 1};
        case 'f':
        case '-':
            return {1, -1};
        default:
            throw std::invalid_argument(std::string("unknown qubit symbol: ") + c);
    }
}

ProductVector qubit_word(std::string_view word) {
    ProductVector v;
    for (char c : word) {
        v.dims.push_back(2);
        v.factors.push_back(qubit_symbol(c));
    }
    return v;
}

ProductSet qubit_set(std::initializer_list<std::string_view> words) {
    ProductSet s;
    for (auto w : words)
        s.vectors.push_back(qubit_word(w));
    s.dims = s.vectors.front().dims;
    return s;
}

RVector ghz_row(int n, bool bar) {
    RVector v(static_cast<std::size_t>(1) << n);
    v.front() = 1;
    v.back() = bar ? -1 : 1;
    return v;
}

}  // namespace

CatalogEntry catalog(std::string_view name) {
    if (name == "shifts")
        return qubit_set({"000", "1+-", "-1+", "+-1"});
    if (name == "k4")
        return qubit_set({"0000", "01fe", "1e1e", "1fe0", "e001", "e1ff", "fe1f", "ffe1"});
    if (name == "k4bar")
        return qubit_set({"0000", "01fe", "1eee", "1f10", "e0f1", "e10f", "fe1f", "ffe1"});
    if (name == "k5")
        return qubit_set({"00000", "001fe", "e001f", "fe001", "1fe00", "01fe0",
                          "01e1e", "e01e1", "1e01e", "e1e01", "1e1e0",
                          "1fffe", "e1fff", "fe1ff", "ffe1f", "fffe1"});
    if (name == "shor") {
        const RVector g = ghz_row(3, false);
        const RVector gb = ghz_row(3, true);
        SubspaceBasis b;
        b.dims.assign(9, 2);
        b.basis = RMatrix::from_rows({kron(kron(g, g), g), kron(kron(gb, gb), gb)});
        return b;
    }
    std::string_view rest = name;
    if (rest.substr(0, 3) == "ghz") {
        rest.remove_prefix(3);
        if (!rest.empty() && rest.front() == '(' && rest.back() == ')') {
            rest.remove_prefix(1);
            rest.remove_suffix(1);
        }
        if (!rest.empty() && std::all_of(rest.begin(), rest.end(),
                                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            const int n = std::stoi(std::string(rest));
            if (n >= 2 && n <= 16) {
                SubspaceBasis b;
                b.dims.assign(static_cast<std::size_t>(n), 2);
                b.basis = RMatrix::from_rows({ghz_row(n, false)});
                return b;
            }
        }
    }
    throw std::invalid_argument("unknown catalog name: " + std::string(name));
}

PptState ppt_state_from_set(const ProductSet& s) {
    validate(s);
    const long total = total_dimension(s.dims);
    const std::size_t m = s.vectors.size();
    if (static_cast<long>(m) >= total)
        throw std::invalid_argument("complement empty");

    std::vector<RVector> expanded;
    expanded.reserve(m);
    for (const auto& v : s.vectors)
        expanded.push_back(expand(v));
    const RMatrix e = RMatrix::from_rows(expanded);
    if (rank(e) < m)
        throw std::invalid_argument("not linearly independent");

    const RMatrix p = gram_projector(e);
    const Rational scale = Rational(1) / Rational(total - static_cast<long>(m));
    RMatrix rho(p.rows, p.cols);
    for (std::size_t i = 0; i < p.rows; ++i)
        for (std::size_t j = 0; j < p.cols; ++j) {
            rho.at(i, j) = -p.at(i, j);
            if (i == j)
                rho.at(i, j) += 1;
            rho.at(i, j) *= scale;
        }

    PptState result{s.dims, std::move(rho), {}};
    const int n = static_cast<int>(s.dims.size());
    const unsigned full = (1u << n) - 1u;
    for (unsigned mask = 1; mask < full; ++mask) {
        if (!(mask & 1u))
            continue;
        std::set<int> block;
        std::vector<int> parties;
        for (int q = 0; q < n; ++q)
            if ((mask >> q) & 1u) {
                block.insert(q);
                parties.push_back(q);
            }
        const RMatrix pt = partial_transpose(result.rho, s.dims, block);
        result.ppt_verdicts.emplace_back(std::move(parties), psd_check(pt));
    }
    return result;
}

}  // namespace kces
