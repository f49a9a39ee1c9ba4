#include "kces/construct.hpp"

#include <stdexcept>
#include <string>

namespace kces {

namespace {

Rational rational_pow(const Rational& x, const Int& e) {
    Rational r = 1;
    Int left = e;
    Rational base = x;
    while (left > 0) {
        if (mpz_odd_p(left.get_mpz_t()))
            r *= base;
        base *= base;
        left /= 2;
    }
    return r;
}

}  // namespace

ProductVector vandermonde_product_vector(long d, long n, const Rational& x) {
    if (d < 2 || n < 1)
        throw std::invalid_argument("vandermonde_product_vector requires d >= 2, n >= 1");
    if (x <= 0)
        throw std::invalid_argument("vandermonde nodes must satisfy 0 < x_0 < x_1 < ...");
    ProductVector v;
    for (long m = 0; m < n; ++m) {
        const Int stride = pow_int(d, n - 1 - m);
        RVector f;
        f.reserve(static_cast<std::size_t>(d));
        for (long s = 0; s < d; ++s)
            f.push_back(rational_pow(x, s * stride));
        v.dims.push_back(d);
        v.factors.push_back(std::move(f));
    }
    return v;
}

Int min_spanning_count(const Scenario& s) {
    const long t = s.t();
    return t * pow_int(s.d, s.k - 1) + pow_int(s.d, s.n - (s.k - 1) * t) - t;
}

namespace {

ProductSet vandermonde_set(const Scenario& s, const std::vector<Rational>& nodes) {
    ProductSet set;
    set.dims.assign(static_cast<std::size_t>(s.n), s.d);
    for (const Rational& x : nodes)
        set.vectors.push_back(vandermonde_product_vector(s.d, s.n, x));
    return set;
}

void check_nodes(const std::vector<Rational>& nodes) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i] <= 0)
            throw std::invalid_argument("vandermonde nodes must satisfy 0 < x_0 < x_1 < ...");
        if (i > 0 && nodes[i - 1] >= nodes[i])
            throw std::invalid_argument(
                "vandermonde nodes must be strictly increasing: 0 < x_0 < x_1 < ...");
    }
}

std::vector<Rational> default_nodes(long count) {
    std::vector<Rational> nodes;
    nodes.reserve(static_cast<std::size_t>(count));
    for (long i = 1; i <= count; ++i)
        nodes.emplace_back(i);
    return nodes;
}

}  // namespace

KcesResult build_kces(const Scenario& s, long count,
                      std::optional<std::vector<Rational>> nodes) {
    const Int min_count = min_spanning_count(s);
    if (count < min_count)
        throw std::invalid_argument(
            "spanning count below the minimum t*d^(k-1) + d^(n-t(k-1)) - t = " +
            min_count.get_str());
    const Int total = pow_int(s.d, s.n);
    if (count >= total)
        throw std::invalid_argument("spanning count must be smaller than d^n");

    std::vector<Rational> xs = nodes ? std::move(*nodes) : default_nodes(count);
    if (static_cast<long>(xs.size()) != count)
        throw std::invalid_argument("node list length must equal the spanning count");
    check_nodes(xs);

    KcesResult result{s, std::move(xs), vandermonde_set(s, {}), {}, 0};
    result.spanning = vandermonde_set(s, result.nodes);

    std::vector<RVector> rows;
    rows.reserve(result.spanning.vectors.size());
    for (const auto& v : result.spanning.vectors)
        rows.push_back(expand(v));
    result.complement.dims = result.spanning.dims;
    result.complement.basis = nullspace_basis(RMatrix::from_rows(rows));

    const Verdict verdict = verify_level(result.spanning, static_cast<int>(s.k) - 1);
    if (!verdict.unextendible())
        throw std::logic_error("vandermonde spanning set unexpectedly extendible");
    result.certified_level = verdict.level;
    return result;
}

bool total_positivity_certificate(const Scenario& s, long count,
                                  const std::vector<Rational>& nodes, const Partition& p) {
    if (count > 10)
        throw std::invalid_argument("total_positivity_certificate limited to K <= 10");
    if (static_cast<long>(nodes.size()) != count)
        throw std::invalid_argument("node list length must equal the spanning count");
    if (p.party_count() != static_cast<int>(s.n))
        throw std::invalid_argument("partition does not match the scenario's parties");

    const ProductSet set = vandermonde_set(s, nodes);
    std::vector<ProductVector> coarse;
    for (const auto& v : set.vectors)
        coarse.push_back(coarse_grain(v, p));
    const std::vector<long>& block_dims = coarse.front().dims;
    for (long d : block_dims)
        if (d > 8)
            throw std::invalid_argument(
                "total_positivity_certificate limited to block dimension <= 8");

    for (std::size_t b = 0; b < block_dims.size(); ++b) {
        std::vector<RVector> rows;
        for (const auto& v : coarse)
            rows.push_back(v.factors[b]);
        if (!all_minors_positive(RMatrix::from_rows(rows)))
            return false;
    }
    return true;
}

SubspaceBasis pad_construction(const SubspaceBasis& ges, const ProductVector& pad) {
    if (ges.basis.rows == 0)
        throw std::invalid_argument("pad_construction requires a non-empty basis");
    if (pad.dims.empty())
        return ges;
    validate(pad);

    const RVector pad_expanded = expand(pad);
    SubspaceBasis out;
    out.dims = pad.dims;
    out.dims.insert(out.dims.end(), ges.dims.begin(), ges.dims.end());
    std::vector<RVector> rows;
    rows.reserve(ges.basis.rows);
    for (std::size_t i = 0; i < ges.basis.rows; ++i)
        rows.push_back(kron(pad_expanded, ges.basis.row(i)));
    out.basis = RMatrix::from_rows(rows);
    return out;
}

}  // namespace kces
