#include "kces/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace kces {

namespace {

Json factors_to_json(const std::vector<RVector>& factors) {
    Json arr = Json::array();
    for (const auto& f : factors) {
        Json inner = Json::array();
        for (const auto& q : f)
            inner.push_back(rational_to_string(q));
        arr.push_back(std::move(inner));
    }
    return arr;
}

RVector rvector_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("expected a non-empty array of rational strings");
    RVector v;
    for (const auto& e : j) {
        if (!e.is_string())
            throw std::invalid_argument("rationals must be serialized as strings");
        v.push_back(rational_from_string(e.get<std::string>()));
    }
    return v;
}

std::vector<long> dims_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("expected a non-empty \"dims\" array");
    std::vector<long> dims;
    for (const auto& e : j) {
        if (!e.is_number_integer())
            throw std::invalid_argument("dims must be integers");
        dims.push_back(e.get<long>());
    }
    return dims;
}

std::string bipartition_key(const std::vector<int>& block, int n) {
    std::string key;
    for (int p : block)
        key += (key.empty() ? "" : ",") + std::to_string(p + 1);
    key += "|";
    bool first = true;
    for (int p = 0; p < n; ++p) {
        if (std::find(block.begin(), block.end(), p) != block.end())
            continue;
        if (!first)
            key += ",";
        key += std::to_string(p + 1);
        first = false;
    }
    return key;
}

}  // namespace

Json to_json(const ProductVector& v) {
    return Json{{"dims", v.dims}, {"factors", factors_to_json(v.factors)}};
}

Json to_json(const ProductSet& s) {
    Json vectors = Json::array();
    for (const auto& v : s.vectors)
        vectors.push_back(Json{{"factors", factors_to_json(v.factors)}});
    return Json{{"dims", s.dims}, {"vectors", std::move(vectors)}};
}

Json to_json(const SubspaceBasis& b) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < b.basis.rows; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < b.basis.cols; ++j)
            row.push_back(rational_to_string(b.basis.at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"dims", b.dims}, {"basis", std::move(rows)}};
}

Json to_json(const Partition& p) {
    Json blocks = Json::array();
    for (const auto& b : p.blocks) {
        Json block = Json::array();
        for (int party : b)
            block.push_back(party + 1);
        blocks.push_back(std::move(block));
    }
    return blocks;
}

Json to_json(const Verdict& v) {
    if (v.unextendible())
        return Json{{"outcome", "unextendible"}, {"level", v.level}};
    const ExtensionWitness& w = *v.witness;
    Json assignment = Json::object();
    for (std::size_t i = 0; i < w.assignment.size(); ++i)
        assignment[std::to_string(i)] = w.assignment[i];
    return Json{{"outcome", "witness"},
                {"level", v.level},
                {"partition", to_json(w.partition)},
                {"vector", to_json(w.vector)},
                {"assignment", std::move(assignment)}};
}

Json to_json(const KcesResult& r) {
    Json nodes = Json::array();
    for (const auto& x : r.nodes)
        nodes.push_back(rational_to_string(x));
    return Json{{"scenario", Json{{"d", r.scenario.d}, {"n", r.scenario.n}, {"k", r.scenario.k}}},
                {"nodes", std::move(nodes)},
                {"spanning", to_json(r.spanning)},
                {"complement", to_json(r.complement)},
                {"certified_level", r.certified_level}};
}

Json to_json(const PptState& p) {
    const int n = static_cast<int>(p.dims.size());
    Json rho = Json::array();
    for (std::size_t i = 0; i < p.rho.rows; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < p.rho.cols; ++j)
            row.push_back(rational_to_string(p.rho.at(i, j)));
        rho.push_back(std::move(row));
    }
    Json verdicts = Json::object();
    for (const auto& [block, ok] : p.ppt_verdicts)
        verdicts[bipartition_key(block, n)] = ok;
    return Json{{"dims", p.dims}, {"rho", std::move(rho)}, {"ppt_verdicts", std::move(verdicts)}};
}

ProductVector product_vector_from_json(const Json& j) {
    ProductVector v;
    v.dims = dims_from_json(j.at("dims"));
    for (const auto& f : j.at("factors"))
        v.factors.push_back(rvector_from_json(f));
    validate(v);
    return v;
}

ProductSet product_set_from_json(const Json& j) {
    ProductSet s;
    s.dims = dims_from_json(j.at("dims"));
    if (!j.contains("vectors") || !j.at("vectors").is_array())
        throw std::invalid_argument("product set needs a \"vectors\" array");
    for (const auto& vj : j.at("vectors")) {
        ProductVector v;
        v.dims = s.dims;
        for (const auto& f : vj.at("factors"))
            v.factors.push_back(rvector_from_json(f));
        s.vectors.push_back(std::move(v));
    }
    validate(s);
    return s;
}

SubspaceBasis subspace_basis_from_json(const Json& j) {
    SubspaceBasis b;
    b.dims = dims_from_json(j.at("dims"));
    if (!j.contains("basis") || !j.at("basis").is_array())
        throw std::invalid_argument("subspace basis needs a \"basis\" array");
    std::vector<RVector> rows;
    for (const auto& rj : j.at("basis"))
        rows.push_back(rvector_from_json(rj));
    b.basis = RMatrix::from_rows(rows);
    if (static_cast<long>(b.basis.cols) != total_dimension(b.dims))
        throw std::invalid_argument("basis row length does not match dims");
    return b;
}

CatalogEntry catalog_entry_from_json(const Json& j) {
    if (j.contains("vectors"))
        return product_set_from_json(j);
    if (j.contains("basis"))
        return subspace_basis_from_json(j);
    throw std::invalid_argument("expected a product set or a subspace basis");
}

std::string dump(const Json& j) {
    return j.dump() + "\n";
}

}  // namespace kces
