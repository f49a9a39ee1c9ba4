#pragma once

#include <string>

#include <json.hpp>

#include "kces/construct.hpp"
#include "kces/states.hpp"
#include "kces/unextend.hpp"

namespace kces {

// Insertion-ordered JSON keeps serialization byte-deterministic.
using Json = nlohmann::ordered_json;

Json to_json(const ProductVector& v);
Json to_json(const ProductSet& s);
Json to_json(const SubspaceBasis& b);
Json to_json(const Partition& p);  // 1-based party indices
Json to_json(const Verdict& v);
Json to_json(const KcesResult& r);
Json to_json(const PptState& p);

ProductVector product_vector_from_json(const Json& j);
ProductSet product_set_from_json(const Json& j);
SubspaceBasis subspace_basis_from_json(const Json& j);

/// Parses either a ProductSet ("vectors") or a SubspaceBasis ("basis") file.
CatalogEntry catalog_entry_from_json(const Json& j);

std::string dump(const Json& j);

}  // namespace kces
