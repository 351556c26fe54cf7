#pragma once

#include <json.hpp>

#include "ekr/complex.hpp"
#include "ekr/dual_pairs.hpp"
#include "ekr/ekr_engine.hpp"

namespace ekr {

using Json = nlohmann::ordered_json;

Json face_to_json(const Face& f);
Json faces_to_json(const std::vector<Face>& fs);

/// {"n_vertices": N, "facets": [[v, ...], ...]} with sorted lists.
Json complex_to_json(const SimplicialComplex& c);

/// Inverse of complex_to_json. Throws InvalidInput on malformed documents,
/// repeated vertices inside a facet or out-of-range ids.
SimplicialComplex complex_from_json(const Json& j);

Json report_to_json(const EkrReport& r);

/// {"u1_min": [...], "u2_min": [...]}.
Json dual_pair_to_json(const DualPair& p);

}  // namespace ekr
