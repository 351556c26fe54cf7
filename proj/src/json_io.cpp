#include "ekr/json_io.hpp"

#include <string>

#include "ekr/error.hpp"

namespace ekr {

Json face_to_json(const Face& f) {
  Json out = Json::array();
  f.for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

Json faces_to_json(const std::vector<Face>& fs) {
  Json out = Json::array();
  for (const Face& f : fs) out.push_back(face_to_json(f));
  return out;
}

Json complex_to_json(const SimplicialComplex& c) {
  Json out;
  out["n_vertices"] = c.n_vertices();
  out["facets"] = faces_to_json(c.facets());
  return out;
}

SimplicialComplex complex_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("complex JSON must be an object");
  if (!j.contains("n_vertices") || !j["n_vertices"].is_number_unsigned())
    throw InvalidInput("complex JSON needs a non-negative integer \"n_vertices\"");
  if (!j.contains("facets") || !j["facets"].is_array())
    throw InvalidInput("complex JSON needs a \"facets\" array");
  const auto n = j["n_vertices"].get<std::uint64_t>();
  check_face_width(n);
  std::vector<Face> facets;
  for (const Json& jf : j["facets"]) {
    if (!jf.is_array()) throw InvalidInput("each facet must be an array of vertex ids");
    Face f;
    for (const Json& jv : jf) {
      if (!jv.is_number_unsigned())
        throw InvalidInput("vertex ids must be non-negative integers");
      const auto v = jv.get<std::uint64_t>();
      if (v >= n)
        throw InvalidInput("vertex id " + std::to_string(v) + " out of range for " +
                           std::to_string(n) + " vertices");
      if (f.contains(static_cast<Vertex>(v)))
        throw InvalidInput("vertex " + std::to_string(v) + " repeated inside a facet");
      f.insert(static_cast<Vertex>(v));
    }
    facets.push_back(f);
  }
  return SimplicialComplex::from_facets(n, std::move(facets));
}

Json report_to_json(const EkrReport& r) {
  Json out;
  out["t"] = r.t;
  out["max_family"] = r.max_family_size;
  out["max_star"] = r.max_star_size;
  out["ekr"] = r.is_ekr;
  out["strict"] = r.is_strict ? Json(*r.is_strict) : Json(nullptr);
  out["witness_family"] = r.witness_family;
  out["witness_star_face"] = face_to_json(r.witness_star_face);
  out["optimum_count"] = r.max_family_count ? Json(*r.max_family_count) : Json(nullptr);
  return out;
}

Json dual_pair_to_json(const DualPair& p) {
  Json out;
  out["u1_min"] = faces_to_json(p.u1().minimal_elements());
  out["u2_min"] = faces_to_json(p.u2().minimal_elements());
  return out;
}

}  // namespace ekr
