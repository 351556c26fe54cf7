#include "ekr/ekr_engine.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "ekr/error.hpp"

namespace ekr {

namespace {

int require_pure(const SimplicialComplex& c, const char* op) {
  auto d = pure_dimension(c);
  if (!d) throw PreconditionError("pure", std::string(op) + " needs a pure complex");
  return *d;
}

void require_t(std::size_t t) {
  if (t < 1) throw InvalidInput("t must be at least 1");
}

std::vector<Face> pick(const SimplicialComplex& c, const std::vector<std::size_t>& idx) {
  std::vector<Face> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(c.facet(i));
  return out;
}

bool opposite_partition_holds(const std::vector<Face>& members, const Face& a) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Face bi = members[i] & a;
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Face cj = members[j] & a;
      if (!bi.intersects(cj) && (bi | cj) == a) return false;
    }
  }
  return true;
}

}  // namespace

bool is_t_intersecting(const std::vector<Face>& family, std::size_t t) {
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (family[i].intersection_size(family[j]) < t) return false;
  return true;
}

bool is_t_intersecting(const FacetFamily& family, std::size_t t) {
  return is_t_intersecting(family.facets(), t);
}

Graph intersection_graph(const SimplicialComplex& c, std::size_t t) {
  Graph g(c.facet_count());
  for (std::size_t i = 0; i < c.facet_count(); ++i)
    for (std::size_t j = i + 1; j < c.facet_count(); ++j)
      if (c.facet(i).intersection_size(c.facet(j)) >= t) g.add_edge(i, j);
  return g;
}

StarOptimum max_star(const SimplicialComplex& c, std::size_t t) {
  const int d = require_pure(c, "max_star");
  require_t(t);
  if (t > static_cast<std::size_t>(d + 1)) {
    throw InvalidInput("max_star: t = " + std::to_string(t) + " exceeds dim + 1 = " +
                       std::to_string(d + 1));
  }
  std::map<Face, std::size_t> counts;
  for (const Face& f : c.facets())
    for_each_subset_of_size(f, t, [&](const Face& s) { ++counts[s]; });
  StarOptimum best;
  for (const auto& [face, n] : counts) {
    if (n > best.size) {
      best.size = n;
      best.face = face;
    }
  }
  return best;
}

FamilyOptimum max_t_intersecting_family(const SimplicialComplex& c, std::size_t t,
                                        const SearchOptions& opts) {
  const int d = require_pure(c, "max_t_intersecting_family");
  require_t(t);
  const Graph g = intersection_graph(c, t);
  std::size_t lower = c.facet_count() > 0 ? 1 : 0;
  if (t <= static_cast<std::size_t>(d + 1)) lower = std::max(lower, max_star(c, t).size);
  FamilyOptimum out;
  out.size = clique_number(g, lower, opts.threads);
  out.witness = lex_least_clique(g, out.size);
  if (out.witness.size() != out.size || !is_t_intersecting(pick(c, out.witness), t))
    throw std::logic_error("maximum family search returned an invalid witness");
  return out;
}

bool is_star_family(const std::vector<Face>& family, std::size_t t) {
  if (family.empty()) return false;
  Face common = family.front();
  for (const Face& f : family) common &= f;
  return common.size() >= t;
}

EkrReport is_pure_ekr(const SimplicialComplex& c, std::size_t t, const SearchOptions& opts) {
  require_pure(c, "is_pure_ekr");
  const StarOptimum star = max_star(c, t);
  const FamilyOptimum fam = max_t_intersecting_family(c, t, opts);
  EkrReport r;
  r.t = t;
  r.max_family_size = fam.size;
  r.max_star_size = star.size;
  r.is_ekr = fam.size <= star.size;
  r.witness_family = fam.witness;
  r.witness_star_face = star.face;
  if (t == 1 && is_flag(c)) {
    const std::vector<Face> members = pick(c, fam.witness);
    for (const Face& a : members)
      if (!opposite_partition_holds(members, a))
        throw std::logic_error("optimal family violates the opposite partition property");
  }
  return r;
}

EkrReport is_strict_pure_ekr(const SimplicialComplex& c, std::size_t t, const SearchOptions& opts) {
  EkrReport r = is_pure_ekr(c, t, opts);
  if (!r.is_ekr) {
    r.is_strict = false;
    return r;
  }
  const Graph g = intersection_graph(c, t);
  bool saw_non_star = false;
  const CliqueEnumeration e =
      enumerate_cliques(g, r.max_family_size, opts.enumeration_cap,
                        [&](const std::vector<std::size_t>& clique) {
                          if (!is_star_family(pick(c, clique), t)) saw_non_star = true;
                          return true;
                        });
  r.enumerated_count = e.count;
  r.enumeration_complete = e.complete;
  if (e.complete) {
    r.is_strict = !saw_non_star;
    r.max_family_count = e.count;
  } else if (saw_non_star) {
    r.is_strict = false;
  }
  return r;
}

std::vector<BaseFace> base_faces(const FacetFamily& family) {
  if (family.empty()) throw InvalidInput("base_faces: empty family");
  const std::vector<Face> members = family.facets();
  auto is_base = [&](const Face& s) {
    for (const Face& a : members)
      if (!s.intersects(a)) return false;
    return true;
  };
  std::vector<BaseFace> out;
  for (const Face& s : all_faces(family.host())) {
    if (!is_base(s)) continue;
    bool minimal = true;
    s.for_each([&](Vertex v) {
      if (minimal && is_base(s.without(v))) minimal = false;
    });
    out.push_back(BaseFace{s, minimal});
  }
  return out;
}

bool check_opposite_partition_lemma(const FacetFamily& family, std::size_t a_index) {
  const SimplicialComplex& c = family.host();
  if (!is_pure(c)) throw PreconditionError("pure", "opposite partition check needs a pure host");
  if (!is_flag(c)) throw PreconditionError("flag", "opposite partition check needs a flag host");
  if (!family.contains(a_index))
    throw PreconditionError("member", "facet " + std::to_string(a_index) + " is not in the family");
  return opposite_partition_holds(family.facets(), c.facet(a_index));
}

AllFacesOptimum max_intersecting_all_faces(const SimplicialComplex& c, std::size_t face_limit,
                                           const SearchOptions& opts) {
  std::vector<Face> faces;
  for (const Face& f : all_faces(c)) {
    if (f.empty()) continue;
    faces.push_back(f);
    if (faces.size() > face_limit)
      throw CapExceeded("max_intersecting_all_faces: more than " + std::to_string(face_limit) +
                        " nonempty faces");
  }
  AllFacesOptimum out;
  std::map<Vertex, std::size_t> star;
  for (const Face& f : faces) f.for_each([&](Vertex v) { ++star[v]; });
  for (const auto& [v, n] : star) {
    if (n > out.max_star_size) {
      out.max_star_size = n;
      out.star_vertex = v;
    }
  }
  Graph g(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t j = i + 1; j < faces.size(); ++j)
      if (faces[i].intersects(faces[j])) g.add_edge(i, j);
  out.max_family_size = clique_number(g, out.max_star_size, opts.threads);
  for (std::size_t i : lex_least_clique(g, out.max_family_size)) out.witness.push_back(faces[i]);
  return out;
}

}  // namespace ekr
