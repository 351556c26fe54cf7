#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ekr/face.hpp"

namespace ekr {

/// A finite abstract simplicial complex, stored by its facets.
///
/// Vertex ids live in [0, n_vertices). The facet list is an antichain kept in
/// canonical order (lexicographic on sorted vertex lists). The empty complex
/// has no facets at all; the complex {∅} has the single facet ∅.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Canonicalizes `facets` to the antichain of maximal faces. Throws
  /// InvalidInput if a vertex id is >= n_vertices.
  static SimplicialComplex from_facets(std::size_t n_vertices, std::vector<Face> facets);

  std::size_t n_vertices() const { return n_vertices_; }
  const std::vector<Face>& facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }
  const Face& facet(std::size_t i) const { return facets_.at(i); }

  /// True for the complex without any face (not even ∅).
  bool empty() const { return facets_.empty(); }

  /// Largest facet dimension; -1 for {∅} and for the empty complex.
  int dim() const;

  /// Face membership: some facet contains `face`.
  bool contains(const Face& face) const;

  /// Index of `face` in the facet list, if it is a facet.
  std::optional<std::size_t> facet_index(const Face& face) const;

  /// Union of all facets (the vertices actually used).
  Face vertex_set() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::size_t n_vertices_ = 0;
  std::vector<Face> facets_;
};

/// A subset of the facets of a host complex, by facet index. Non-owning: the
/// host must outlive the family.
class FacetFamily {
 public:
  FacetFamily(const SimplicialComplex& host, std::vector<std::size_t> members);

  const SimplicialComplex& host() const { return *host_; }
  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(std::size_t facet_index) const;
  std::vector<Face> facets() const;

  friend bool operator==(const FacetFamily& a, const FacetFamily& b) {
    return a.host_ == b.host_ && a.members_ == b.members_;
  }

 private:
  const SimplicialComplex* host_;
  std::vector<std::size_t> members_;
};

// --- faces ------------------------------------------------------------------

/// All k-dimensional faces in canonical order. k = -1 yields {∅} for a
/// nonempty complex.
std::vector<Face> faces_of_dim(const SimplicialComplex& c, int k);

/// Every face of the complex including ∅, in canonical order.
std::vector<Face> all_faces(const SimplicialComplex& c);

/// Neighbour sets of the 1-skeleton graph, indexed by vertex id.
std::vector<Face> vertex_neighbors(const SimplicialComplex& c);

bool has_edge(const SimplicialComplex& c, Vertex u, Vertex v);

// --- local structure --------------------------------------------------------

/// Faces containing `sigma`. Throws InvalidInput if sigma is not a face.
std::vector<Face> star(const SimplicialComplex& c, const Face& sigma);
FacetFamily star_facets(const SimplicialComplex& c, const Face& sigma);

/// Faces disjoint from sigma whose union with sigma is a face. Vertex ids are
/// kept in the ambient range of `c`.
SimplicialComplex link(const SimplicialComplex& c, const Face& sigma);

/// Subcomplex induced on V(link a) ∩ V(link b).
SimplicialComplex lkcap(const SimplicialComplex& c, Vertex a, Vertex b);

/// Faces of dimension <= k. Throws InvalidInput if k > dim c.
SimplicialComplex skeleton(const SimplicialComplex& c, int k);

/// Faces all of whose vertices lie in `w`.
SimplicialComplex induced_subcomplex(const SimplicialComplex& c, const Face& w);

/// True iff `sub` is the subcomplex of `c` induced on the vertices of `sub`.
bool is_induced(const SimplicialComplex& c, const SimplicialComplex& sub);

/// Set intersection of two complexes on the same vertex range.
SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b);

// --- predicates -------------------------------------------------------------

/// Common facet dimension, or nullopt if the complex is empty or not pure.
std::optional<int> pure_dimension(const SimplicialComplex& c);
inline bool is_pure(const SimplicialComplex& c) { return pure_dimension(c).has_value(); }

/// Every clique of the 1-skeleton is a face. Decided by Bron–Kerbosch
/// enumeration (with pivoting) of the maximal cliques.
bool is_flag(const SimplicialComplex& c);

/// Every ridge lies in at least two facets. Requires a pure complex; for pure
/// complexes this is equivalent to the condition on all non-maximal faces.
bool is_without_boundary(const SimplicialComplex& c);

/// Every ridge lies in exactly two facets. Requires a pure complex.
bool is_pseudo_manifold(const SimplicialComplex& c);

struct ExchangeFailure {
  Face ridge;
  Vertex apex;
};

struct ExchangeCheck {
  bool holds = true;
  std::optional<ExchangeFailure> first_failure;
};

/// For each facet ridge ∪ {v} there is u != v with ridge ∪ {u} a facet and uv
/// not an edge. Reports the first failing (ridge, v) in canonical order.
ExchangeCheck missing_edge_exchange(const SimplicialComplex& c);
inline bool has_missing_edge_exchange(const SimplicialComplex& c) {
  return missing_edge_exchange(c).holds;
}

// --- flag-complex constructions --------------------------------------------

struct Contraction {
  SimplicialComplex complex;
  /// The vertex standing for sigma; the smallest vertex of sigma is reused.
  Vertex new_vertex;
};

/// C/sigma for a flag complex. Throws InvalidInput if sigma is not a face or
/// the complex is not flag.
Contraction contract(const SimplicialComplex& c, const Face& sigma);

/// Faces disjoint from sigma that form a face together with some vertex of
/// sigma. Requires a flag complex.
SimplicialComplex outerlink(const SimplicialComplex& c, const Face& sigma);

/// S_a = link(a) \ sigma, a subcomplex of the outerlink of sigma.
SimplicialComplex sector(const SimplicialComplex& c, const Face& sigma, Vertex a);

/// S_tau, the intersection of the sectors of the vertices of tau ⊆ sigma.
SimplicialComplex sector_intersection(const SimplicialComplex& c, const Face& sigma,
                                      const Face& tau);

/// Simplicial join. D's vertex ids are shifted by c.n_vertices().
SimplicialComplex join(const SimplicialComplex& c, const SimplicialComplex& d);

}  // namespace ekr
