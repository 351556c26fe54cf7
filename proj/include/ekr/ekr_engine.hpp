#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ekr/clique.hpp"
#include "ekr/complex.hpp"

namespace ekr {

struct SearchOptions {
  /// Worker threads for the maximum search; 0 means all hardware threads.
  unsigned threads = 0;
  /// Maximum number of optimal families visited when deciding strictness.
  std::size_t enumeration_cap = 1'000'000;
};

bool is_t_intersecting(const std::vector<Face>& family, std::size_t t);
bool is_t_intersecting(const FacetFamily& family, std::size_t t);

/// Graph on the facets of `c` with an edge whenever two facets share at
/// least t vertices.
Graph intersection_graph(const SimplicialComplex& c, std::size_t t);

struct FamilyOptimum {
  std::size_t size = 0;
  /// Lexicographically least optimal facet-index set.
  std::vector<std::size_t> witness;
};

/// Exact maximum t-intersecting family of facets. Requires a pure complex
/// and t >= 1.
FamilyOptimum max_t_intersecting_family(const SimplicialComplex& c, std::size_t t,
                                        const SearchOptions& opts = {});

struct StarOptimum {
  std::size_t size = 0;
  /// Lexicographically least (t-1)-face attaining the maximum.
  Face face;
};

/// Largest facet star of a (t-1)-face. Requires a pure complex and
/// 1 <= t <= dim + 1.
StarOptimum max_star(const SimplicialComplex& c, std::size_t t);

struct EkrReport {
  std::size_t t = 1;
  std::size_t max_family_size = 0;
  std::size_t max_star_size = 0;
  bool is_ekr = false;
  /// Unset by is_pure_ekr; unset after is_strict_pure_ekr only when the
  /// enumeration cap was hit before any non-star optimum appeared.
  std::optional<bool> is_strict;
  std::vector<std::size_t> witness_family;
  Face witness_star_face;
  /// Number of optimal families, when they were all enumerated.
  std::optional<std::size_t> max_family_count;
  bool enumeration_complete = true;
  std::size_t enumerated_count = 0;
};

EkrReport is_pure_ekr(const SimplicialComplex& c, std::size_t t, const SearchOptions& opts = {});

/// Also enumerates every optimal family (up to the cap) to decide whether
/// stars of (t-1)-faces are the only optima. A complex that is not EKR is
/// reported strict = false without enumeration.
EkrReport is_strict_pure_ekr(const SimplicialComplex& c, std::size_t t,
                             const SearchOptions& opts = {});

/// True iff the members share at least t common vertices; for an optimal
/// t-intersecting family this means it is the star of a (t-1)-face.
bool is_star_family(const std::vector<Face>& family, std::size_t t);

struct BaseFace {
  Face face;
  bool minimal = false;
};

/// Faces of the host meeting every member of a nonempty family, in canonical
/// order.
std::vector<BaseFace> base_faces(const FacetFamily& family);

/// For A = facet `a_index` of the host (a member of the family): no two
/// members B, C have B∩A and C∩A partitioning A. Requires a flag pure host.
/// The family being intersecting is the hypothesis under test and is not
/// enforced, so corrupted families come back false.
bool check_opposite_partition_lemma(const FacetFamily& family, std::size_t a_index);

struct AllFacesOptimum {
  std::size_t max_family_size = 0;
  std::vector<Face> witness;
  std::size_t max_star_size = 0;
  Vertex star_vertex = 0;
  bool is_ekr() const { return max_family_size <= max_star_size; }
};

/// Maximum intersecting family among all nonempty faces versus the largest
/// vertex star in the same family of faces. Throws CapExceeded when the
/// complex has more than `face_limit` nonempty faces.
AllFacesOptimum max_intersecting_all_faces(const SimplicialComplex& c,
                                           std::size_t face_limit = 4096,
                                           const SearchOptions& opts = {});

}  // namespace ekr
