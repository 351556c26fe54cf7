#pragma once

#include <string>
#include <vector>

#include "ekr/complex.hpp"

namespace ekr {

struct CatalogEntry {
  std::string name;
  SimplicialComplex complex;
  /// Built as the two-point suspension of a vertex link, i.e. C = link(v) * {v, w}.
  bool suspension_over_link = false;
  /// Every ridge lies in exactly two facets.
  bool closed_manifold = false;
};

/// Flag, pure complexes without boundary of dimension <= 3 used for
/// exhaustive checks: cross-polytopes, cycles, the icosahedron, dissection
/// complexes, multipartite clique complexes and small joins.
std::vector<CatalogEntry> flag_catalog();

}  // namespace ekr
