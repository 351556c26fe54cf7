#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ekr/complex.hpp"

namespace ekr {

/// K(n, r): all r-subsets of {0..n-1}.
SimplicialComplex complete_complex(std::size_t n, std::size_t r);

/// Boundary of the d-dimensional cross-polytope. Vertices 2i and 2i+1 form
/// the i-th antipodal pair; the facets are the 2^d transversals.
SimplicialComplex crosspolytope_boundary(std::size_t d);

/// Boundary of the n-gon: vertices 0..n-1, edges {i, i+1 mod n}.
SimplicialComplex cycle(std::size_t n);

/// Polygon diagonal (i, j) with i < j, corners numbered 0..N-1 around the
/// boundary of the convex N-gon.
using Diagonal = std::pair<std::size_t, std::size_t>;

/// Diagonals of the (mn+2)-gon that occur in some (m+2)-angulation, in
/// lexicographic order. Index k in this list is vertex k of
/// dissection_complex(n, m).
std::vector<Diagonal> dissection_diagonals(std::size_t n, std::size_t m);

/// Complex whose facets are the (m+2)-angulations of the convex (mn+2)-gon,
/// each recorded as its set of n-1 diagonals. m = 1 gives the simplicial
/// associahedron. The result is checked to be flag, pure of dimension n-2 and
/// without boundary.
SimplicialComplex dissection_complex(std::size_t n, std::size_t m);

/// True iff two diagonals of a convex polygon cross in the interior.
bool diagonals_cross(const Diagonal& a, const Diagonal& b);

/// Clique complex of the complete multipartite graph. Part i gets the next
/// part_sizes[i] consecutive ids, so {2,2,2} is labeled exactly like
/// crosspolytope_boundary(3).
SimplicialComplex kpartite_clique_complex(const std::vector<std::size_t>& part_sizes);

/// The d-simplex on 0..d together with one extra d-simplex on each of its
/// ridges: vertex d+1+i is glued to the ridge missing i.
SimplicialComplex simplex_with_neighbors(std::size_t d);

/// Two d-simplices sigma+p and sigma+q on the common ridge sigma = {0..d-1}
/// (p = d, q = d+1), with a path of k d-simplices fanned around each
/// (d-2)-face tau_i = sigma - {i}. The fan around tau_i starts at the
/// bipyramid facet containing q for even i and p for odd i:
///   tau_i + {e, a_1}, tau_i + {a_1, a_2}, ..., tau_i + {a_{k-1}, a_k}
/// with fresh apexes a_j numbered consecutively from d+2 in order of i.
SimplicialComplex fattened_bipyramid(std::size_t d, std::size_t k);

/// Join with two isolated points.
SimplicialComplex suspension(const SimplicialComplex& c);

/// join(join(C, 2 points), 2 points) = join(C, boundary of a square).
SimplicialComplex double_suspension(const SimplicialComplex& c);

/// Boundary of the icosahedron: apex 0, upper ring 1..5, lower ring 6..10,
/// apex 11.
SimplicialComplex icosahedron();

}  // namespace ekr
