#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ekr/complex.hpp"

namespace ekr {

using HostPtr = std::shared_ptr<const SimplicialComplex>;

inline HostPtr make_host(SimplicialComplex c) {
  return std::make_shared<const SimplicialComplex>(std::move(c));
}

/// Upward-closed family of faces of a host complex, stored by its minimal
/// elements only.
class UpperSet {
 public:
  /// The upper set generated by `generators`. Throws InvalidInput if some
  /// generator is not a face of the host.
  UpperSet(HostPtr host, std::vector<Face> generators);

  const SimplicialComplex& host() const { return *host_; }
  const HostPtr& host_ptr() const { return host_; }
  const std::vector<Face>& minimal_elements() const { return minimal_; }

  /// No faces at all (as opposed to the whole host, generated by ∅).
  bool empty() const { return minimal_.empty(); }
  bool contains(const Face& sigma) const;
  Face essential_vertices() const;

  /// Equal minimal elements over equal hosts.
  friend bool operator==(const UpperSet& a, const UpperSet& b);

 private:
  HostPtr host_;
  std::vector<Face> minimal_;
};

UpperSet upper_closure(HostPtr host, std::vector<Face> generators);

/// U*: the faces of the host meeting every member of U. Its minimal elements
/// are the minimal transversals of min(U) that are faces, found by Berge's
/// incremental method with non-faces pruned at every step.
UpperSet intersecting_dual(const UpperSet& u);

inline Face essential_vertices(const UpperSet& u) { return u.essential_vertices(); }

/// Two upper sets over one host, each the intersecting dual of the other.
class DualPair {
 public:
  /// Throws PreconditionError("dual pair", ...) if the sides are not mutually dual.
  DualPair(UpperSet u1, UpperSet u2);

  const SimplicialComplex& host() const { return u1_.host(); }
  const HostPtr& host_ptr() const { return u1_.host_ptr(); }
  const UpperSet& u1() const { return u1_; }
  const UpperSet& u2() const { return u2_; }
  Face essential_vertices() const { return u1_.essential_vertices(); }

  friend bool operator==(const DualPair& a, const DualPair& b) {
    return a.u1_ == b.u1_ && a.u2_ == b.u2_;
  }

 private:
  UpperSet u1_;
  UpperSet u2_;
};

/// (U**, U*).
DualPair dual_pair_of(const UpperSet& u);

/// { A ∩ V(lkcap(C,a,b)) : A ∈ F, a ∈ A, b ∉ A }, canonical and deduplicated.
std::vector<Face> restrict_family(const FacetFamily& family, Vertex a, Vertex b);

/// lkcap(C, a, b) wrapped as a shared host.
HostPtr lkcap_host(const SimplicialComplex& c, Vertex a, Vertex b);

/// The pair (U_a, U_b) = (u1, u2) contains the restrictions of F at (a, b)
/// and at (b, a) respectively. Throws PreconditionError("host", ...) unless
/// the pair lives on lkcap(C, a, b).
bool supports_at(const DualPair& p, const FacetFamily& family, Vertex a, Vertex b);

enum class DualPairType { Trivial, Vertex, VertexPlusEdge, FourCycle };

const char* to_string(DualPairType t);

struct Classification {
  DualPairType type;
  /// Trivial: none. Vertex: {v}. VertexPlusEdge: {u, v}. FourCycle: the
  /// cycle u, v, w, x with sides <uv, wx> and <vw, ux>.
  std::vector<Vertex> witness;
};

/// Type of a dual pair in a flag complex of dimension <= 1. Throws
/// PreconditionError if the host is not such a complex.
Classification classify_1d(const DualPair& p);

inline constexpr std::size_t kDefaultIsomorphismCap = 12;

/// Isomorphism invariant of the pair of set systems formed by the minimal
/// elements, under relabeling of essential vertices and swapping the sides.
/// Throws CapExceeded for more than `cap` essential vertices.
std::vector<std::uint64_t> canonical_form(const DualPair& p,
                                          std::size_t cap = kDefaultIsomorphismCap);

bool dual_pairs_isomorphic(const DualPair& p, const DualPair& q,
                           std::size_t cap = kDefaultIsomorphismCap);

struct EnumerationCaps {
  std::size_t max_generator_size = 3;
  std::size_t max_antichain = 4;
  std::size_t max_faces = 4096;
};

struct DualPairEnumeration {
  /// One representative per isomorphism class, in discovery order.
  std::vector<DualPair> classes;
  /// Every distinct pair met (exact equality, sides as produced).
  std::vector<DualPair> pairs;
  /// True when the caps provably did not cut anything off: generators of
  /// every face size were allowed and no antichain could grow past the cap.
  bool complete = false;
};

/// All pairs (U**, U*) for U generated by an antichain of nonempty faces
/// within the caps, plus the trivial pair. Throws CapExceeded if the host
/// has more than caps.max_faces nonempty faces.
DualPairEnumeration enumerate_dual_pairs(const SimplicialComplex& d,
                                         const EnumerationCaps& caps = {});

struct ConjectureCheck {
  bool holds = true;
  /// Both enumerations were complete; otherwise `holds` is indeterminate.
  bool complete = false;
  std::size_t classes = 0;
  std::size_t reference_classes = 0;
  std::optional<DualPair> violation;
};

/// Every dual-pair class of D is isomorphic to one in the boundary of the
/// (dim D + 1)-dimensional cross-polytope. Requires D flag, pure and without
/// boundary.
ConjectureCheck check_crosspolytope_conjecture(const SimplicialComplex& d,
                                               const EnumerationCaps& caps = {});

struct FlipResult {
  FacetFamily family;
  /// Supporting pair at (a, b), oriented (U'_a, U'_b).
  DualPair pair;
  /// The side whose facets were exchanged; the other side lost R(v).
  Vertex exchanged_side;
  std::size_t removed = 0;
  std::size_t added = 0;
};

/// One exchange step for an intersecting family F with base face sigma ⊇ ab
/// supported by p = (U_a, U_b). Facets of the larger of R_a(v), R_b(v) are
/// moved across a ridge (least admissible vertex u), the other set is
/// dropped, and the pair is rebuilt from the minimal elements of the dropped
/// side that avoid v. Ties go to min(a, b). Every precondition failure throws
/// a PreconditionError naming it; postconditions are checked after the step.
FlipResult vertex_flip(const FacetFamily& family, const Face& sigma, Vertex a, Vertex b,
                       const DualPair& p, Vertex v);

struct ReductionResult {
  FacetFamily family;
  /// a or b; every member of the family contains it.
  Vertex base_vertex;
  std::size_t flips = 0;
};

/// Repeats vertex_flip on the least essential vertex, starting from the pair
/// generated by the restriction at (a, b), until no essential vertex is
/// left. Requires the missing edge exchange property and base face {a, b}.
ReductionResult reduce_base_edge(const FacetFamily& family, Vertex a, Vertex b);

}  // namespace ekr
