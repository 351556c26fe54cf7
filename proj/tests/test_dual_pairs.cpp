#include <doctest.h>

#include "ekr/dual_pairs.hpp"
#include "ekr/ekr_engine.hpp"
#include "ekr/error.hpp"
#include "ekr/generators.hpp"
#include "oracles.hpp"

using namespace ekr;

namespace {

// Square u=0, v=1, w=2, x=3 in cyclic order.
HostPtr square() { return make_host(cycle(4)); }

std::vector<Face> fs(std::initializer_list<Face> l) { return std::vector<Face>(l); }

}  // namespace

TEST_CASE("upper closure") {
  const auto h = square();
  CHECK(upper_closure(h, {Face{}}).minimal_elements() == fs({Face{}}));
  const UpperSet v(h, {Face{0}});
  CHECK(v.contains(Face{0}));
  CHECK(v.contains(Face{0, 1}));
  CHECK_FALSE(v.contains(Face{1, 2}));
  CHECK_FALSE(v.contains(Face{0, 2}));  // not a face of the host
  CHECK(upper_closure(h, {Face{0, 1}, Face{0}}).minimal_elements() == fs({Face{0}}));
  CHECK_THROWS_AS(UpperSet(h, {Face{0, 2}}), InvalidInput);
  CHECK(UpperSet(h, {}).empty());
}

TEST_CASE("intersecting duals") {
  const auto h = square();
  const UpperSet none(h, {});
  const UpperSet all(h, {Face{}});
  CHECK(intersecting_dual(none) == all);
  CHECK(intersecting_dual(all) == none);
  const UpperSet cyc(h, {Face{0, 1}, Face{2, 3}});
  CHECK(intersecting_dual(cyc).minimal_elements() == fs({Face{0, 3}, Face{1, 2}}));
  const UpperSet edge(h, {Face{0, 1}});
  CHECK(intersecting_dual(edge).minimal_elements() == fs({Face{0}, Face{1}}));

  // faces of a 4-simplex: k-faces are dual to (4-k)-faces
  const auto simplex = make_host(complete_complex(5, 5));
  for (int k = 0; k <= 4; ++k) {
    const UpperSet u(simplex, faces_of_dim(*simplex, k));
    CHECK(intersecting_dual(u).minimal_elements() == faces_of_dim(*simplex, 4 - k));
  }
}

TEST_CASE("dual pairs and essential vertices") {
  const auto h = square();
  CHECK(UpperSet(h, {Face{0}}).essential_vertices() == Face{0});
  CHECK(UpperSet(h, {Face{0, 1}, Face{2, 3}}).essential_vertices() == Face{0, 1, 2, 3});
  const auto pv = dual_pair_of(UpperSet(h, {Face{0}}));
  CHECK(pv.u1().minimal_elements() == fs({Face{0}}));
  CHECK(pv.u2().minimal_elements() == fs({Face{0}}));
  const auto mixed = dual_pair_of(UpperSet(h, {Face{0, 1}}));
  CHECK(mixed.u1().minimal_elements() == fs({Face{0, 1}}));
  CHECK(mixed.u2().minimal_elements() == fs({Face{0}, Face{1}}));
  const auto trivial = dual_pair_of(UpperSet(h, {}));
  CHECK(trivial.u1().empty());
  CHECK(trivial.u2().minimal_elements() == fs({Face{}}));
  CHECK_THROWS_AS(DualPair(UpperSet(h, {Face{0}}), UpperSet(h, {Face{1}})), PreconditionError);
  const auto other = make_host(cycle(5));
  CHECK_THROWS_AS(DualPair(UpperSet(h, {Face{0}}), UpperSet(other, {Face{0}})), PreconditionError);
}

TEST_CASE("restriction and support") {
  const auto oct = crosspolytope_boundary(3);
  const auto st = star_facets(oct, Face{1});
  CHECK(restrict_family(st, 0, 1).empty());
  const auto fam = FacetFamily(oct, {*oct.facet_index(Face{0, 2, 4}), *oct.facet_index(Face{1, 3, 4}),
                                     *oct.facet_index(Face{0, 3, 4})});
  CHECK(restrict_family(fam, 0, 1) == fs({Face{2, 4}, Face{3, 4}}));
  CHECK(restrict_family(fam, 1, 0) == fs({Face{3, 4}}));

  const HostPtr host = lkcap_host(oct, 0, 1);
  const auto p = dual_pair_of(UpperSet(host, restrict_family(fam, 0, 1)));
  CHECK(supports_at(p, fam, 0, 1));
  const auto q = dual_pair_of(UpperSet(host, restrict_family(fam, 1, 0)));
  const DualPair q_swapped(q.u2(), q.u1());
  CHECK(supports_at(q_swapped, fam, 0, 1));

  const DualPair triv = dual_pair_of(UpperSet(host, {}));
  CHECK(supports_at(triv, star_facets(oct, Face{1}), 0, 1));
  CHECK_FALSE(supports_at(triv, fam, 0, 1));

  const DualPair wrong_host = dual_pair_of(UpperSet(make_host(cycle(4)), {}));
  CHECK_THROWS_AS(supports_at(wrong_host, fam, 0, 1), PreconditionError);
  CHECK_THROWS_AS(restrict_family(fam, 0, 0), PreconditionError);
}

TEST_CASE("classification in flag 1-complexes") {
  const auto h = square();
  CHECK(classify_1d(dual_pair_of(UpperSet(h, {}))).type == DualPairType::Trivial);
  CHECK(classify_1d(dual_pair_of(UpperSet(h, {Face{2}}))).type == DualPairType::Vertex);
  const auto vpe = classify_1d(dual_pair_of(UpperSet(h, {Face{1, 2}})));
  CHECK(vpe.type == DualPairType::VertexPlusEdge);
  CHECK(vpe.witness == std::vector<Vertex>{1, 2});
  const auto fc = classify_1d(dual_pair_of(UpperSet(h, {Face{0, 1}, Face{2, 3}})));
  CHECK(fc.type == DualPairType::FourCycle);
  REQUIRE(fc.witness.size() == 4);
  CHECK(has_edge(*h, fc.witness[1], fc.witness[2]));
  CHECK(has_edge(*h, fc.witness[0], fc.witness[3]));
  CHECK_THROWS_AS(classify_1d(dual_pair_of(UpperSet(make_host(crosspolytope_boundary(3)), {}))),
                  PreconditionError);
  CHECK_THROWS_AS(classify_1d(dual_pair_of(UpperSet(make_host(cycle(3)), {}))), PreconditionError);
}

TEST_CASE("isomorphism") {
  const auto h = square();
  const auto a = dual_pair_of(UpperSet(h, {Face{0, 1}}));
  const DualPair a_swapped(a.u2(), a.u1());
  CHECK(dual_pairs_isomorphic(a, a_swapped));
  const auto v1 = dual_pair_of(UpperSet(h, {Face{0}}));
  const auto v2 = dual_pair_of(UpperSet(make_host(cycle(7)), {Face{5}}));
  CHECK(dual_pairs_isomorphic(v1, v2));
  const auto fc = dual_pair_of(UpperSet(h, {Face{0, 1}, Face{2, 3}}));
  CHECK_FALSE(dual_pairs_isomorphic(v1, fc));
  CHECK_FALSE(dual_pairs_isomorphic(a, fc));
  CHECK(dual_pairs_isomorphic(fc, dual_pair_of(UpperSet(h, {Face{1, 2}, Face{0, 3}}))));

  // many essential vertices: all twelve vertices of a 12-simplex side
  const auto big = make_host(complete_complex(13, 13));
  std::vector<Face> verts;
  for (Vertex v = 0; v < 12; ++v) verts.push_back(Face{v});
  const auto p = dual_pair_of(UpperSet(big, verts));
  CHECK(canonical_form(p).size() > 0);
  std::vector<Face> more = verts;
  more.push_back(Face{12});
  CHECK_THROWS_AS(canonical_form(dual_pair_of(UpperSet(big, more))), CapExceeded);
}

TEST_CASE("enumeration of dual pair classes") {
  const auto c4 = enumerate_dual_pairs(cycle(4));
  CHECK(c4.classes.size() == 4);
  CHECK(c4.complete);
  EnumerationCaps caps;
  caps.max_antichain = 6;
  const auto c6 = enumerate_dual_pairs(cycle(6), caps);
  CHECK(c6.classes.size() == 3);
  CHECK(c6.complete);
  const auto c6_default = enumerate_dual_pairs(cycle(6));
  CHECK(c6_default.classes.size() == 3);
  CHECK_FALSE(c6_default.complete);
  CHECK_THROWS_AS(enumerate_dual_pairs(crosspolytope_boundary(3), EnumerationCaps{3, 4, 10}),
                  CapExceeded);
}

TEST_CASE("cross-polytope conjecture checks") {
  for (std::size_t n = 4; n <= 7; ++n) {
    EnumerationCaps caps;
    caps.max_antichain = n;
    const auto r = check_crosspolytope_conjecture(cycle(n), caps);
    CHECK(r.holds);
    CHECK(r.complete);
  }
  const auto self = check_crosspolytope_conjecture(crosspolytope_boundary(3));
  CHECK(self.holds);
  CHECK_THROWS_AS(check_crosspolytope_conjecture(simplex_with_neighbors(2)), PreconditionError);
}

TEST_CASE("vertex flip preconditions") {
  const auto oct = crosspolytope_boundary(3);
  const auto fam = FacetFamily(oct, {*oct.facet_index(Face{0, 2, 4}), *oct.facet_index(Face{1, 2, 4})});
  const HostPtr host = lkcap_host(oct, 0, 2);
  const auto p = dual_pair_of(UpperSet(host, restrict_family(fam, 0, 2)));
  auto expect_condition = [&](auto&& fn, const std::string& name) {
    try {
      fn();
      FAIL("no error");
    } catch (const PreconditionError& e) {
      CHECK(e.condition() == name);
    }
  };
  expect_condition([&] { vertex_flip(fam, Face{0, 2}, 0, 2, p, 3); }, "essential");
  expect_condition([&] { vertex_flip(fam, Face{0, 1}, 0, 2, p, 4); }, "base face");
  const auto simplexish = simplex_with_neighbors(2);
  const auto sf = FacetFamily(simplexish, {0});
  expect_condition(
      [&] {
        vertex_flip(sf, Face{0, 1}, 0, 1, dual_pair_of(UpperSet(lkcap_host(simplexish, 0, 1), {})), 2);
      },
      "missing edge exchange");
  const auto disjoint =
      FacetFamily(oct, {*oct.facet_index(Face{0, 2, 4}), *oct.facet_index(Face{1, 3, 5})});
  expect_condition(
      [&] {
        vertex_flip(disjoint, Face{0, 2}, 0, 2, p, 4);
      },
      "base face");
}

TEST_CASE("vertex flip on the octahedron") {
  // A maximum family that is not a star, with base edge {0,2}.
  const auto oct = crosspolytope_boundary(3);
  std::vector<std::size_t> members;
  for (const Face& f : {Face{0, 2, 4}, Face{0, 2, 5}, Face{0, 3, 4}, Face{1, 2, 4}})
    members.push_back(*oct.facet_index(f));
  const FacetFamily fam(oct, members);
  REQUIRE(is_t_intersecting(fam, 1));
  const auto r = reduce_base_edge(fam, 0, 2);
  CHECK(r.family.size() >= fam.size());
  CHECK(is_t_intersecting(r.family, 1));
  for (const Face& f : r.family.facets()) CHECK(f.contains(r.base_vertex));
  CHECK((r.base_vertex == 0 || r.base_vertex == 2));
  CHECK(r.flips >= 1);

  const auto in_star = reduce_base_edge(star_facets(oct, Face{0}), 0, 2);
  CHECK(in_star.family == star_facets(oct, Face{0}));
  CHECK(in_star.base_vertex == 0);
}
