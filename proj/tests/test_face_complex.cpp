#include <doctest.h>

#include <algorithm>

#include "ekr/complex.hpp"
#include "ekr/error.hpp"
#include "ekr/generators.hpp"
#include "oracles.hpp"

using namespace ekr;

namespace {

SimplicialComplex octahedron() { return crosspolytope_boundary(3); }

oracle::Family as_family(const std::vector<Face>& fs) {
  oracle::Family out;
  for (const Face& f : fs) out.insert(oracle::to_set(f));
  return out;
}

}  // namespace

TEST_CASE("face basics and canonical order") {
  Face f{3, 1, 2};
  CHECK(f.size() == 3);
  CHECK(f.dim() == 2);
  CHECK(f.to_string() == "{1,2,3}");
  CHECK(Face{}.dim() == -1);
  CHECK(Face{}.empty());
  CHECK(Face{0, 1} < Face{0, 1, 2});
  CHECK(Face{0, 1, 2} < Face{0, 2});
  CHECK(Face{0, 2} < Face{1});
  CHECK(Face{} < Face{0});
  CHECK(Face{5} < Face{200});
  CHECK(Face{0, 200} < Face{1});
  CHECK((Face{1, 2} & Face{2, 3}) == Face{2});
  CHECK((Face{1, 2} | Face{2, 3}) == Face{1, 2, 3});
  CHECK((Face{1, 2, 3} - Face{2}) == Face{1, 3});
  CHECK(Face{1, 2}.is_proper_subset_of(Face{1, 2, 3}));
  CHECK_FALSE(Face{1, 2}.is_proper_subset_of(Face{1, 2}));
  CHECK(Face{130, 7}.front() == 7);
  CHECK(Face{130, 7}.back() == 130);
  CHECK_THROWS_AS(Face{}.with(256), CapExceeded);
}

TEST_CASE("face order agrees with vertex-list order") {
  std::vector<Face> fs;
  for (unsigned mask = 0; mask < (1U << 7); ++mask) {
    Face f;
    for (Vertex v = 0; v < 7; ++v)
      if ((mask >> v) & 1U) f.insert(v * 37 % 200);
    fs.push_back(f);
  }
  for (const Face& a : fs)
    for (const Face& b : fs) CHECK((a < b) == (a.vertices() < b.vertices()));
}

TEST_CASE("antichain helpers") {
  auto mx = maximal_antichain({Face{0, 1}, Face{0, 1, 2}, Face{3}, Face{0, 1}});
  CHECK(mx == std::vector<Face>{Face{0, 1, 2}, Face{3}});
  auto mn = minimal_antichain({Face{0, 1}, Face{0, 1, 2}, Face{3}, Face{0}});
  CHECK(mn == std::vector<Face>{Face{0}, Face{3}});
  std::size_t count = 0;
  for_each_subset_of_size(Face{1, 2, 3, 4, 5}, 2, [&](const Face& s) {
    CHECK(s.size() == 2);
    ++count;
  });
  CHECK(count == 10);
}

TEST_CASE("from_facets") {
  auto hollow = SimplicialComplex::from_facets(3, {Face{0, 1}, Face{1, 2}, Face{0, 2}});
  CHECK(hollow.facet_count() == 3);
  CHECK(hollow.facets().front() == Face{0, 1});
  auto reduced = SimplicialComplex::from_facets(3, {Face{0, 1, 2}, Face{0, 1}});
  CHECK(reduced.facets() == std::vector<Face>{Face{0, 1, 2}});
  auto two_edges = SimplicialComplex::from_facets(4, {Face{0, 1}, Face{2, 3}});
  CHECK(pure_dimension(two_edges) == 1);
  CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {Face{0, 3}}), InvalidInput);
  CHECK(SimplicialComplex::from_facets(2, {Face{}}).dim() == -1);
  CHECK(SimplicialComplex{}.dim() == -1);
  CHECK(SimplicialComplex{}.empty());
  // idempotent canonical form
  CHECK(SimplicialComplex::from_facets(3, reduced.facets()) == reduced);
  CHECK(reduced.facet_index(Face{0, 1, 2}) == 0U);
  CHECK_FALSE(reduced.facet_index(Face{0, 1}).has_value());
}

TEST_CASE("faces_of_dim against subset enumeration") {
  const auto oct = octahedron();
  CHECK(faces_of_dim(oct, 0).size() == 6);
  CHECK(faces_of_dim(oct, 1).size() == 12);
  CHECK(faces_of_dim(oct, -1) == std::vector<Face>{Face{}});
  CHECK(faces_of_dim(oct, 3).empty());
  CHECK(faces_of_dim(complete_complex(4, 2), 1).size() == 6);
  const auto faces = oracle::all_faces(oracle::facets_of(oct));
  for (int k = -1; k <= 2; ++k) {
    std::size_t expect = 0;
    for (const auto& s : faces) expect += static_cast<int>(s.size()) - 1 == k;
    CHECK(faces_of_dim(oct, k).size() == expect);
  }
  CHECK(as_family(all_faces(oct)) == faces);
}

TEST_CASE("star and link") {
  const auto oct = octahedron();
  CHECK(star_facets(oct, Face{0}).size() == 4);
  CHECK(star_facets(oct, oct.facet(3)).members() == std::vector<std::size_t>{3});
  CHECK(star(oct, Face{0, 2}).size() == 3);
  const auto lk = link(oct, Face{0});
  CHECK(lk.facets() ==
        std::vector<Face>{Face{2, 4}, Face{2, 5}, Face{3, 4}, Face{3, 5}});
  CHECK(lk.n_vertices() == oct.n_vertices());
  CHECK_THROWS_AS(link(oct, Face{0, 1}), InvalidInput);
  CHECK_THROWS_AS(star(oct, Face{0, 1}), InvalidInput);

  const auto k63 = complete_complex(6, 3);
  const auto lk63 = link(k63, Face{5});
  CHECK(lk63 == SimplicialComplex::from_facets(6, complete_complex(5, 2).facets()));
}

TEST_CASE("lkcap on the octahedron") {
  const auto oct = octahedron();
  const auto antipodal = lkcap(oct, 0, 1);
  CHECK(antipodal.facets() ==
        std::vector<Face>{Face{2, 4}, Face{2, 5}, Face{3, 4}, Face{3, 5}});
  const auto adjacent = lkcap(oct, 0, 2);
  CHECK(adjacent.facets() == std::vector<Face>{Face{4}, Face{5}});
  CHECK(adjacent == link(oct, Face{0, 2}));
  CHECK_THROWS_AS(lkcap(oct, 0, 0), InvalidInput);
  CHECK_THROWS_AS(lkcap(oct, 0, 9), InvalidInput);

  // brute force: faces of C with all vertices adjacent to both a and b
  const auto faces = oracle::all_faces(oracle::facets_of(oct));
  for (Vertex a = 0; a < 6; ++a)
    for (Vertex b = 0; b < 6; ++b) {
      if (a == b) continue;
      oracle::Family expect;
      for (const auto& s : faces) {
        bool ok = true;
        for (int x : s) {
          ok = ok && faces.count(oracle::Set{std::min<int>(a, x), std::max<int>(a, x)}) && x != int(a) &&
               faces.count(oracle::Set{std::min<int>(b, x), std::max<int>(b, x)}) && x != int(b);
        }
        if (ok) expect.insert(s);
      }
      CHECK(as_family(all_faces(lkcap(oct, a, b))) == expect);
    }
}

TEST_CASE("lkcap equals link of an edge in flag complexes") {
  const auto c = kpartite_clique_complex({3, 3, 3, 3});
  for (const Face& e : faces_of_dim(c, 1)) {
    const auto vs = e.vertices();
    CHECK(lkcap(c, vs[0], vs[1]) == link(c, e));
  }
}

TEST_CASE("skeleton") {
  CHECK(skeleton(complete_complex(5, 3), 1) == complete_complex(5, 2));
  const auto oct = octahedron();
  CHECK(skeleton(oct, 1).facet_count() == 12);
  CHECK(skeleton(oct, 2) == oct);
  CHECK_THROWS_AS(skeleton(oct, 3), InvalidInput);
}

TEST_CASE("purity, flagness, boundary") {
  const auto oct = octahedron();
  CHECK(pure_dimension(oct) == 2);
  auto mixed = SimplicialComplex::from_facets(5, {Face{0, 1, 2}, Face{3, 4}});
  CHECK_FALSE(is_pure(mixed));
  CHECK(is_pure(complete_complex(6, 3)));

  auto hollow = SimplicialComplex::from_facets(3, {Face{0, 1}, Face{1, 2}, Face{0, 2}});
  CHECK_FALSE(is_flag(hollow));
  CHECK(is_flag(oct));
  CHECK_FALSE(is_flag(cycle(3)));
  CHECK(is_flag(cycle(4)));
  CHECK_FALSE(is_flag(complete_complex(4, 3)));
  CHECK(is_flag(complete_complex(4, 4)));

  CHECK(is_without_boundary(oct));
  CHECK_FALSE(is_without_boundary(complete_complex(3, 3)));
  CHECK_FALSE(is_without_boundary(simplex_with_neighbors(2)));
  CHECK_THROWS_AS(is_without_boundary(mixed), InvalidInput);

  CHECK(is_pseudo_manifold(oct));
  CHECK_FALSE(is_pseudo_manifold(complete_complex(4, 2)));
  auto two_triangles = SimplicialComplex::from_facets(4, {Face{0, 1, 2}, Face{1, 2, 3}});
  CHECK_FALSE(is_pseudo_manifold(two_triangles));
  CHECK_THROWS_AS(is_pseudo_manifold(mixed), InvalidInput);
}

TEST_CASE("missing edge exchange") {
  CHECK(has_missing_edge_exchange(octahedron()));
  const auto simplex = complete_complex(3, 3);
  const auto r = missing_edge_exchange(simplex);
  CHECK_FALSE(r.holds);
  REQUIRE(r.first_failure.has_value());
  CHECK(r.first_failure->ridge == Face{1, 2});
  CHECK(r.first_failure->apex == 0);
  CHECK_FALSE(has_missing_edge_exchange(simplex_with_neighbors(2)));
  CHECK(has_missing_edge_exchange(skeleton(crosspolytope_boundary(4), 1)));
}

TEST_CASE("contraction and outerlink") {
  const auto oct = octahedron();
  const auto q = contract(oct, Face{0, 2});
  CHECK(q.new_vertex == 0);
  CHECK(q.complex.vertex_set().size() == 5);
  CHECK(link(q.complex, Face{q.new_vertex}) == outerlink(oct, Face{0, 2}));
  CHECK(contract(oct, Face{3}).complex == oct);
  auto hollow = SimplicialComplex::from_facets(3, {Face{0, 1}, Face{1, 2}, Face{0, 2}});
  CHECK_THROWS_AS(contract(hollow, Face{0, 1}), InvalidInput);
  CHECK_THROWS_AS(contract(oct, Face{0, 1}), InvalidInput);
  CHECK(outerlink(oct, Face{4}) == link(oct, Face{4}));

  // every face of the octahedron against a brute-force outerlink
  const auto faces = oracle::all_faces(oracle::facets_of(oct));
  for (const Face& sigma : all_faces(oct)) {
    if (sigma.empty()) continue;
    const auto s = oracle::to_set(sigma);
    oracle::Family expect;
    for (const auto& f : faces) {
      if (oracle::intersects(f, s)) continue;
      for (int v : s) {
        auto g = f;
        g.push_back(v);
        std::sort(g.begin(), g.end());
        if (faces.count(g)) {
          expect.insert(f);
          break;
        }
      }
    }
    CHECK(as_family(all_faces(outerlink(oct, sigma))) == expect);
  }
}

TEST_CASE("sectors on the octahedron") {
  const auto oct = octahedron();
  const Face sigma{0, 2};
  const auto s0 = sector(oct, sigma, 0);
  const auto s2 = sector(oct, sigma, 2);
  CHECK(s0.facets() == std::vector<Face>{Face{3, 4}, Face{3, 5}});
  CHECK(s2.facets() == std::vector<Face>{Face{1, 4}, Face{1, 5}});
  auto ol = outerlink(oct, sigma).facets();
  auto both = s0.facets();
  both.insert(both.end(), s2.facets().begin(), s2.facets().end());
  canonicalize(both);
  CHECK(both == ol);
  CHECK(sector_intersection(oct, sigma, Face{0, 2}).facets() == std::vector<Face>{Face{4}, Face{5}});
  CHECK(is_induced(oct, s0));
  CHECK_THROWS_AS(sector(oct, sigma, 4), InvalidInput);
  CHECK_THROWS_AS(sector_intersection(oct, sigma, Face{}), InvalidInput);
}

TEST_CASE("join and induced subcomplexes") {
  const auto oct = octahedron();
  const auto j = join(oct, oct);
  CHECK(j.facet_count() == 64);
  CHECK(j == crosspolytope_boundary(6));
  const auto two_points = SimplicialComplex::from_facets(2, {Face{0}, Face{1}});
  CHECK(join(cycle(4), two_points) == suspension(cycle(4)));
  CHECK(join(join(cycle(5), two_points), two_points).facet_count() ==
        double_suspension(cycle(5)).facet_count());

  Face all;
  for (Vertex v = 0; v < 6; ++v) all.insert(v);
  CHECK(induced_subcomplex(oct, all) == oct);
  CHECK(induced_subcomplex(oct, Face{}).facets() == std::vector<Face>{Face{}});
  CHECK(is_flag(induced_subcomplex(oct, Face{0, 1, 2, 4})));
  CHECK(is_induced(oct, induced_subcomplex(oct, Face{0, 2, 4})));
  CHECK_FALSE(is_induced(oct, SimplicialComplex::from_facets(6, {Face{0, 2}, Face{2, 4}})));
}

TEST_CASE("intersection of complexes") {
  const auto a = SimplicialComplex::from_facets(4, {Face{0, 1, 2}, Face{2, 3}});
  const auto b = SimplicialComplex::from_facets(4, {Face{1, 2, 3}});
  CHECK(intersection(a, b).facets() == std::vector<Face>{Face{1, 2}, Face{2, 3}});
}
