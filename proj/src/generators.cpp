#include "ekr/generators.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "ekr/error.hpp"

namespace ekr {

namespace {

Face face_of(std::initializer_list<std::size_t> vs) {
  Face f;
  for (std::size_t v : vs) f.insert(static_cast<Vertex>(v));
  return f;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

}  // namespace

SimplicialComplex complete_complex(std::size_t n, std::size_t r) {
  require(r >= 1 && r <= n, "complete_complex: need 1 <= r <= n");
  check_face_width(n);
  Face all;
  for (std::size_t v = 0; v < n; ++v) all.insert(static_cast<Vertex>(v));
  std::vector<Face> facets;
  for_each_subset_of_size(all, r, [&](const Face& f) { facets.push_back(f); });
  return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex crosspolytope_boundary(std::size_t d) {
  require(d >= 1, "crosspolytope_boundary: need d >= 1");
  return kpartite_clique_complex(std::vector<std::size_t>(d, 2));
}

SimplicialComplex cycle(std::size_t n) {
  require(n >= 3, "cycle: need n >= 3");
  check_face_width(n);
  std::vector<Face> facets;
  for (std::size_t i = 0; i < n; ++i) facets.push_back(face_of({i, (i + 1) % n}));
  return SimplicialComplex::from_facets(n, std::move(facets));
}

bool diagonals_cross(const Diagonal& a, const Diagonal& b) {
  auto strictly_inside = [&](std::size_t x) { return a.first < x && x < a.second; };
  if (a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second)
    return false;
  return strictly_inside(b.first) != strictly_inside(b.second);
}

namespace {

using DiagonalSet = std::vector<Diagonal>;

// All (m+2)-angulations of the sub-polygon on corners lo..hi, where lo-hi is
// the base edge. Each is returned as the list of diagonals strictly inside.
class DissectionEnumerator {
 public:
  explicit DissectionEnumerator(std::size_t m) : m_(m) {}

  const std::vector<DiagonalSet>& solve(std::size_t lo, std::size_t hi) {
    auto key = std::make_pair(lo, hi);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<DiagonalSet> out;
    if (hi - lo == 1) {
      out.push_back({});
    } else {
      DiagonalSet cells;
      choose(lo, hi, lo, 0, cells, out);
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  // Picks corners q_1 < ... < q_m between lo and hi for the polygon on the
  // base edge, each gap congruent to 1 mod m.
  void choose(std::size_t lo, std::size_t hi, std::size_t prev, std::size_t picked,
              DiagonalSet& gaps, std::vector<DiagonalSet>& out) {
    if (picked == m_) {
      if ((hi - prev) % m_ != 1 % m_) return;
      gaps.push_back({prev, hi});
      combine(gaps, 0, {}, out);
      gaps.pop_back();
      return;
    }
    for (std::size_t q = prev + 1; q < hi; q += m_) {
      gaps.push_back({prev, q});
      choose(lo, hi, q, picked + 1, gaps, out);
      gaps.pop_back();
    }
  }

  void combine(const DiagonalSet& gaps, std::size_t i, DiagonalSet acc,
               std::vector<DiagonalSet>& out) {
    if (i == gaps.size()) {
      out.push_back(std::move(acc));
      return;
    }
    const auto [a, b] = gaps[i];
    const std::vector<DiagonalSet> sub = solve(a, b);
    for (const DiagonalSet& s : sub) {
      DiagonalSet next = acc;
      if (b - a > 1) next.push_back({a, b});
      next.insert(next.end(), s.begin(), s.end());
      combine(gaps, i + 1, std::move(next), out);
    }
  }

  std::size_t m_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<DiagonalSet>> memo_;
};

std::vector<DiagonalSet> all_dissections(std::size_t n, std::size_t m) {
  require(n >= 2 && m >= 1, "dissection_complex: need n >= 2 and m >= 1");
  const std::size_t corners = m * n + 2;
  DissectionEnumerator e(m);
  return e.solve(0, corners - 1);
}

}  // namespace

std::vector<Diagonal> dissection_diagonals(std::size_t n, std::size_t m) {
  std::map<Diagonal, bool> used;
  for (const auto& d : all_dissections(n, m))
    for (const Diagonal& g : d) used[g] = true;
  std::vector<Diagonal> out;
  for (const auto& [g, _] : used) out.push_back(g);
  return out;
}

SimplicialComplex dissection_complex(std::size_t n, std::size_t m) {
  const auto dissections = all_dissections(n, m);
  std::map<Diagonal, Vertex> id;
  for (const auto& d : dissections)
    for (const Diagonal& g : d) id[g] = 0;
  Vertex next = 0;
  for (auto& [g, v] : id) v = next++;
  check_face_width(id.size());

  std::vector<Face> facets;
  facets.reserve(dissections.size());
  for (const auto& d : dissections) {
    if (d.size() != n - 1) throw std::logic_error("dissection with wrong diagonal count");
    Face f;
    for (const Diagonal& g : d) f.insert(id.at(g));
    facets.push_back(f);
  }
  const std::size_t count = facets.size();
  SimplicialComplex c = SimplicialComplex::from_facets(id.size(), std::move(facets));
  if (c.facet_count() != count) throw std::logic_error("duplicate dissections");
  if (pure_dimension(c) != static_cast<int>(n) - 2 || !is_flag(c) || !is_without_boundary(c))
    throw std::logic_error("dissection complex fails flag/pure/without-boundary");
  return c;
}

SimplicialComplex kpartite_clique_complex(const std::vector<std::size_t>& part_sizes) {
  require(part_sizes.size() >= 1, "kpartite_clique_complex: need at least one part");
  std::size_t n = 0;
  for (std::size_t s : part_sizes) {
    require(s >= 1, "kpartite_clique_complex: empty part");
    n += s;
  }
  check_face_width(n);
  std::vector<Face> facets{Face{}};
  std::size_t offset = 0;
  for (std::size_t s : part_sizes) {
    std::vector<Face> grown;
    grown.reserve(facets.size() * s);
    for (const Face& f : facets)
      for (std::size_t j = 0; j < s; ++j) grown.push_back(f.with(static_cast<Vertex>(offset + j)));
    facets = std::move(grown);
    offset += s;
  }
  return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex simplex_with_neighbors(std::size_t d) {
  require(d >= 2, "simplex_with_neighbors: need d >= 2");
  const std::size_t n = 2 * d + 2;
  check_face_width(n);
  Face central;
  for (std::size_t v = 0; v <= d; ++v) central.insert(static_cast<Vertex>(v));
  std::vector<Face> facets{central};
  for (std::size_t i = 0; i <= d; ++i)
    facets.push_back(central.without(static_cast<Vertex>(i)).with(static_cast<Vertex>(d + 1 + i)));
  return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex fattened_bipyramid(std::size_t d, std::size_t k) {
  require(d >= 3 && k >= 1, "fattened_bipyramid: need d >= 3 and k >= 1");
  const std::size_t n = d + 2 + d * k;
  check_face_width(n);
  Face sigma;
  for (std::size_t v = 0; v < d; ++v) sigma.insert(static_cast<Vertex>(v));
  const auto p = static_cast<Vertex>(d);
  const auto q = static_cast<Vertex>(d + 1);
  std::vector<Face> facets{sigma.with(p), sigma.with(q)};
  auto fresh = static_cast<Vertex>(d + 2);
  for (std::size_t i = 0; i < d; ++i) {
    const Face tau = sigma.without(static_cast<Vertex>(i));
    Vertex prev = (i % 2 == 0) ? q : p;
    for (std::size_t j = 0; j < k; ++j) {
      facets.push_back(tau.with(prev).with(fresh));
      prev = fresh++;
    }
  }
  SimplicialComplex c = SimplicialComplex::from_facets(n, std::move(facets));
  if (!is_flag(c)) throw std::logic_error("fattened_bipyramid is not flag");
  return c;
}

SimplicialComplex suspension(const SimplicialComplex& c) {
  return join(c, SimplicialComplex::from_facets(2, {Face{0}, Face{1}}));
}

SimplicialComplex double_suspension(const SimplicialComplex& c) {
  return join(c, crosspolytope_boundary(2));
}

SimplicialComplex icosahedron() {
  std::vector<Face> facets;
  for (std::size_t i = 0; i < 5; ++i) {
    const std::size_t u = 1 + i, u1 = 1 + (i + 1) % 5;
    const std::size_t l = 6 + i, l1 = 6 + (i + 1) % 5;
    facets.push_back(face_of({0, u, u1}));
    facets.push_back(face_of({11, l, l1}));
    facets.push_back(face_of({u, u1, l}));
    facets.push_back(face_of({l, l1, u1}));
  }
  return SimplicialComplex::from_facets(12, std::move(facets));
}

}  // namespace ekr
