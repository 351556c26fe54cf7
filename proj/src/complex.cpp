#include "ekr/complex.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "ekr/error.hpp"

namespace ekr {

SimplicialComplex SimplicialComplex::from_facets(std::size_t n_vertices,
                                                 std::vector<Face> facets) {
  check_face_width(n_vertices);
  for (const Face& f : facets) {
    if (!f.empty() && f.back() >= n_vertices) {
      throw InvalidInput("vertex id " + std::to_string(f.back()) + " in facet " +
                         f.to_string() + " is out of range for " +
                         std::to_string(n_vertices) + " vertices");
    }
  }
  SimplicialComplex c;
  c.n_vertices_ = n_vertices;
  c.facets_ = maximal_antichain(std::move(facets));
  return c;
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (const Face& f : facets_) d = std::max(d, f.dim());
  return d;
}

bool SimplicialComplex::contains(const Face& face) const {
  for (const Face& f : facets_)
    if (face.is_subset_of(f)) return true;
  return false;
}

std::optional<std::size_t> SimplicialComplex::facet_index(const Face& face) const {
  auto it = std::lower_bound(facets_.begin(), facets_.end(), face);
  if (it == facets_.end() || *it != face) return std::nullopt;
  return static_cast<std::size_t>(it - facets_.begin());
}

Face SimplicialComplex::vertex_set() const {
  Face v;
  for (const Face& f : facets_) v |= f;
  return v;
}

FacetFamily::FacetFamily(const SimplicialComplex& host, std::vector<std::size_t> members)
    : host_(&host), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= host.facet_count()) {
    throw InvalidInput("facet index " + std::to_string(members_.back()) +
                       " is out of range for a complex with " +
                       std::to_string(host.facet_count()) + " facets");
  }
}

bool FacetFamily::contains(std::size_t facet_index) const {
  return std::binary_search(members_.begin(), members_.end(), facet_index);
}

std::vector<Face> FacetFamily::facets() const {
  std::vector<Face> out;
  out.reserve(members_.size());
  for (std::size_t i : members_) out.push_back(host_->facet(i));
  return out;
}

namespace {

void require_face(const SimplicialComplex& c, const Face& sigma, const char* op) {
  if (!c.contains(sigma)) {
    throw InvalidInput(std::string(op) + ": " + sigma.to_string() + " is not a face");
  }
}

void require_flag(const SimplicialComplex& c, const char* op) {
  if (!is_flag(c)) throw InvalidInput(std::string(op) + ": complex is not flag");
}

int require_pure(const SimplicialComplex& c, const char* op) {
  auto d = pure_dimension(c);
  if (!d) throw InvalidInput(std::string(op) + ": complex is not pure");
  return *d;
}

SimplicialComplex with_facets(std::size_t n_vertices, std::vector<Face> facets) {
  return SimplicialComplex::from_facets(n_vertices, std::move(facets));
}

// Ridge -> apex vertices, for a pure complex.
std::map<Face, std::vector<Vertex>> ridge_apexes(const SimplicialComplex& c) {
  std::map<Face, std::vector<Vertex>> out;
  for (const Face& f : c.facets()) {
    f.for_each([&](Vertex v) { out[f.without(v)].push_back(v); });
  }
  return out;
}

}  // namespace

std::vector<Face> faces_of_dim(const SimplicialComplex& c, int k) {
  if (k < -1 || c.empty()) return {};
  std::unordered_set<Face, FaceHash> seen;
  const auto size = static_cast<std::size_t>(k + 1);
  for (const Face& f : c.facets()) {
    if (f.size() < size) continue;
    for_each_subset_of_size(f, size, [&](const Face& s) { seen.insert(s); });
  }
  std::vector<Face> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Face> all_faces(const SimplicialComplex& c) {
  std::unordered_set<Face, FaceHash> seen;
  for (const Face& f : c.facets()) {
    for (std::size_t k = 0; k <= f.size(); ++k)
      for_each_subset_of_size(f, k, [&](const Face& s) { seen.insert(s); });
  }
  std::vector<Face> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Face> vertex_neighbors(const SimplicialComplex& c) {
  std::vector<Face> nbr(c.n_vertices());
  for (const Face& f : c.facets()) {
    f.for_each([&](Vertex v) { nbr[v] |= f.without(v); });
  }
  return nbr;
}

bool has_edge(const SimplicialComplex& c, Vertex u, Vertex v) {
  return u != v && c.contains(Face{u, v});
}

std::vector<Face> star(const SimplicialComplex& c, const Face& sigma) {
  require_face(c, sigma, "star");
  std::unordered_set<Face, FaceHash> seen;
  for (const Face& f : c.facets()) {
    if (!sigma.is_subset_of(f)) continue;
    const Face rest = f - sigma;
    for (std::size_t k = 0; k <= rest.size(); ++k)
      for_each_subset_of_size(rest, k, [&](const Face& s) { seen.insert(s | sigma); });
  }
  std::vector<Face> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

FacetFamily star_facets(const SimplicialComplex& c, const Face& sigma) {
  require_face(c, sigma, "star_facets");
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < c.facet_count(); ++i)
    if (sigma.is_subset_of(c.facet(i))) members.push_back(i);
  return FacetFamily(c, std::move(members));
}

SimplicialComplex link(const SimplicialComplex& c, const Face& sigma) {
  require_face(c, sigma, "link");
  std::vector<Face> facets;
  for (const Face& f : c.facets())
    if (sigma.is_subset_of(f)) facets.push_back(f - sigma);
  return with_facets(c.n_vertices(), std::move(facets));
}

SimplicialComplex lkcap(const SimplicialComplex& c, Vertex a, Vertex b) {
  const Face verts = c.vertex_set();
  if (a == b) throw InvalidInput("lkcap: vertices must be distinct");
  if (a >= c.n_vertices() || b >= c.n_vertices() || !verts.contains(a) || !verts.contains(b)) {
    throw InvalidInput("lkcap: " + std::to_string(a) + " and " + std::to_string(b) +
                       " must both be vertices of the complex");
  }
  const auto nbr = vertex_neighbors(c);
  return induced_subcomplex(c, nbr[a] & nbr[b]);
}

SimplicialComplex skeleton(const SimplicialComplex& c, int k) {
  if (k < -1 || k > c.dim()) {
    throw InvalidInput("skeleton: dimension " + std::to_string(k) + " outside [-1, " +
                       std::to_string(c.dim()) + "]");
  }
  const auto size = static_cast<std::size_t>(k + 1);
  std::vector<Face> facets;
  for (const Face& f : c.facets()) {
    if (f.size() <= size) {
      facets.push_back(f);
    } else {
      for_each_subset_of_size(f, size, [&](const Face& s) { facets.push_back(s); });
    }
  }
  return with_facets(c.n_vertices(), std::move(facets));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& c, const Face& w) {
  if (c.empty()) return SimplicialComplex::from_facets(c.n_vertices(), {});
  std::vector<Face> facets;
  facets.reserve(c.facet_count());
  for (const Face& f : c.facets()) facets.push_back(f & w);
  return with_facets(c.n_vertices(), std::move(facets));
}

bool is_induced(const SimplicialComplex& c, const SimplicialComplex& sub) {
  if (sub.n_vertices() != c.n_vertices()) return false;
  return induced_subcomplex(c, sub.vertex_set()) == sub;
}

SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
  const std::size_t n = std::max(a.n_vertices(), b.n_vertices());
  std::vector<Face> facets;
  for (const Face& f : a.facets())
    for (const Face& g : b.facets()) facets.push_back(f & g);
  return with_facets(n, std::move(facets));
}

std::optional<int> pure_dimension(const SimplicialComplex& c) {
  if (c.empty()) return std::nullopt;
  const std::size_t size = c.facets().front().size();
  for (const Face& f : c.facets())
    if (f.size() != size) return std::nullopt;
  return static_cast<int>(size) - 1;
}

namespace {

// Bron–Kerbosch with Tomita pivoting; returns false as soon as a maximal
// clique that is not a face is found.
bool all_maximal_cliques_are_faces(const SimplicialComplex& c, const std::vector<Face>& nbr,
                                   Face r, Face p, Face x) {
  if (p.empty() && x.empty()) return c.contains(r);
  Vertex pivot = 0;
  std::size_t best = 0;
  bool have_pivot = false;
  (p | x).for_each([&](Vertex u) {
    const std::size_t k = (p & nbr[u]).size();
    if (!have_pivot || k > best) {
      pivot = u;
      best = k;
      have_pivot = true;
    }
  });
  const Face candidates = p - nbr[pivot];
  bool ok = true;
  candidates.for_each([&](Vertex v) {
    if (!ok) return;
    ok = all_maximal_cliques_are_faces(c, nbr, r.with(v), p & nbr[v], x & nbr[v]);
    p.erase(v);
    x.insert(v);
  });
  return ok;
}

}  // namespace

bool is_flag(const SimplicialComplex& c) {
  if (c.empty()) return true;
  const auto nbr = vertex_neighbors(c);
  return all_maximal_cliques_are_faces(c, nbr, Face{}, c.vertex_set(), Face{});
}

bool is_without_boundary(const SimplicialComplex& c) {
  require_pure(c, "is_without_boundary");
  for (const auto& [ridge, apexes] : ridge_apexes(c))
    if (apexes.size() < 2) return false;
  return true;
}

bool is_pseudo_manifold(const SimplicialComplex& c) {
  require_pure(c, "is_pseudo_manifold");
  for (const auto& [ridge, apexes] : ridge_apexes(c))
    if (apexes.size() != 2) return false;
  return true;
}

ExchangeCheck missing_edge_exchange(const SimplicialComplex& c) {
  require_pure(c, "missing_edge_exchange");
  const auto apexes = ridge_apexes(c);
  const auto nbr = vertex_neighbors(c);
  for (const Face& f : c.facets()) {
    std::optional<ExchangeFailure> failure;
    f.for_each([&](Vertex v) {
      if (failure) return;
      const Face ridge = f.without(v);
      const auto& candidates = apexes.at(ridge);
      const bool ok = std::any_of(candidates.begin(), candidates.end(), [&](Vertex u) {
        return u != v && !nbr[v].contains(u);
      });
      if (!ok) failure = ExchangeFailure{ridge, v};
    });
    if (failure) return ExchangeCheck{false, failure};
  }
  return ExchangeCheck{};
}

Contraction contract(const SimplicialComplex& c, const Face& sigma) {
  require_face(c, sigma, "contract");
  if (sigma.empty()) throw InvalidInput("contract: cannot contract the empty face");
  require_flag(c, "contract");
  const Vertex fresh = sigma.front();
  std::vector<Face> images;
  std::vector<Face> facets;
  for (const Face& f : c.facets()) {
    if (f.intersects(sigma)) {
      Face image = (f - sigma).with(fresh);
      images.push_back(image);
      facets.push_back(image);
    } else {
      facets.push_back(f);
    }
  }
  const std::size_t before = images.size();
  canonicalize(images);
  if (images.size() != before) {
    throw std::logic_error("contract: two facets collapsed onto the same simplex in a flag complex");
  }
  return Contraction{with_facets(c.n_vertices(), std::move(facets)), fresh};
}

SimplicialComplex outerlink(const SimplicialComplex& c, const Face& sigma) {
  require_face(c, sigma, "outerlink");
  require_flag(c, "outerlink");
  std::vector<Face> facets;
  for (const Face& f : c.facets())
    if (f.intersects(sigma)) facets.push_back(f - sigma);
  SimplicialComplex out = with_facets(c.n_vertices(), std::move(facets));
  if (!sigma.empty()) {
    const Contraction q = contract(c, sigma);
    if (link(q.complex, Face{q.new_vertex}) != out) {
      throw std::logic_error("outerlink differs from the link of the contracted vertex");
    }
  }
  return out;
}

SimplicialComplex sector(const SimplicialComplex& c, const Face& sigma, Vertex a) {
  require_face(c, sigma, "sector");
  if (!sigma.contains(a)) {
    throw InvalidInput("sector: vertex " + std::to_string(a) + " is not in " + sigma.to_string());
  }
  require_flag(c, "sector");
  std::vector<Face> facets;
  for (const Face& f : c.facets())
    if (f.contains(a)) facets.push_back(f - sigma);
  return with_facets(c.n_vertices(), std::move(facets));
}

SimplicialComplex sector_intersection(const SimplicialComplex& c, const Face& sigma,
                                      const Face& tau) {
  if (tau.empty() || !tau.is_subset_of(sigma)) {
    throw InvalidInput("sector_intersection: " + tau.to_string() +
                       " must be a nonempty subset of " + sigma.to_string());
  }
  std::optional<SimplicialComplex> acc;
  tau.for_each([&](Vertex a) {
    SimplicialComplex s = sector(c, sigma, a);
    acc = acc ? intersection(*acc, s) : std::move(s);
  });
  return *acc;
}

SimplicialComplex join(const SimplicialComplex& c, const SimplicialComplex& d) {
  const std::size_t offset = c.n_vertices();
  const std::size_t n = offset + d.n_vertices();
  check_face_width(n);
  std::vector<Face> shifted;
  shifted.reserve(d.facet_count());
  for (const Face& g : d.facets()) {
    Face s;
    g.for_each([&](Vertex v) { s.insert(static_cast<Vertex>(v + offset)); });
    shifted.push_back(s);
  }
  std::vector<Face> facets;
  facets.reserve(c.facet_count() * d.facet_count());
  for (const Face& f : c.facets())
    for (const Face& s : shifted) facets.push_back(f | s);
  return with_facets(n, std::move(facets));
}

}  // namespace ekr
