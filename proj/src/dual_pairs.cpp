#include "ekr/dual_pairs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "ekr/ekr_engine.hpp"
#include "ekr/error.hpp"
#include "ekr/generators.hpp"

namespace ekr {

// --- upper sets -------------------------------------------------------------

UpperSet::UpperSet(HostPtr host, std::vector<Face> generators) : host_(std::move(host)) {
  if (!host_) throw InvalidInput("upper set without a host complex");
  for (const Face& g : generators)
    if (!host_->contains(g))
      throw InvalidInput("upper set generator " + g.to_string() + " is not a face of the host");
  minimal_ = minimal_antichain(std::move(generators));
}

bool UpperSet::contains(const Face& sigma) const {
  if (!host_->contains(sigma)) return false;
  for (const Face& m : minimal_)
    if (m.is_subset_of(sigma)) return true;
  return false;
}

Face UpperSet::essential_vertices() const {
  Face e;
  for (const Face& m : minimal_) e |= m;
  return e;
}

bool operator==(const UpperSet& a, const UpperSet& b) {
  return (a.host_ == b.host_ || *a.host_ == *b.host_) && a.minimal_ == b.minimal_;
}

UpperSet upper_closure(HostPtr host, std::vector<Face> generators) {
  return UpperSet(std::move(host), std::move(generators));
}

UpperSet intersecting_dual(const UpperSet& u) {
  const SimplicialComplex& host = u.host();
  if (host.empty()) return UpperSet(u.host_ptr(), {});
  std::vector<Face> transversals{Face{}};
  for (const Face& s : u.minimal_elements()) {
    std::vector<Face> next;
    for (const Face& t : transversals) {
      if (t.intersects(s)) {
        next.push_back(t);
        continue;
      }
      s.for_each([&](Vertex x) {
        Face grown = t.with(x);
        if (host.contains(grown)) next.push_back(grown);
      });
    }
    transversals = minimal_antichain(std::move(next));
    if (transversals.empty()) break;
  }
  return UpperSet(u.host_ptr(), std::move(transversals));
}

// --- dual pairs -------------------------------------------------------------

DualPair::DualPair(UpperSet u1, UpperSet u2) : u1_(std::move(u1)), u2_(std::move(u2)) {
  if (!(u1_.host() == u2_.host()))
    throw PreconditionError("dual pair", "sides live on different hosts");
  if (!(intersecting_dual(u1_) == u2_) || !(intersecting_dual(u2_) == u1_))
    throw PreconditionError("dual pair", "sides are not intersecting duals of each other");
}

DualPair dual_pair_of(const UpperSet& u) {
  UpperSet star = intersecting_dual(u);
  UpperSet star2 = intersecting_dual(star);
  return DualPair(std::move(star2), std::move(star));
}

namespace {

Face lkcap_vertices(const SimplicialComplex& c, Vertex a, Vertex b) {
  const auto nbr = vertex_neighbors(c);
  return nbr.at(a) & nbr.at(b);
}

void require_vertices(const SimplicialComplex& c, Vertex a, Vertex b) {
  if (a == b) throw PreconditionError("distinct", "a and b must differ");
  const Face v = c.vertex_set();
  if (a >= c.n_vertices() || b >= c.n_vertices() || !v.contains(a) || !v.contains(b))
    throw PreconditionError("vertices", std::to_string(a) + " and " + std::to_string(b) +
                                            " must be vertices of the complex");
}

}  // namespace

HostPtr lkcap_host(const SimplicialComplex& c, Vertex a, Vertex b) {
  return make_host(lkcap(c, a, b));
}

std::vector<Face> restrict_family(const FacetFamily& family, Vertex a, Vertex b) {
  const SimplicialComplex& c = family.host();
  require_vertices(c, a, b);
  const Face w = lkcap_vertices(c, a, b);
  std::vector<Face> out;
  for (const Face& f : family.facets())
    if (f.contains(a) && !f.contains(b)) out.push_back(f & w);
  canonicalize(out);
  return out;
}

bool supports_at(const DualPair& p, const FacetFamily& family, Vertex a, Vertex b) {
  if (!(p.host() == lkcap(family.host(), a, b)))
    throw PreconditionError("host", "the pair does not live on lkcap(C, a, b)");
  for (const Face& f : restrict_family(family, a, b))
    if (!p.u1().contains(f)) return false;
  for (const Face& f : restrict_family(family, b, a))
    if (!p.u2().contains(f)) return false;
  return true;
}

// --- classification ---------------------------------------------------------

const char* to_string(DualPairType t) {
  switch (t) {
    case DualPairType::Trivial: return "trivial";
    case DualPairType::Vertex: return "vertex";
    case DualPairType::VertexPlusEdge: return "vertex_plus_edge";
    case DualPairType::FourCycle: return "four_cycle";
  }
  return "?";
}

namespace {

bool all_of_size(const std::vector<Face>& fs, std::size_t k) {
  return std::all_of(fs.begin(), fs.end(), [&](const Face& f) { return f.size() == k; });
}

std::optional<Classification> classify_oriented(const std::vector<Face>& s1,
                                                const std::vector<Face>& s2) {
  if (s1.empty() && s2.size() == 1 && s2[0].empty())
    return Classification{DualPairType::Trivial, {}};
  if (s1.size() == 1 && s2.size() == 1 && s1[0].size() == 1 && s1 == s2)
    return Classification{DualPairType::Vertex, {s1[0].front()}};
  if (s1.size() == 2 && all_of_size(s1, 1) && s2.size() == 1 && s2[0] == (s1[0] | s1[1]))
    return Classification{DualPairType::VertexPlusEdge, {s1[0].front(), s1[1].front()}};
  if (s1.size() == 2 && s2.size() == 2 && all_of_size(s1, 2) && all_of_size(s2, 2) &&
      !s1[0].intersects(s1[1]) && !s2[0].intersects(s2[1]) &&
      (s1[0] | s1[1]) == (s2[0] | s2[1])) {
    // s1 = {uv, wx}; v is the vertex of uv sharing an edge of s2 with w.
    const std::vector<Vertex> e = s1[0].vertices();
    const std::vector<Vertex> f = s1[1].vertices();
    for (Vertex u : e) {
      const Vertex v = u == e[0] ? e[1] : e[0];
      for (Vertex w : f) {
        const Vertex x = w == f[0] ? f[1] : f[0];
        const std::vector<Face> other = {Face{v, w}, Face{u, x}};
        std::vector<Face> sorted = other;
        canonicalize(sorted);
        if (sorted == s2) return Classification{DualPairType::FourCycle, {u, v, w, x}};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Classification classify_1d(const DualPair& p) {
  const SimplicialComplex& h = p.host();
  if (h.dim() > 1) throw PreconditionError("one-dimensional", "host has dimension > 1");
  if (!is_flag(h)) throw PreconditionError("flag", "host is not flag");
  const auto& s1 = p.u1().minimal_elements();
  const auto& s2 = p.u2().minimal_elements();
  if (auto c = classify_oriented(s1, s2)) return *c;
  if (auto c = classify_oriented(s2, s1)) return *c;
  throw std::logic_error("dual pair in a flag 1-complex matches none of the four types");
}

// --- isomorphism ------------------------------------------------------------

namespace {

using Mask = std::uint64_t;

struct SetSystems {
  std::size_t k = 0;
  std::vector<Mask> side[2];
};

class Canonizer {
 public:
  explicit Canonizer(const SetSystems& s) : s_(s) {}

  std::vector<std::uint64_t> run() {
    search(std::vector<std::size_t>(s_.k, 0));
    return best_;
  }

 private:
  void refine(std::vector<std::size_t>& color) const {
    std::size_t cells = std::set<std::size_t>(color.begin(), color.end()).size();
    for (;;) {
      std::vector<std::vector<std::uint64_t>> sig(s_.k);
      for (std::size_t v = 0; v < s_.k; ++v) {
        std::vector<std::vector<std::uint64_t>> parts;
        for (int side = 0; side < 2; ++side) {
          for (Mask m : s_.side[side]) {
            if (!((m >> v) & 1U)) continue;
            std::vector<std::uint64_t> part{static_cast<std::uint64_t>(side)};
            for (std::size_t x = 0; x < s_.k; ++x)
              if (x != v && ((m >> x) & 1U)) part.push_back(color[x]);
            std::sort(part.begin() + 1, part.end());
            parts.push_back(std::move(part));
          }
        }
        std::sort(parts.begin(), parts.end());
        sig[v].push_back(color[v]);
        for (const auto& p : parts) {
          sig[v].push_back(p.size());
          sig[v].insert(sig[v].end(), p.begin(), p.end());
        }
      }
      std::vector<std::vector<std::uint64_t>> distinct = sig;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (std::size_t v = 0; v < s_.k; ++v)
        color[v] = static_cast<std::size_t>(
            std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
      if (distinct.size() == cells) return;
      cells = distinct.size();
    }
  }

  std::vector<std::uint64_t> encode(const std::vector<std::size_t>& label) const {
    std::vector<std::uint64_t> code{s_.k};
    for (int side = 0; side < 2; ++side) {
      std::vector<Mask> masks;
      for (Mask m : s_.side[side]) {
        Mask r = 0;
        for (std::size_t x = 0; x < s_.k; ++x)
          if ((m >> x) & 1U) r |= Mask{1} << label[x];
        masks.push_back(r);
      }
      std::sort(masks.begin(), masks.end());
      code.push_back(masks.size());
      code.insert(code.end(), masks.begin(), masks.end());
    }
    return code;
  }

  bool transposition_is_automorphism(std::size_t u, std::size_t v) const {
    for (int side = 0; side < 2; ++side) {
      std::vector<Mask> before = s_.side[side];
      std::vector<Mask> after;
      for (Mask m : before) {
        const Mask bu = (m >> u) & 1U, bv = (m >> v) & 1U;
        Mask r = m & ~((Mask{1} << u) | (Mask{1} << v));
        r |= (bu << v) | (bv << u);
        after.push_back(r);
      }
      std::sort(before.begin(), before.end());
      std::sort(after.begin(), after.end());
      if (before != after) return false;
    }
    return true;
  }

  void search(std::vector<std::size_t> color) {
    refine(color);
    std::map<std::size_t, std::vector<std::size_t>> cells;
    for (std::size_t v = 0; v < s_.k; ++v) cells[color[v]].push_back(v);
    const std::vector<std::size_t>* target = nullptr;
    std::size_t target_color = 0;
    for (const auto& [c, members] : cells) {
      if (members.size() > 1) {
        target = &members;
        target_color = c;
        break;
      }
    }
    if (!target) {
      auto code = encode(color);
      if (best_.empty() || code < best_) best_ = std::move(code);
      return;
    }
    // Vertices of the cell that are interchangeable by a transposition give
    // identical subtrees; branch on one representative of each.
    std::vector<std::size_t> reps;
    for (std::size_t v : *target) {
      bool twin = false;
      for (std::size_t r : reps)
        if (transposition_is_automorphism(r, v)) {
          twin = true;
          break;
        }
      if (!twin) reps.push_back(v);
    }
    for (std::size_t v : reps) {
      std::vector<std::size_t> next(s_.k);
      for (std::size_t x = 0; x < s_.k; ++x)
        next[x] = 2 * color[x] + ((color[x] == target_color && x != v) ? 1 : 0);
      search(std::move(next));
    }
  }

  const SetSystems& s_;
  std::vector<std::uint64_t> best_;
};

}  // namespace

std::vector<std::uint64_t> canonical_form(const DualPair& p, std::size_t cap) {
  const std::vector<Vertex> ess = p.essential_vertices().vertices();
  if (ess.size() > cap || ess.size() > 64)
    throw CapExceeded("dual pair has " + std::to_string(ess.size()) +
                      " essential vertices, above the isomorphism cap " + std::to_string(cap));
  std::map<Vertex, std::size_t> local;
  for (std::size_t i = 0; i < ess.size(); ++i) local[ess[i]] = i;
  auto masks = [&](const UpperSet& u) {
    std::vector<Mask> out;
    for (const Face& f : u.minimal_elements()) {
      Mask m = 0;
      f.for_each([&](Vertex v) { m |= Mask{1} << local.at(v); });
      out.push_back(m);
    }
    return out;
  };
  SetSystems forward{ess.size(), {masks(p.u1()), masks(p.u2())}};
  SetSystems swapped{ess.size(), {forward.side[1], forward.side[0]}};
  auto a = Canonizer(forward).run();
  auto b = Canonizer(swapped).run();
  return std::min(a, b);
}

bool dual_pairs_isomorphic(const DualPair& p, const DualPair& q, std::size_t cap) {
  if (p.essential_vertices().size() != q.essential_vertices().size()) return false;
  return canonical_form(p, cap) == canonical_form(q, cap);
}

// --- enumeration ------------------------------------------------------------

DualPairEnumeration enumerate_dual_pairs(const SimplicialComplex& d, const EnumerationCaps& caps) {
  const HostPtr host = make_host(d);
  std::vector<Face> faces;
  for (const Face& f : all_faces(d)) {
    if (f.empty()) continue;
    if (faces.size() + 1 > caps.max_faces)
      throw CapExceeded("enumerate_dual_pairs: more than " + std::to_string(caps.max_faces) +
                        " nonempty faces");
    faces.push_back(f);
  }
  std::vector<Face> candidates;
  for (const Face& f : faces)
    if (f.size() <= caps.max_generator_size) candidates.push_back(f);

  DualPairEnumeration out;
  out.complete = candidates.size() == faces.size();
  std::set<std::pair<std::vector<Face>, std::vector<Face>>> seen;
  std::set<std::vector<std::uint64_t>> codes;

  auto comparable = [](const Face& x, const Face& y) {
    return x.is_subset_of(y) || y.is_subset_of(x);
  };
  auto fits = [&](const std::vector<Face>& chain, const Face& f) {
    return std::none_of(chain.begin(), chain.end(),
                        [&](const Face& g) { return comparable(f, g); });
  };
  auto process = [&](const std::vector<Face>& antichain) {
    DualPair p = dual_pair_of(UpperSet(host, antichain));
    auto key = std::make_pair(p.u1().minimal_elements(), p.u2().minimal_elements());
    if (!seen.insert(key).second) return;
    if (codes.insert(canonical_form(p)).second) out.classes.push_back(p);
    out.pairs.push_back(std::move(p));
  };

  std::vector<Face> chain;
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    process(chain);
    if (chain.size() == caps.max_antichain) {
      if (std::any_of(candidates.begin(), candidates.end(),
                      [&](const Face& f) { return fits(chain, f); }))
        out.complete = false;
      return;
    }
    for (std::size_t j = start; j < candidates.size(); ++j) {
      if (!fits(chain, candidates[j])) continue;
      chain.push_back(candidates[j]);
      self(self, j + 1);
      chain.pop_back();
    }
  };
  dfs(dfs, 0);
  return out;
}

ConjectureCheck check_crosspolytope_conjecture(const SimplicialComplex& d,
                                               const EnumerationCaps& caps) {
  const auto dim = pure_dimension(d);
  if (!dim) throw PreconditionError("pure", "complex is not pure");
  if (*dim < 0) throw PreconditionError("pure", "complex has no vertices");
  if (!is_flag(d)) throw PreconditionError("flag", "complex is not flag");
  if (!is_without_boundary(d)) throw PreconditionError("without boundary", "complex has boundary");

  const DualPairEnumeration ref =
      enumerate_dual_pairs(crosspolytope_boundary(static_cast<std::size_t>(*dim) + 1), caps);
  const DualPairEnumeration mine = enumerate_dual_pairs(d, caps);
  std::set<std::vector<std::uint64_t>> ref_codes;
  for (const DualPair& p : ref.classes) ref_codes.insert(canonical_form(p));

  ConjectureCheck out;
  out.complete = ref.complete && mine.complete;
  out.classes = mine.classes.size();
  out.reference_classes = ref.classes.size();
  for (const DualPair& p : mine.classes) {
    if (!ref_codes.count(canonical_form(p))) {
      out.holds = false;
      out.violation = p;
      break;
    }
  }
  return out;
}

// --- vertex flip ------------------------------------------------------------

namespace {

void check_base_face(const FacetFamily& family, const Face& sigma) {
  if (!family.host().contains(sigma))
    throw PreconditionError("base face", sigma.to_string() + " is not a face");
  for (const Face& f : family.facets())
    if (!f.intersects(sigma))
      throw PreconditionError("base face", sigma.to_string() + " misses " + f.to_string());
}

// Members A of F with a ∈ A, b ∉ A and τ ∩ A = {v} for some minimal τ of the
// opposite side.
std::vector<std::size_t> exchange_set(const FacetFamily& family, Vertex a, Vertex b,
                                      const UpperSet& opposite, Vertex v) {
  std::vector<std::size_t> out;
  const Face just_v{v};
  for (std::size_t i : family.members()) {
    const Face& f = family.host().facet(i);
    if (!f.contains(a) || f.contains(b)) continue;
    for (const Face& tau : opposite.minimal_elements()) {
      if ((tau & f) == just_v) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

void postcondition(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("vertex flip postcondition failed: " + what);
}

}  // namespace

FlipResult vertex_flip(const FacetFamily& family, const Face& sigma, Vertex a, Vertex b,
                       const DualPair& p, Vertex v) {
  const SimplicialComplex& c = family.host();
  require_vertices(c, a, b);
  if (!is_pure(c)) throw PreconditionError("pure", "host complex is not pure");
  if (!has_missing_edge_exchange(c))
    throw PreconditionError("missing edge exchange", "host lacks the property");
  if (!sigma.contains(a) || !sigma.contains(b))
    throw PreconditionError("base face", sigma.to_string() + " must contain a and b");
  check_base_face(family, sigma);
  if (!is_t_intersecting(family, 1))
    throw PreconditionError("intersecting", "the family is not intersecting");
  if (!supports_at(p, family, a, b))
    throw PreconditionError("supports", "the pair does not support the family at a, b");
  const Face ess = p.essential_vertices();
  if (!ess.contains(v))
    throw PreconditionError("essential", std::to_string(v) + " is not an essential vertex");
  if (sigma.contains(v))
    throw PreconditionError("outside base face", std::to_string(v) + " lies in the base face");
  bool touches = false;
  (sigma.without(a).without(b)).for_each([&](Vertex x) { touches = touches || has_edge(c, x, v); });
  if (touches)
    throw PreconditionError("no edge to base face",
                            std::to_string(v) + " is adjacent to a vertex of the base face other than a, b");

  const std::vector<std::size_t> r_a = exchange_set(family, a, b, p.u2(), v);
  const std::vector<std::size_t> r_b = exchange_set(family, b, a, p.u1(), v);
  const bool a_side =
      r_a.size() > r_b.size() || (r_a.size() == r_b.size() && a < b);
  const std::vector<std::size_t>& r_x = a_side ? r_a : r_b;
  const std::vector<std::size_t>& r_y = a_side ? r_b : r_a;
  const UpperSet& u_y = a_side ? p.u2() : p.u1();

  const auto nbr = vertex_neighbors(c);
  std::vector<std::size_t> members;
  for (std::size_t i : family.members())
    if (!std::binary_search(r_y.begin(), r_y.end(), i)) members.push_back(i);
  for (std::size_t i : r_x) {
    const Face ridge = c.facet(i).without(v);
    std::optional<std::size_t> swapped;
    for (Vertex u = 0; u < c.n_vertices() && !swapped; ++u) {
      if (u == v || nbr[v].contains(u) || ridge.contains(u)) continue;
      swapped = c.facet_index(ridge.with(u));
    }
    if (!swapped)
      throw std::logic_error("missing edge exchange produced no facet for " +
                             c.facet(i).to_string());
    members.push_back(*swapped);
  }

  std::vector<Face> kept;
  for (const Face& m : u_y.minimal_elements())
    if (!m.contains(v)) kept.push_back(m);
  const UpperSet w(p.host_ptr(), kept);
  UpperSet w_star = intersecting_dual(w);
  UpperSet w_star2 = intersecting_dual(w_star);
  DualPair next = a_side ? DualPair(std::move(w_star), std::move(w_star2))
                         : DualPair(std::move(w_star2), std::move(w_star));

  FacetFamily out(c, members);
  postcondition(out.size() == members.size(), "exchanged facets collide with the family");
  postcondition(out.size() >= family.size(), "family shrank");
  postcondition(is_t_intersecting(out, 1), "family is not intersecting");
  for (const Face& f : out.facets()) postcondition(f.intersects(sigma), "base face lost");
  const Face ess_next = next.essential_vertices();
  postcondition(ess_next.is_subset_of(ess.without(v)), "essential vertices did not shrink");
  postcondition(supports_at(next, out, a, b), "new pair does not support the family");

  return FlipResult{std::move(out), std::move(next), a_side ? a : b, r_y.size(), r_x.size()};
}

ReductionResult reduce_base_edge(const FacetFamily& family, Vertex a, Vertex b) {
  const SimplicialComplex& c = family.host();
  require_vertices(c, a, b);
  const Face sigma{a, b};
  check_base_face(family, sigma);
  const HostPtr host = lkcap_host(c, a, b);
  FacetFamily current = family;
  DualPair pair = dual_pair_of(UpperSet(host, restrict_family(family, a, b)));
  std::size_t flips = 0;
  for (Face ess = pair.essential_vertices(); !ess.empty(); ess = pair.essential_vertices()) {
    FlipResult r = vertex_flip(current, sigma, a, b, pair, ess.front());
    current = std::move(r.family);
    pair = std::move(r.pair);
    ++flips;
  }
  auto all_contain = [&](Vertex x) {
    const auto fs = current.facets();
    return std::all_of(fs.begin(), fs.end(), [&](const Face& f) { return f.contains(x); });
  };
  Vertex base;
  if (all_contain(a)) {
    base = a;
  } else if (all_contain(b)) {
    base = b;
  } else {
    throw std::logic_error("reduction ended without a vertex base face");
  }
  if (current.size() < family.size()) throw std::logic_error("reduction shrank the family");
  return ReductionResult{std::move(current), base, flips};
}

}  // namespace ekr
