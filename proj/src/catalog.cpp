#include "ekr/catalog.hpp"

#include "ekr/generators.hpp"

namespace ekr {

std::vector<CatalogEntry> flag_catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, SimplicialComplex c, bool susp, bool manifold) {
    out.push_back(CatalogEntry{std::move(name), std::move(c), susp, manifold});
  };

  for (std::size_t n = 4; n <= 8; ++n)
    add("cycle(" + std::to_string(n) + ")", cycle(n), n == 4, true);
  for (std::size_t d = 2; d <= 4; ++d)
    add("crosspolytope(" + std::to_string(d) + ")", crosspolytope_boundary(d), true, true);
  add("icosahedron", icosahedron(), false, true);

  for (std::size_t n = 3; n <= 5; ++n) {
    for (std::size_t m = 1; n + m <= 7; ++m) {
      const bool sphere = m == 1;
      // The pentagon complex is cycle(5); only the square (n=2) case would be
      // a suspension and it is excluded by n >= 3.
      add("dissection(" + std::to_string(n) + "," + std::to_string(m) + ")",
          dissection_complex(n, m), false, sphere);
    }
  }

  const std::vector<std::vector<std::size_t>> parts = {
      {2, 3}, {3, 3}, {2, 2, 3}, {2, 3, 3}, {3, 3, 3}, {2, 2, 2, 3}, {2, 3, 3, 3}, {3, 3, 3, 3}};
  for (const auto& p : parts) {
    std::string name = "kpartite(";
    for (std::size_t i = 0; i < p.size(); ++i) name += (i ? "," : "") + std::to_string(p[i]);
    add(name + ")", kpartite_clique_complex(p), false, false);
  }

  add("suspension(cycle(5))", suspension(cycle(5)), true, true);
  add("suspension(cycle(6))", suspension(cycle(6)), true, true);
  add("suspension(icosahedron)", suspension(icosahedron()), true, true);
  add("double_suspension(cycle(5))", double_suspension(cycle(5)), true, true);
  add("join(cycle(5),cycle(5))", join(cycle(5), cycle(5)), false, true);
  add("join(cycle(4),cycle(6))", join(cycle(4), cycle(6)), true, true);
  add("join(cycle(5),cycle(6))", join(cycle(5), cycle(6)), false, true);
  return out;
}

}  // namespace ekr
