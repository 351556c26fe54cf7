#include "ekr/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "ekr/catalog.hpp"
#include "ekr/dual_pairs.hpp"
#include "ekr/ekr_engine.hpp"
#include "ekr/error.hpp"
#include "ekr/generators.hpp"
#include "ekr/json_io.hpp"

namespace ekr {

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("SHA-256 computation failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i)
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return os.str();
}

namespace {

struct Io {
  std::istream& in;
  std::ostream& out;
  std::string out_path;
};

std::string read_all(std::istream& s) {
  std::ostringstream os;
  os << s.rdbuf();
  return os.str();
}

SimplicialComplex load_complex(const std::string& path, std::istream& in) {
  std::string text;
  if (path.empty() || path == "-") {
    text = read_all(in);
  } else {
    std::ifstream f(path);
    if (!f) throw InvalidInput("cannot open " + path);
    text = read_all(f);
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  return complex_from_json(j);
}

void emit(const Io& io, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (io.out_path.empty()) {
    io.out << text;
    return;
  }
  std::ofstream f(io.out_path);
  if (!f) throw InvalidInput("cannot write " + io.out_path);
  f << text;
}

Json manifest(const std::string& command, Json parameters, const SimplicialComplex* input,
              Json report) {
  Json m;
  m["command"] = command;
  m["parameters"] = std::move(parameters);
  m["input_hash"] = input ? Json(sha256_hex(complex_to_json(*input).dump())) : Json(nullptr);
  m["report"] = std::move(report);
  m["tool_version"] = kToolVersion;
  return m;
}

std::vector<std::size_t> parse_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(item, &pos);
      if (pos != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::logic_error&) {
      throw InvalidInput("bad list entry '" + item + "' in '" + s + "'");
    }
  }
  return out;
}

// "3" or "d-1" style thresholds for sweeps over dimension d.
std::size_t eval_t(const std::string& expr, std::size_t d) {
  if (!expr.empty() && expr[0] == 'd') {
    long long k = 0;
    if (expr.size() > 1) {
      if (expr[1] != '-' && expr[1] != '+') throw InvalidInput("bad threshold '" + expr + "'");
      k = std::stoll(expr.substr(2));
      if (expr[1] == '-') k = -k;
    }
    const long long t = static_cast<long long>(d) + k;
    if (t < 1) throw InvalidInput("threshold '" + expr + "' is below 1 at d = " + std::to_string(d));
    return static_cast<std::size_t>(t);
  }
  const auto v = parse_list(expr);
  if (v.size() != 1 || v[0] < 1) throw InvalidInput("bad threshold '" + expr + "'");
  return v[0];
}

Json properties(const SimplicialComplex& c) {
  Json r;
  const auto pd = pure_dimension(c);
  r["pure"] = pd.has_value();
  r["dim"] = c.dim();
  r["flag"] = is_flag(c);
  if (pd) {
    r["without_boundary"] = is_without_boundary(c);
    r["pseudo_manifold"] = is_pseudo_manifold(c);
    const ExchangeCheck m = missing_edge_exchange(c);
    r["meep"] = m.holds;
    if (m.first_failure) {
      r["meep_failure"] = {{"ridge", face_to_json(m.first_failure->ridge)},
                           {"apex", m.first_failure->apex}};
    }
  } else {
    r["without_boundary"] = nullptr;
    r["pseudo_manifold"] = nullptr;
    r["meep"] = nullptr;
  }
  r["n_vertices"] = c.n_vertices();
  r["facets"] = c.facet_count();
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact EKR verification for pure simplicial complexes", "ekr"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  unsigned threads = 0;
  app.add_option("--out", out_path, "Write the JSON result to this file");
  app.add_option("--threads", threads, "Search threads (0 = all cores)");

  // generate
  auto* gen = app.add_subcommand("generate", "Emit a generated complex as JSON");
  std::string kind;
  std::size_t g_n = 0, g_m = 1, g_r = 0, g_dim = 0, g_k = 1;
  std::string g_parts, g_input, g_with;
  gen->add_option("kind", kind,
                  "complete | crosspolytope | cycle | dissection | kpartite | simplex-neighbors | "
                  "fattened-bipyramid | icosahedron | suspension | double-suspension | join")
      ->required();
  gen->add_option("--n", g_n);
  gen->add_option("--m", g_m);
  gen->add_option("--r", g_r);
  gen->add_option("--dim", g_dim);
  gen->add_option("--k", g_k);
  gen->add_option("--parts", g_parts, "Comma separated part sizes");
  gen->add_option("--input", g_input, "Input complex for suspension/join (default stdin)");
  gen->add_option("--with", g_with, "Second complex for join");

  // check
  auto* chk = app.add_subcommand("check", "Structural properties of a complex");
  std::string input;
  chk->add_option("--input", input, "Complex JSON (default stdin)");

  // verify
  auto* ver = app.add_subcommand("verify", "Decide t-intersecting pure-EKR");
  std::size_t t = 1;
  bool strict = false;
  std::size_t cap = SearchOptions{}.enumeration_cap;
  ver->add_option("--input", input, "Complex JSON (default stdin)");
  ver->add_option("--t", t, "Intersection threshold")->check(CLI::PositiveNumber);
  ver->add_flag("--strict", strict, "Also decide strictness");
  ver->add_option("--cap", cap, "Enumeration cap for strictness");

  // sweep
  auto* swp = app.add_subcommand("sweep", "Verify a whole family of complexes");
  std::string family;
  std::string t_expr = "1";
  std::size_t max_nm = 7, min_dim = 3, max_dim = 5;
  bool deep = false;
  swp->add_option("--family", family, "dissection | crosspolytope | catalog")->required();
  swp->add_option("--t", t_expr, "Threshold, an integer or d-K for crosspolytope sweeps");
  swp->add_option("--max-nm", max_nm, "Dissections with n + m up to this bound");
  swp->add_flag("--deep", deep, "Allow n + m above 7");
  swp->add_option("--min-dim", min_dim, "Smallest cross-polytope boundary dimension");
  swp->add_option("--max-dim", max_dim, "Largest cross-polytope boundary dimension");

  // dualpairs
  auto* dps = app.add_subcommand("dualpairs", "Dual pair enumeration and checks");
  bool enumerate = false, conjecture = false;
  EnumerationCaps caps;
  dps->add_option("--input", input, "Complex JSON (default stdin)");
  dps->add_flag("--enumerate", enumerate, "List isomorphism classes of dual pairs");
  dps->add_flag("--check-crosspolytope-conjecture", conjecture,
                "Compare the classes with those of the cross-polytope boundary");
  dps->add_option("--max-generator", caps.max_generator_size);
  dps->add_option("--max-antichain", caps.max_antichain);

  // reduce
  auto* red = app.add_subcommand("reduce", "Reduce a family with base edge ab to a vertex star");
  std::size_t ra = 0, rb = 0;
  std::string members;
  red->add_option("--input", input, "Complex JSON (default stdin)");
  red->add_option("--a", ra)->required();
  red->add_option("--b", rb)->required();
  red->add_option("--family", members, "Comma separated facet indices")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  const Io io{in, out, out_path};
  SearchOptions opts;
  opts.threads = threads;

  try {
    if (*gen) {
      SimplicialComplex c;
      if (kind == "complete") {
        c = complete_complex(g_n, g_r);
      } else if (kind == "crosspolytope") {
        c = crosspolytope_boundary(g_dim);
      } else if (kind == "cycle") {
        c = cycle(g_n);
      } else if (kind == "dissection") {
        c = dissection_complex(g_n, g_m);
      } else if (kind == "kpartite") {
        c = kpartite_clique_complex(parse_list(g_parts));
      } else if (kind == "simplex-neighbors") {
        c = simplex_with_neighbors(g_dim);
      } else if (kind == "fattened-bipyramid") {
        c = fattened_bipyramid(g_dim, g_k);
      } else if (kind == "icosahedron") {
        c = icosahedron();
      } else if (kind == "suspension") {
        c = suspension(load_complex(g_input, in));
      } else if (kind == "double-suspension") {
        c = double_suspension(load_complex(g_input, in));
      } else if (kind == "join") {
        if (g_with.empty()) throw InvalidInput("join needs --with");
        const SimplicialComplex first = load_complex(g_input, in);
        c = join(first, load_complex(g_with, in));
      } else {
        throw InvalidInput("unknown generator '" + kind + "'");
      }
      const std::string text = complex_to_json(c).dump() + "\n";
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream f(out_path);
        if (!f) throw InvalidInput("cannot write " + out_path);
        f << text;
      }
      return 0;
    }

    if (*chk) {
      const SimplicialComplex c = load_complex(input, in);
      emit(io, manifest("check", Json::object(), &c, properties(c)));
      return 0;
    }

    if (*ver) {
      const SimplicialComplex c = load_complex(input, in);
      opts.enumeration_cap = cap;
      const EkrReport r = strict ? is_strict_pure_ekr(c, t, opts) : is_pure_ekr(c, t, opts);
      Json params{{"t", t}, {"strict", strict}};
      if (strict) params["cap"] = cap;
      Json rep = report_to_json(r);
      if (strict) {
        rep["enumeration_complete"] = r.enumeration_complete;
        rep["enumerated"] = r.enumerated_count;
      }
      emit(io, manifest("verify", params, &c, rep));
      if (!r.is_ekr) return 1;
      if (strict && !r.is_strict) return 3;
      if (strict && !*r.is_strict) return 1;
      return 0;
    }

    if (*swp) {
      Json rows = Json::array();
      bool all_ekr = true;
      Json params{{"family", family}, {"t", t_expr}};
      if (family == "dissection") {
        if (max_nm > 7 && !deep)
          throw InvalidInput("--max-nm above 7 runs for hours; pass --deep to allow it");
        params["max_nm"] = max_nm;
        const std::size_t tv = eval_t(t_expr, 0);
        for (std::size_t s = 3; s <= max_nm; ++s) {
          for (std::size_t n = 2; n < s; ++n) {
            const std::size_t m = s - n;
            Json row{{"n", n}, {"m", m}};
            if (tv > n - 1) {
              row["skipped"] = "t exceeds dim + 1";
            } else {
              const SimplicialComplex c = dissection_complex(n, m);
              const EkrReport r = is_pure_ekr(c, tv, opts);
              row["facets"] = c.facet_count();
              row["report"] = report_to_json(r);
              all_ekr = all_ekr && r.is_ekr;
            }
            rows.push_back(row);
          }
        }
      } else if (family == "crosspolytope") {
        params["min_dim"] = min_dim;
        params["max_dim"] = max_dim;
        for (std::size_t d = min_dim; d <= max_dim; ++d) {
          const SimplicialComplex c = crosspolytope_boundary(d + 1);
          const std::size_t tv = eval_t(t_expr, d);
          const EkrReport r = is_pure_ekr(c, tv, opts);
          rows.push_back({{"dim", d}, {"report", report_to_json(r)}});
          all_ekr = all_ekr && r.is_ekr;
        }
      } else if (family == "catalog") {
        const std::size_t tv = eval_t(t_expr, 0);
        for (const CatalogEntry& e : flag_catalog()) {
          Json row{{"name", e.name}};
          if (tv > static_cast<std::size_t>(e.complex.dim() + 1)) {
            row["skipped"] = "t exceeds dim + 1";
          } else {
            const EkrReport r = is_pure_ekr(e.complex, tv, opts);
            row["report"] = report_to_json(r);
            all_ekr = all_ekr && r.is_ekr;
          }
          rows.push_back(row);
        }
      } else {
        throw InvalidInput("unknown sweep family '" + family + "'");
      }
      emit(io, manifest("sweep", params, nullptr, Json{{"rows", rows}, {"all_ekr", all_ekr}}));
      return all_ekr ? 0 : 1;
    }

    if (*dps) {
      if (enumerate == conjecture)
        throw InvalidInput("choose exactly one of --enumerate and --check-crosspolytope-conjecture");
      const SimplicialComplex c = load_complex(input, in);
      Json params{{"mode", enumerate ? "enumerate" : "check-crosspolytope-conjecture"},
                  {"max_generator", caps.max_generator_size},
                  {"max_antichain", caps.max_antichain}};
      if (enumerate) {
        const DualPairEnumeration e = enumerate_dual_pairs(c, caps);
        const bool one_dim_flag = c.dim() <= 1 && is_flag(c);
        Json classes = Json::array();
        for (const DualPair& p : e.classes) {
          Json jp = dual_pair_to_json(p);
          if (one_dim_flag) jp["type"] = to_string(classify_1d(p).type);
          classes.push_back(jp);
        }
        emit(io, manifest("dualpairs", params, &c,
                          Json{{"class_count", e.classes.size()},
                               {"complete", e.complete},
                               {"classes", classes}}));
        return 0;
      }
      const ConjectureCheck r = check_crosspolytope_conjecture(c, caps);
      Json rep{{"holds", r.holds},
               {"complete", r.complete},
               {"classes", r.classes},
               {"reference_classes", r.reference_classes},
               {"violation", r.violation ? dual_pair_to_json(*r.violation) : Json(nullptr)}};
      emit(io, manifest("dualpairs", params, &c, rep));
      if (!r.complete) return 3;
      return r.holds ? 0 : 1;
    }

    if (*red) {
      const SimplicialComplex c = load_complex(input, in);
      const FacetFamily f(c, parse_list(members));
      const ReductionResult r =
          reduce_base_edge(f, static_cast<Vertex>(ra), static_cast<Vertex>(rb));
      Json params{{"a", ra}, {"b", rb}, {"family", f.members()}};
      Json rep{{"initial_size", f.size()},
               {"final_size", r.family.size()},
               {"base_vertex", r.base_vertex},
               {"flips", r.flips},
               {"family", r.family.members()}};
      emit(io, manifest("reduce", params, &c, rep));
      return 0;
    }
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace ekr
