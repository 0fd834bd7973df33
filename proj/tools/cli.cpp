#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "incalg/errors.hpp"
#include "incalg/io.hpp"

namespace incalg::cli {

namespace {

using io::json;

struct Options {
  std::string poset;
  std::string poset2;
  std::string ring;
  std::vector<std::string> fns;
  std::string cocycle;
  std::string table;
  std::string out;
  std::string mode;
  std::vector<int> tau;
};

RingSpec ring_or(const Options& o, const std::optional<RingSpec>& fallback) {
  if (!o.ring.empty()) return RingSpec::parse(o.ring);
  return fallback.value_or(RingSpec::rationals());
}

Preorder load_poset(const std::string& path) {
  if (path.empty()) throw ParseError("--poset is required");
  return io::poset_from_json(io::read_json_file(path));
}

AlgebraPtr algebra(const Options& o, const std::optional<RingSpec>& fallback = std::nullopt) {
  return make_algebra(load_poset(o.poset), ring_or(o, fallback));
}

json first_fn(const Options& o) {
  if (o.fns.empty()) throw ParseError("--fn is required");
  return io::read_json_file(o.fns.front());
}

io::CocycleInput load_cocycle(const Options& o, const RingSpec& ring) {
  auto in = io::cocycle_from_json(ring, io::read_json_file(o.cocycle));
  if (o.mode == "full") in.mode = CocycleMode::Full;
  if (o.mode == "tree") in.mode = CocycleMode::TreeOnly;
  return in;
}

/// Ring of a table document: the ring of its first image.
std::optional<RingSpec> table_ring(const json& t) {
  if (t.is_array() && !t.empty() && t[0].is_object() && t[0].contains("image")) return io::function_ring(t[0]["image"]);
  return std::nullopt;
}

using Verb = std::function<json(const Options&)>;

std::map<std::string, std::pair<std::string, Verb>> verbs() {
  std::map<std::string, std::pair<std::string, Verb>> v;
  v["poset-info"] = {"Quotient, comparability graph, forest, cycles, triangles, automorphisms",
                     [](const Options& o) { return io::poset_info(algebra(o)); }};
  v["mobius"] = {"Möbius function of the poset", [](const Options& o) { return io::function_to_json(mobius(algebra(o))); }};
  v["invert"] = {"Inverse of --fn", [](const Options& o) {
                   const auto doc = first_fn(o);
                   return io::function_to_json(invert(io::function_from_json(algebra(o, io::function_ring(doc)), doc)));
                 }};
  v["radical"] = {"Jacobson radical membership of --fn", [](const Options& o) {
                    const auto doc = first_fn(o);
                    const auto f = io::function_from_json(algebra(o, io::function_ring(doc)), doc);
                    return json{{"in_radical", in_radical_fn(f)}};
                  }};
  v["structmat"] = {"Structural matrix of --fn", [](const Options& o) {
                      const auto doc = first_fn(o);
                      return io::structural_to_json(to_structural(io::function_from_json(algebra(o, io::function_ring(doc)), doc)));
                    }};
  v["aut-build"] = {"Table of inner(--fn) ∘ mult(--cocycle) ∘ ordinal(--tau)", [](const Options& o) {
                      std::optional<RingSpec> ring;
                      std::optional<json> unit;
                      if (!o.fns.empty()) {
                        unit = first_fn(o);
                        ring = io::function_ring(*unit);
                      }
                      const auto alg = algebra(o, ring);
                      auto t = tabulate(alg, alg, [](const IncidenceFunction& f) { return f; });
                      if (!o.tau.empty()) t = ordinal(o.tau, alg);
                      if (!o.cocycle.empty()) {
                        const auto in = load_cocycle(o, alg->ring());
                        t = compose(mult_table(mult_cocycle(alg, in.assignment, in.mode)), t);
                      }
                      if (unit) t = compose(inner_table(io::function_from_json(alg, *unit)), t);
                      return io::table_to_json(t);
                    }};
  v["aut-verify"] = {"Check that --table is an isomorphism I(--poset) -> I(--poset2)", [](const Options& o) {
                       const auto doc = io::read_json_file(o.table);
                       const auto ring = ring_or(o, table_ring(doc));
                       const auto src = make_algebra(load_poset(o.poset), ring);
                       const auto dst = o.poset2.empty() ? src : make_algebra(load_poset(o.poset2), ring);
                       const auto t = io::table_from_json(src, dst, doc);
                       const bool ok = verify_automorphism(t);
                       json out{{"automorphism", ok}};
                       if (ok) out["induced_map"] = induced_map(t);
                       return out;
                     }};
  v["aut-decompose"] = {"Decompose --cocycle (multiplicative) or --table (automorphism)", [](const Options& o) {
                          if (!o.table.empty()) {
                            const auto doc = io::read_json_file(o.table);
                            const auto alg = algebra(o, table_ring(doc));
                            return io::aut_decomposition_to_json(full_decompose(io::table_from_json(alg, alg, doc)));
                          }
                          if (o.cocycle.empty()) throw ParseError("--cocycle or --table is required");
                          const auto alg = algebra(o);
                          const auto in = load_cocycle(o, alg->ring());
                          return io::mult_decomposition_to_json(decompose_mult(mult_cocycle(alg, in.assignment, in.mode)));
                        }};
  v["deriv-space"] = {"Additive derivation dimensions", [](const Options& o) { return io::deriv_space_to_json(derivation_space(algebra(o))); }};
  v["deriv-decompose"] = {"Decompose --cocycle (additive) or diagonalise --table (derivation)", [](const Options& o) {
                            if (!o.table.empty()) {
                              const auto doc = io::read_json_file(o.table);
                              const auto alg = algebra(o, table_ring(doc));
                              const auto d = io::table_from_json(alg, alg, doc);
                              triangularize_derivation(d);
                              const auto dd = diagonalize_derivation(d);
                              return json{{"g", io::function_to_json(dd.g)},
                                          {"diagonal", io::table_to_json(dd.diagonal)},
                                          {"cocycle", io::cocycle_to_json(cocycle_of_diagonal(dd.diagonal))}};
                            }
                            if (o.cocycle.empty()) throw ParseError("--cocycle or --table is required");
                            const auto alg = algebra(o);
                            const auto in = load_cocycle(o, alg->ring());
                            return io::add_decomposition_to_json(decompose_add(add_cocycle(alg, in.assignment, in.mode)));
                          }};
  v["deriv-oracle"] = {"Brute-force derivation dimensions", [](const Options& o) {
                         return io::brute_report_to_json(brute_derivations(algebra(o), false));
                       }};
  v["reduced-types"] = {"Standard interval types", [](const Options& o) { return io::types_to_json(standard_types(algebra(o))); }};
  v["reduced-coeffs"] = {"Incidence coefficients of the standard reduction", [](const Options& o) {
                           const auto r = standard_types(algebra(o));
                           return json{{"types", io::types_to_json(r)}, {"coefficients", io::coefficients_to_json(coefficients(r))}};
                         }};
  v["reduced-mul"] = {"Product of two reduced elements (--fn twice)", [](const Options& o) {
                        if (o.fns.size() != 2) throw ParseError("reduced-mul needs exactly two --fn files");
                        const auto a_doc = io::read_json_file(o.fns[0]);
                        const auto b_doc = io::read_json_file(o.fns[1]);
                        const auto r = standard_types(algebra(o, io::function_ring(a_doc)));
                        const auto table = coefficients(r);
                        return io::reduced_to_json(reduced_convolve(io::reduced_from_json(r, a_doc), io::reduced_from_json(r, b_doc), table));
                      }};
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in incidence algebras of finite preorders", "incalg"};
  app.require_subcommand(1);
  Options o;
  const auto table = verbs();
  std::map<CLI::App*, const Verb*> handlers;
  for (const auto& [name, entry] : table) {
    auto* sub = app.add_subcommand(name, entry.first);
    sub->add_option("--poset", o.poset, "poset JSON file");
    sub->add_option("--poset2", o.poset2, "second poset JSON file");
    sub->add_option("--ring", o.ring, "Q, Zmod:n, Mat:k:Q or Mat:k:Zmod:n");
    sub->add_option("--fn", o.fns, "incidence function JSON file (repeatable)");
    sub->add_option("--cocycle", o.cocycle, "cocycle JSON file");
    sub->add_option("--table", o.table, "basis-image table JSON file");
    sub->add_option("--out", o.out, "output file (default stdout)");
    sub->add_option("--mode", o.mode, "cocycle mode override")->check(CLI::IsMember({"full", "tree"}));
    sub->add_option("--tau", o.tau, "poset automorphism, comma separated")->delimiter(',');
    handlers[sub] = &entry.second;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }
  const Verb* verb = nullptr;
  for (auto* sub : app.get_subcommands()) verb = handlers.at(sub);

  try {
    const auto result = (*verb)(o).dump(2) + "\n";
    if (o.out.empty()) {
      out << result;
    } else {
      std::ofstream file(o.out);
      if (!file) throw ParseError("cannot write " + o.out);
      file << result;
    }
    return 0;
  } catch (const Error& e) {
    out << json{{"error", std::string(to_string(e.code()))}, {"detail", e.detail()}}.dump(2) << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace incalg::cli
