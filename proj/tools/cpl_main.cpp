/*
 * Copyright 2026 The cpl authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "cpl/axioms.hpp"
#include "cpl/bisim.hpp"
#include "cpl/duality.hpp"
#include "cpl/eval.hpp"
#include "cpl/falsify.hpp"
#include "cpl/gallery.hpp"
#include "cpl/json_io.hpp"
#include "cpl/parser.hpp"
#include "cpl/reduce.hpp"
#include "cpl/update.hpp"

namespace {

using namespace cpl;

struct GlobalOpts {
  std::string format = "text";  // or "json"
  bool error_json = false;
  bool verbose = false;
  std::uint64_t seed = 1;
};

bool json_out(const GlobalOpts& g) { return g.format == "json"; }

void emit(const GlobalOpts& g, const std::string& text, const Json& j) {
  if (json_out(g))
    std::cout << dump_json(j);
  else
    std::cout << text << "\n";
}

// ---- shared argument plumbing ------------------------------------------

std::pair<std::string, std::string> split_binding(const std::string& arg,
                                                  const char* what) {
  auto eq = arg.find('=');
  if (eq == std::string::npos || eq == 0)
    fail(Errc::bad_params,
         std::string(what) + " bindings look like name=value: '" + arg + "'");
  return {arg.substr(0, eq), arg.substr(eq + 1)};
}

std::vector<std::pair<std::string, std::string>> parse_pairs(
    const std::string& text) {
  std::vector<std::pair<std::string, std::string>> pairs;
  size_t i = 0;
  auto skip = [&] { while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i; };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') fail(Errc::bad_params, "expected '(' in pair list");
    size_t close = text.find(')', i);
    size_t comma = text.find(',', i);
    if (close == std::string::npos || comma == std::string::npos || comma > close)
      fail(Errc::bad_params, "malformed pair in '" + text + "'");
    pairs.emplace_back(text.substr(i + 1, comma - i - 1),
                       text.substr(comma + 1, close - comma - 1));
    i = close + 1;
    skip();
  }
  return pairs;
}

/// Loads the --pattern/--graph bindings against a signature.
PatternEnv make_env(const Signature& sig,
                    const std::vector<std::string>& pattern_bindings,
                    const std::vector<std::string>& graph_bindings) {
  PatternEnv env;
  for (const auto& arg : pattern_bindings) {
    auto [name, path] = split_binding(arg, "--pattern");
    env.patterns[name] =
        std::make_shared<CommPattern>(pattern_from_json(load_json(path)));
  }
  for (const auto& arg : graph_bindings) {
    auto [name, pairs] = split_binding(arg, "--graph");
    env.graphs.emplace(
        name, CommGraph(sig.agents(), parse_pairs(pairs), true));
  }
  return env;
}

struct LoadedStructure {
  FileKind kind;
  std::optional<EpistemicModel> kripke;
  std::optional<SimplicialModel> simplicial;

  const Signature& signature() const {
    return kripke ? kripke->signature() : simplicial->signature();
  }
};

LoadedStructure load_structure(const std::string& path,
                               const std::string& kind_override) {
  Json j = load_json(path);
  FileKind kind = detect_kind(j);
  if (kind_override == "kripke") kind = FileKind::kripke;
  if (kind_override == "simplicial") kind = FileKind::simplicial;
  LoadedStructure out;
  out.kind = kind;
  if (kind == FileKind::kripke)
    out.kripke = model_from_json(j);
  else if (kind == FileKind::simplicial)
    out.simplicial = simplicial_from_json(j);
  else
    fail(Errc::bad_params, "'" + path + "' holds a pattern, not a model");
  return out;
}

// ---- subcommands --------------------------------------------------------

int cmd_check(const GlobalOpts& g, const std::string& model_path,
              const std::string& kind_override, const std::string& world,
              const std::string& facet, const std::string& formula_text,
              const std::vector<std::string>& patterns,
              const std::vector<std::string>& graphs) {
  LoadedStructure s = load_structure(model_path, kind_override);
  PatternEnv env = make_env(s.signature(), patterns, graphs);
  FormulaPtr f = parse_formula(formula_text, s.signature(), env);
  bool result;
  std::string point;
  if (s.kind == FileKind::kripke) {
    point = world.empty() ? s.kripke->worlds()[0] : world;
    result = eval_kripke(*s.kripke, point, *f);
  } else {
    FacetId x = facet.empty() ? 0 : s.simplicial->facet_by_name(facet);
    point = s.simplicial->facet_name(x);
    result = eval_simplicial(*s.simplicial, x, *f);
  }
  Json j;
  j["formula"] = to_string(*f);
  j["point"] = point;
  j["result"] = result;
  emit(g, result ? "true" : "false", j);
  return result ? 0 : 1;
}

int cmd_update(const GlobalOpts&, const std::string& model_path,
               const std::string& kind_override,
               const std::string& pattern_path, const std::string& out_path) {
  LoadedStructure s = load_structure(model_path, kind_override);
  CommPattern u = pattern_from_json(load_json(pattern_path));
  Json out;
  if (s.kind == FileKind::kripke)
    out = model_to_json(update_kripke(*s.kripke, u).model);
  else
    out = simplicial_to_json(update_simplicial(*s.simplicial, u).model);
  if (out_path.empty())
    std::cout << dump_json(out);
  else
    save_json(out_path, out);
  return 0;
}

int cmd_convert(const GlobalOpts& g, const std::string& model_path,
                const std::string& kind_override, const std::string& to,
                const std::string& world, const std::string& facet,
                const std::string& out_path) {
  LoadedStructure s = load_structure(model_path, kind_override);
  Json out;
  std::string mapped_point;
  if (to == "simplicial") {
    if (s.kind != FileKind::kripke)
      fail(Errc::bad_params, "input is already simplicial");
    ToSimplicial res = to_simplicial(*s.kripke);
    out = simplicial_to_json(res.model);
    if (!world.empty())
      mapped_point =
          res.model.facet_name(res.facet_of[s.kripke->world_index(world)]);
  } else if (to == "kripke") {
    if (s.kind != FileKind::simplicial)
      fail(Errc::bad_params, "input is already epistemic");
    ToKripke res = to_kripke(*s.simplicial);
    out = model_to_json(res.model);
    if (!facet.empty())
      mapped_point =
          res.model.worlds()[res.world_of[s.simplicial->facet_by_name(facet)]];
  } else {
    fail(Errc::bad_params, "--to must be simplicial or kripke");
  }
  if (!mapped_point.empty()) out["point"] = mapped_point;
  if (out_path.empty())
    std::cout << dump_json(out);
  else
    save_json(out_path, out);
  if (!json_out(g) && !mapped_point.empty() && !out_path.empty())
    std::cout << mapped_point << "\n";
  return 0;
}

std::pair<std::string, std::string> split_point(const std::string& arg) {
  auto colon = arg.find(':');
  if (colon == std::string::npos)
    fail(Errc::bad_params, "expected file:point, got '" + arg + "'");
  return {arg.substr(0, colon), arg.substr(colon + 1)};
}

int cmd_bisim(const GlobalOpts& g, const std::string& left,
              const std::string& right, bool standard) {
  auto [lpath, lpoint] = split_point(left);
  auto [rpath, rpoint] = split_point(right);
  LoadedStructure ls = load_structure(lpath, "");
  LoadedStructure rs = load_structure(rpath, "");

  // Mixed comparisons translate the simplicial side first.
  auto as_kripke = [](LoadedStructure& s, std::string& point) {
    if (s.kind != FileKind::simplicial) return;
    ToKripke res = to_kripke(*s.simplicial);
    point = res.model.worlds()[res.world_of[s.simplicial->facet_by_name(point)]];
    s.kripke = std::move(res.model);
    s.kind = FileKind::kripke;
  };

  BisimWitness w;
  if (ls.kind != rs.kind) {
    as_kripke(ls, lpoint);
    as_kripke(rs, rpoint);
  }
  if (ls.kind == FileKind::kripke) {
    WorldId lw = ls.kripke->world_index(lpoint);
    WorldId rw = rs.kripke->world_index(rpoint);
    w = standard ? standard_bisim_kripke(*ls.kripke, lw, *rs.kripke, rw)
                 : collective_bisim_kripke(*ls.kripke, lw, *rs.kripke, rw);
  } else {
    FacetId lx = ls.simplicial->facet_by_name(lpoint);
    FacetId rx = rs.simplicial->facet_by_name(rpoint);
    w = standard
            ? standard_bisim_simplicial(*ls.simplicial, lx, *rs.simplicial, rx)
            : collective_bisim_simplicial(*ls.simplicial, lx, *rs.simplicial,
                                          rx);
  }

  if (g.verbose && !json_out(g))
    std::cout << "comparing " << lpath << ":" << lpoint << " with " << rpath
              << ":" << rpoint << "\n";

  Json j;
  j["kind"] = standard ? "standard" : "collective";
  j["related"] = w.related;
  if (w.related) {
    Json rel = Json::array();
    for (const auto& [a, b] : w.relation) rel.push_back(Json::array({a, b}));
    j["relation"] = std::move(rel);
    if (json_out(g)) {
      std::cout << dump_json(j);
    } else {
      std::cout << "related\n";
      for (const auto& [a, b] : w.relation)
        std::cout << "  " << a << "  ~  " << b << "\n";
    }
    return 0;
  }
  j["distinguishing"] = to_string(*w.distinguishing);
  if (json_out(g))
    std::cout << dump_json(j);
  else
    std::cout << "not-related\ndistinguishing formula: "
              << to_string(*w.distinguishing) << "\n";
  return 1;
}

Signature signature_from_flags(const std::string& agents_csv,
                               const std::string& atoms_csv) {
  std::vector<std::string> agents;
  std::string cur;
  for (char c : agents_csv + ",") {
    if (c == ',') {
      if (!cur.empty()) agents.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  std::map<std::string, std::vector<std::string>> atoms;
  cur.clear();
  for (char c : atoms_csv + ",") {
    if (c == ',') {
      if (!cur.empty()) {
        auto [name, owner] = Signature::split_atom(cur);
        atoms[owner].push_back(name);
      }
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  return Signature(agents, atoms);
}

int cmd_reduce(const GlobalOpts& g, const std::string& formula_text,
               const std::string& agents_csv, const std::string& atoms_csv,
               const std::vector<std::string>& patterns,
               const std::vector<std::string>& graphs) {
  Signature sig = signature_from_flags(agents_csv, atoms_csv);
  PatternEnv env = make_env(sig, patterns, graphs);
  FormulaPtr f = parse_formula(formula_text, sig, env);
  FormulaPtr reduced = reduce_formula(f);
  Json j;
  j["input"] = to_string(*f);
  j["reduced"] = to_string(*reduced);
  emit(g, to_string(*reduced), j);
  return 0;
}

int cmd_falsify(const GlobalOpts& g, const std::string& formula_text,
                const std::string& agents_csv, const std::string& atoms_csv,
                const std::vector<std::string>& patterns,
                const std::vector<std::string>& graphs,
                const std::vector<int>& bounds_v, bool simplicial) {
  Signature sig = signature_from_flags(agents_csv, atoms_csv);
  PatternEnv env = make_env(sig, patterns, graphs);
  FormulaPtr f = parse_formula(formula_text, sig, env);
  FalsifyBounds bounds;
  if (!bounds_v.empty()) {
    if (bounds_v.size() != 4)
      fail(Errc::bad_params, "--bounds takes worlds,agents,atoms,trials");
    bounds = {bounds_v[0], bounds_v[1], bounds_v[2], bounds_v[3]};
  }
  if (g.verbose && !json_out(g))
    std::cout << "searching up to " << bounds.max_worlds << " worlds, "
              << bounds.trials << " random trials, seed " << g.seed << "\n";
  Json j;
  j["formula"] = to_string(*f);
  if (simplicial) {
    auto ce = search_counterexample_simplicial(f, sig, bounds, g.seed);
    if (!ce) {
      j["counterexample"] = nullptr;
      emit(g, "none-found (bounded search; not a validity proof)", j);
      return 0;
    }
    j["counterexample"] = simplicial_to_json(ce->model);
    j["facet"] = ce->facet;
    if (json_out(g))
      std::cout << dump_json(j);
    else
      std::cout << "counterexample at facet " << ce->facet << "\n"
                << dump_json(simplicial_to_json(ce->model));
    return 1;
  }
  auto ce = search_counterexample(f, sig, bounds, g.seed);
  if (!ce) {
    j["counterexample"] = nullptr;
    emit(g, "none-found (bounded search; not a validity proof)", j);
    return 0;
  }
  j["counterexample"] = model_to_json(ce->model);
  j["world"] = ce->world;
  if (json_out(g))
    std::cout << dump_json(j);
  else
    std::cout << "counterexample at world " << ce->world << "\n"
              << dump_json(model_to_json(ce->model));
  return 1;
}

int cmd_axioms(const GlobalOpts& g, int trials, bool exhaustive_only) {
  AxiomSuiteOptions options;
  options.seed = g.seed;
  options.random_kripke_trials = trials;
  options.random_simplicial_trials = std::max(1, trials / 2);
  options.exhaustive_only = exhaustive_only;
  auto reports = run_axiom_suite(options);
  Json j = Json::array();
  bool all_ok = true;
  for (const auto& r : reports) {
    all_ok = all_ok && r.ok();
    Json e;
    e["name"] = r.name;
    e["expect_valid"] = r.expect_valid;
    e["instances"] = r.instances;
    e["counterexample_found"] = r.counterexample_found;
    e["ok"] = r.ok();
    if (!r.detail.empty()) e["detail"] = r.detail;
    j.push_back(std::move(e));
  }
  if (json_out(g)) {
    std::cout << dump_json(j);
  } else {
    for (const auto& r : reports) {
      std::string verdict =
          r.counterexample_found ? "counterexample" : "no counterexample";
      std::printf("%-16s %-10s %4d instances  %-17s %s\n", r.name.c_str(),
                  r.expect_valid ? "valid?" : "control", r.instances,
                  verdict.c_str(), r.ok() ? "ok" : "UNEXPECTED");
      if (!r.ok() && !r.detail.empty())
        std::printf("    %s\n", r.detail.c_str());
    }
  }
  return all_ok ? 0 : 1;
}

int cmd_examples(const GlobalOpts& g, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  Json manifest = Json::array();
  for (const auto& item : gallery()) {
    Json j;
    std::string kind;
    if (std::holds_alternative<EpistemicModel>(item.value)) {
      j = model_to_json(std::get<EpistemicModel>(item.value));
      kind = "kripke";
    } else if (std::holds_alternative<SimplicialModel>(item.value)) {
      j = simplicial_to_json(std::get<SimplicialModel>(item.value));
      kind = "simplicial";
    } else {
      j = pattern_to_json(std::get<CommPattern>(item.value));
      kind = "pattern";
    }
    std::string path = out_dir + "/" + item.name + ".json";
    save_json(path, j);
    Json entry;
    entry["name"] = item.name;
    entry["kind"] = kind;
    entry["file"] = item.name + ".json";
    if (!item.point.empty()) entry["point"] = item.point;
    entry["note"] = item.note;
    manifest.push_back(std::move(entry));
    if (!json_out(g))
      std::cout << item.name << " (" << kind << ") -> " << path << "\n";
  }
  save_json(out_dir + "/manifest.json", manifest);
  if (json_out(g)) std::cout << dump_json(manifest);
  return 0;
}

int cmd_gen_pattern(const GlobalOpts&, const std::string& family,
                    const std::string& agents_csv,
                    const std::vector<std::string>& params,
                    const std::string& out_path) {
  std::vector<std::string> agents;
  std::string cur;
  for (char c : agents_csv + ",") {
    if (c == ',') {
      if (!cur.empty()) agents.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  std::map<std::string, std::string> param_map;
  for (const auto& p : params) {
    auto [k, v] = split_binding(p, "--param");
    param_map[k] = v;
  }
  CommPattern u = gen_pattern(family, agents, param_map);
  Json j = pattern_to_json(u);
  if (out_path.empty())
    std::cout << dump_json(j);
  else
    save_json(out_path, j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOpts g;
  if (const char* env = std::getenv("CPL_FORMAT")) g.format = env;

  CLI::App app{"communication pattern logic: epistemic and simplicial "
               "models, pattern updates, bisimulation, model checking"};
  app.require_subcommand(1);
  app.add_option("--format", g.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--error-json", g.error_json, "report errors as JSON");
  app.add_flag("-v,--verbose", g.verbose, "extra progress detail");
  app.add_option("--seed", g.seed, "random seed for searches");

  std::function<int()> action;

  // check
  {
    auto* c = app.add_subcommand("check", "evaluate a formula at a point");
    c->fallthrough();
    auto model = std::make_shared<std::string>();
    auto kind = std::make_shared<std::string>();
    auto world = std::make_shared<std::string>();
    auto facet = std::make_shared<std::string>();
    auto formula = std::make_shared<std::string>();
    auto patterns = std::make_shared<std::vector<std::string>>();
    auto graphs = std::make_shared<std::vector<std::string>>();
    c->add_option("--model", *model, "model file")->required();
    c->add_option("--kind", *kind, "override model kind")
        ->check(CLI::IsMember({"kripke", "simplicial"}));
    c->add_option("--world", *world, "world to evaluate at");
    c->add_option("--facet", *facet, "facet to evaluate at, e.g. {v,w,y}");
    c->add_option("--formula", *formula, "formula text")->required();
    c->add_option("--pattern", *patterns, "pattern binding name=file");
    c->add_option("--graph", *graphs, "graph binding name=(a,b),(c,d)");
    c->callback([=, &g, &action] {
      action = [=, &g] {
        return cmd_check(g, *model, *kind, *world, *facet, *formula,
                         *patterns, *graphs);
      };
    });
  }

  // update
  {
    auto* c = app.add_subcommand("update", "apply a communication pattern");
    c->fallthrough();
    auto model = std::make_shared<std::string>();
    auto kind = std::make_shared<std::string>();
    auto pattern = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    c->add_option("--model", *model, "model file")->required();
    c->add_option("--kind", *kind, "override model kind")
        ->check(CLI::IsMember({"kripke", "simplicial"}));
    c->add_option("--pattern", *pattern, "pattern file")->required();
    c->add_option("-o,--out", *out, "output file (default stdout)");
    c->callback([=, &g, &action] {
      action = [=, &g] { return cmd_update(g, *model, *kind, *pattern, *out); };
    });
  }

  // convert
  {
    auto* c = app.add_subcommand("convert", "translate between the two "
                                            "structure kinds");
    c->fallthrough();
    auto model = std::make_shared<std::string>();
    auto kind = std::make_shared<std::string>();
    auto to = std::make_shared<std::string>();
    auto world = std::make_shared<std::string>();
    auto facet = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    c->add_option("--model", *model, "model file")->required();
    c->add_option("--kind", *kind, "override model kind")
        ->check(CLI::IsMember({"kripke", "simplicial"}));
    c->add_option("--to", *to, "target kind")
        ->required()
        ->check(CLI::IsMember({"kripke", "simplicial"}));
    c->add_option("--world", *world, "point to map along the translation");
    c->add_option("--facet", *facet, "point to map along the translation");
    c->add_option("-o,--out", *out, "output file (default stdout)");
    c->callback([=, &g, &action] {
      action = [=, &g] {
        return cmd_convert(g, *model, *kind, *to, *world, *facet, *out);
      };
    });
  }

  // bisim
  {
    auto* c = app.add_subcommand(
        "bisim", "bisimilarity of two pointed structures (exit 0 related, "
                 "1 not)");
    c->fallthrough();
    auto left = std::make_shared<std::string>();
    auto right = std::make_shared<std::string>();
    auto standard = std::make_shared<bool>(false);
    auto collective = std::make_shared<bool>(false);
    c->add_option("--left", *left, "file:point")->required();
    c->add_option("--right", *right, "file:point")->required();
    c->add_flag("--standard", *standard, "singleton-group bisimulation");
    c->add_flag("--collective", *collective,
                "all-group bisimulation (default)");
    c->callback([=, &g, &action] {
      action = [=, &g] { return cmd_bisim(g, *left, *right, *standard); };
    });
  }

  // reduce
  {
    auto* c = app.add_subcommand("reduce",
                                 "rewrite away the pattern modalities");
    c->fallthrough();
    auto formula = std::make_shared<std::string>();
    auto agents = std::make_shared<std::string>();
    auto atoms = std::make_shared<std::string>();
    auto patterns = std::make_shared<std::vector<std::string>>();
    auto graphs = std::make_shared<std::vector<std::string>>();
    c->add_option("--formula", *formula, "formula text")->required();
    c->add_option("--agents", *agents, "comma-separated agents")->required();
    c->add_option("--atoms", *atoms, "comma-separated atoms like p_a");
    c->add_option("--pattern", *patterns, "pattern binding name=file");
    c->add_option("--graph", *graphs, "graph binding name=(a,b),(c,d)");
    c->callback([=, &g, &action] {
      action = [=, &g] {
        return cmd_reduce(g, *formula, *agents, *atoms, *patterns, *graphs);
      };
    });
  }

  // falsify
  {
    auto* c = app.add_subcommand(
        "falsify", "search for a counterexample to a formula's validity");
    c->fallthrough();
    auto formula = std::make_shared<std::string>();
    auto agents = std::make_shared<std::string>();
    auto atoms = std::make_shared<std::string>();
    auto patterns = std::make_shared<std::vector<std::string>>();
    auto graphs = std::make_shared<std::vector<std::string>>();
    auto bounds = std::make_shared<std::vector<int>>();
    auto simplicial = std::make_shared<bool>(false);
    c->add_option("--formula", *formula, "formula text")->required();
    c->add_option("--agents", *agents, "comma-separated agents")->required();
    c->add_option("--atoms", *atoms, "comma-separated atoms like p_a");
    c->add_option("--pattern", *patterns, "pattern binding name=file");
    c->add_option("--graph", *graphs, "graph binding name=(a,b),(c,d)");
    c->add_option("--bounds", *bounds,
                  "worlds,agents,atoms-per-agent,trials")
        ->delimiter(',');
    c->add_flag("--simplicial", *simplicial,
                "search simplicial models instead");
    c->callback([=, &g, &action] {
      action = [=, &g] {
        return cmd_falsify(g, *formula, *agents, *atoms, *patterns, *graphs,
                           *bounds, *simplicial);
      };
    });
  }

  // axioms
  {
    auto* c = app.add_subcommand(
        "axioms", "falsification sweep over the axiomatization");
    c->fallthrough();
    auto trials = std::make_shared<int>(100);
    auto exhaustive_only = std::make_shared<bool>(false);
    c->add_option("--trials", *trials, "random models per instance");
    c->add_flag("--exhaustive-only", *exhaustive_only,
                "skip the random phase");
    c->callback([=, &g, &action] {
      action = [=, &g] { return cmd_axioms(g, *trials, *exhaustive_only); };
    });
  }

  // examples
  {
    auto* c = app.add_subcommand("examples",
                                 "materialize the built-in example gallery");
    c->fallthrough();
    auto out = std::make_shared<std::string>();
    c->add_option("--out", *out, "output directory")->required();
    c->callback([=, &g, &action] {
      action = [=, &g] { return cmd_examples(g, *out); };
    });
  }

  // gen-pattern
  {
    auto* c = app.add_subcommand("gen-pattern",
                                 "emit a named pattern family");
    c->fallthrough();
    auto family = std::make_shared<std::string>();
    auto agents = std::make_shared<std::string>();
    auto params = std::make_shared<std::vector<std::string>>();
    auto out = std::make_shared<std::string>();
    c->add_option("--family", *family, "family name")->required();
    c->add_option("--agents", *agents, "comma-separated agents")->required();
    c->add_option("--param", *params, "family parameter key=value");
    c->add_option("-o,--out", *out, "output file (default stdout)");
    c->callback([=, &g, &action] {
      action = [=, &g] {
        return cmd_gen_pattern(g, *family, *agents, *params, *out);
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const Error& e) {
    int code = e.kind() == Errc::syntax_error ? 2 : 3;
    if (g.error_json) {
      Json j;
      j["error"]["kind"] = errc_name(e.kind());
      j["error"]["message"] = e.what();
      std::cerr << dump_json(j);
    } else {
      std::cerr << "error (" << errc_name(e.kind()) << "): " << e.what()
                << "\n";
    }
    return code;
  }
}
