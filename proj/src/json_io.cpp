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

#include "cpl/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>

namespace cpl {

namespace {

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) fail(Errc::bad_params, std::string(what) + " must be a list");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string())
      fail(Errc::bad_params, std::string(what) + " must hold strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

Signature signature_from_json(const Json& j) {
  if (!j.contains("agents"))
    fail(Errc::bad_params, "missing \"agents\"");
  std::map<std::string, std::vector<std::string>> atoms;
  if (j.contains("atoms")) {
    if (!j.at("atoms").is_object())
      fail(Errc::bad_params, "\"atoms\" must map agents to atom names");
    for (const auto& [agent, names] : j.at("atoms").items())
      atoms[agent] = string_list(names, "atoms entry");
  }
  return Signature(string_list(j.at("agents"), "agents"), atoms);
}

Json signature_to_json(const Signature& sig) {
  Json atoms = Json::object();
  for (const auto& agent : sig.agents()) atoms[agent] = Json::array();
  for (int i = 0; i < sig.atom_count(); ++i) {
    auto [name, owner] = Signature::split_atom(sig.atoms()[i]);
    atoms[owner].push_back(name);
  }
  for (auto& [_, names] : atoms.items())
    std::sort(names.begin(), names.end());
  Json j;
  j["agents"] = sig.agents();
  j["atoms"] = std::move(atoms);
  return j;
}

}  // namespace

Json model_to_json(const EpistemicModel& m) {
  Json j = signature_to_json(m.signature());
  j["worlds"] = m.worlds();
  Json valuation = Json::object();
  for (WorldId w = 0; w < m.world_count(); ++w) {
    Json v = Json::array();
    for (int i = 0; i < m.signature().atom_count(); ++i)
      if (m.valuation(w) & (AtomSet{1} << i))
        v.push_back(m.signature().atoms()[i]);
    valuation[m.worlds()[w]] = std::move(v);
  }
  j["valuation"] = std::move(valuation);
  Json relations = Json::object();
  for (int a = 0; a < m.signature().agent_count(); ++a) {
    Json blocks = Json::array();
    for (const auto& block : m.blocks(a)) {
      Json b = Json::array();
      for (WorldId w : block) b.push_back(m.worlds()[w]);
      blocks.push_back(std::move(b));
    }
    relations[m.signature().agents()[a]] = std::move(blocks);
  }
  j["relations"] = std::move(relations);
  return j;
}

EpistemicModel model_from_json(const Json& j) {
  Signature sig = signature_from_json(j);
  if (!j.contains("worlds")) fail(Errc::bad_params, "missing \"worlds\"");
  std::vector<std::pair<std::string, std::vector<std::string>>> worlds;
  for (const auto& w : string_list(j.at("worlds"), "worlds"))
    worlds.emplace_back(w, std::vector<std::string>{});
  if (j.contains("valuation")) {
    for (auto& [world, atoms] : j.at("valuation").items()) {
      bool known = false;
      for (auto& [name, val] : worlds)
        if (name == world) {
          val = string_list(atoms, "valuation entry");
          known = true;
        }
      if (!known)
        fail(Errc::unknown_id, "valuation mentions unknown world '" + world + "'");
    }
  }
  std::map<std::string, std::vector<std::vector<std::string>>> relations;
  if (j.contains("relations")) {
    for (const auto& [agent, blocks] : j.at("relations").items()) {
      if (!blocks.is_array())
        fail(Errc::bad_params, "relations entry must be a list of blocks");
      auto& out = relations[agent];
      for (const auto& block : blocks)
        out.push_back(string_list(block, "relation block"));
    }
  }
  return build_model(sig, worlds, relations);
}

Json simplicial_to_json(const SimplicialModel& c) {
  Json j = signature_to_json(c.signature());
  Json vertices = Json::object();
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    Json spec;
    spec["colour"] = c.signature().agents()[c.colour(v)];
    Json atoms = Json::array();
    for (int i = 0; i < c.signature().atom_count(); ++i)
      if (c.vertex_valuation(v) & (AtomSet{1} << i))
        atoms.push_back(c.signature().atoms()[i]);
    spec["atoms"] = std::move(atoms);
    vertices[c.vertex_ids()[v]] = std::move(spec);
  }
  j["vertices"] = std::move(vertices);
  Json facets = Json::array();
  for (FacetId x = 0; x < c.facet_count(); ++x) {
    Json f = Json::array();
    for (VertexId v : c.facet(x)) f.push_back(c.vertex_ids()[v]);
    facets.push_back(std::move(f));
  }
  j["facets"] = std::move(facets);
  return j;
}

SimplicialModel simplicial_from_json(const Json& j) {
  Signature sig = signature_from_json(j);
  if (!j.contains("vertices") || !j.at("vertices").is_object())
    fail(Errc::bad_params, "missing \"vertices\" object");
  std::vector<VertexSpec> vertices;
  for (const auto& [id, spec] : j.at("vertices").items()) {
    VertexSpec v;
    v.id = id;
    if (!spec.contains("colour") || !spec.at("colour").is_string())
      fail(Errc::bad_params, "vertex '" + id + "' needs a \"colour\"");
    v.colour = spec.at("colour").get<std::string>();
    if (spec.contains("atoms")) v.atoms = string_list(spec.at("atoms"), "atoms");
    vertices.push_back(std::move(v));
  }
  if (!j.contains("facets")) fail(Errc::bad_params, "missing \"facets\"");
  std::vector<std::vector<std::string>> facets;
  for (const auto& f : j.at("facets")) facets.push_back(string_list(f, "facet"));
  return build_simplicial(sig, vertices, facets);
}

Json pattern_to_json(const CommPattern& u) {
  Json j;
  j["agents"] = u.agents();
  Json graphs = Json::array();
  for (int g = 0; g < u.size(); ++g) {
    Json pairs = Json::array();
    for (const auto& [from, to] : u.graph(g).pairs())
      pairs.push_back(Json::array({from, to}));
    graphs.push_back(std::move(pairs));
  }
  j["graphs"] = std::move(graphs);
  return j;
}

CommPattern pattern_from_json(const Json& j) {
  if (!j.contains("agents")) fail(Errc::bad_params, "missing \"agents\"");
  auto agents = string_list(j.at("agents"), "agents");
  if (j.contains("gen")) {
    std::map<std::string, std::string> params;
    if (j.contains("params"))
      for (const auto& [k, v] : j.at("params").items())
        params[k] = v.is_string() ? v.get<std::string>() : v.dump();
    return gen_pattern(j.at("gen").get<std::string>(), agents, params);
  }
  if (!j.contains("graphs")) fail(Errc::bad_params, "missing \"graphs\" or \"gen\"");
  std::vector<CommGraph> graphs;
  for (const auto& g : j.at("graphs")) {
    std::vector<std::pair<std::string, std::string>> pairs;
    if (!g.is_array()) fail(Errc::bad_params, "graph must be a list of pairs");
    for (const auto& p : g) {
      auto pair = string_list(p, "graph pair");
      if (pair.size() != 2)
        fail(Errc::bad_params, "graph pairs must have two members");
      pairs.emplace_back(pair[0], pair[1]);
    }
    graphs.emplace_back(agents, pairs, /*auto_reflexive=*/false);
  }
  return CommPattern::of_graphs(graphs);
}

FileKind detect_kind(const Json& j) {
  if (!j.is_object()) fail(Errc::bad_params, "expected a JSON object");
  if (j.contains("relations") || j.contains("worlds")) return FileKind::kripke;
  if (j.contains("facets") || j.contains("vertices"))
    return FileKind::simplicial;
  if (j.contains("graphs") || j.contains("gen")) return FileKind::pattern;
  fail(Errc::bad_params,
       "cannot tell what this file is: expected \"relations\", \"facets\" "
       "or \"graphs\"");
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::bad_params, "cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    fail(Errc::syntax_error, "bad JSON in '" + path + "': " + e.what());
  }
  return j;
}

void save_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) fail(Errc::bad_params, "cannot write '" + path + "'");
  out << dump_json(j);
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cpl
