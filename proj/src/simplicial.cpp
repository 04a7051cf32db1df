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

#include "cpl/simplicial.hpp"

#include <algorithm>

namespace cpl {

VertexId SimplicialModel::vertex_index(const std::string& id) const {
  auto v = find_vertex(id);
  if (!v) fail(Errc::unknown_id, "unknown vertex '" + id + "'");
  return *v;
}

std::optional<VertexId> SimplicialModel::find_vertex(
    const std::string& id) const {
  auto it = std::lower_bound(vertex_ids_.begin(), vertex_ids_.end(), id);
  if (it == vertex_ids_.end() || *it != id) return std::nullopt;
  return static_cast<VertexId>(it - vertex_ids_.begin());
}

FacetId SimplicialModel::facet_index(
    const std::vector<std::string>& vertex_names) const {
  auto f = find_facet(vertex_names);
  if (!f) fail(Errc::unknown_facet, "no such facet");
  return *f;
}

std::optional<FacetId> SimplicialModel::find_facet(
    const std::vector<std::string>& vertex_names) const {
  std::vector<VertexId> key;
  for (const auto& n : vertex_names) {
    auto v = find_vertex(n);
    if (!v) return std::nullopt;
    key.push_back(*v);
  }
  std::sort(key.begin(), key.end());
  auto it = std::lower_bound(facets_.begin(), facets_.end(), key);
  if (it == facets_.end() || *it != key) return std::nullopt;
  return static_cast<FacetId>(it - facets_.begin());
}

std::string SimplicialModel::facet_name(FacetId x) const {
  std::string out = "{";
  for (size_t i = 0; i < facets_[x].size(); ++i) {
    if (i) out += ",";
    out += vertex_ids_[facets_[x][i]];
  }
  return out + "}";
}

FacetId SimplicialModel::facet_by_name(const std::string& name) const {
  // Accepts "{v,w,y}" or a bare comma-separated list. Vertex ids may
  // themselves contain braced parts (translated or updated models), so
  // only top-level commas separate.
  std::string body = name;
  if (!body.empty() && body.front() == '{' && body.back() == '}')
    body = body.substr(1, body.size() - 2);
  std::vector<std::string> names;
  std::string cur;
  int depth = 0;
  for (char c : body) {
    if (c == '{' || c == '(') ++depth;
    if (c == '}' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      names.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) names.push_back(cur);
  return facet_index(names);
}

AgentSet SimplicialModel::intersection_colours(FacetId x, FacetId y) const {
  if (x < 0 || x >= facet_count() || y < 0 || y >= facet_count())
    fail(Errc::unknown_facet, "facet index out of range");
  AgentSet out = 0;
  for (int a = 0; a < sig_.agent_count(); ++a)
    if (by_colour_[x][a] == by_colour_[y][a]) out |= AgentSet{1} << a;
  return out;
}

AtomSet SimplicialModel::facet_valuation(FacetId x) const {
  if (x < 0 || x >= facet_count())
    fail(Errc::unknown_facet, "facet index out of range");
  AtomSet out = 0;
  for (VertexId v : facets_[x]) out |= vval_[v];
  return out;
}

AtomSet SimplicialModel::face_valuation(
    const std::vector<std::string>& vertex_names) const {
  if (vertex_names.empty()) fail(Errc::unknown_face, "empty face");
  std::vector<VertexId> face;
  for (const auto& n : vertex_names) face.push_back(vertex_index(n));
  std::sort(face.begin(), face.end());
  face.erase(std::unique(face.begin(), face.end()), face.end());
  bool inside = false;
  for (const auto& f : facets_) {
    if (std::includes(f.begin(), f.end(), face.begin(), face.end())) {
      inside = true;
      break;
    }
  }
  if (!inside)
    fail(Errc::unknown_face, "vertex set is not a face of any facet");
  AtomSet out = 0;
  for (VertexId v : face) out |= vval_[v];
  return out;
}

SimplicialModel build_simplicial(
    const Signature& sig, const std::vector<VertexSpec>& vertices,
    const std::vector<std::vector<std::string>>& facets) {
  SimplicialModel m;
  m.sig_ = sig;

  for (const auto& v : vertices) m.vertex_ids_.push_back(v.id);
  std::sort(m.vertex_ids_.begin(), m.vertex_ids_.end());
  if (std::adjacent_find(m.vertex_ids_.begin(), m.vertex_ids_.end()) !=
      m.vertex_ids_.end())
    fail(Errc::bad_params, "duplicate vertex id");

  int nv = m.vertex_count();
  m.colour_.assign(nv, -1);
  m.vval_.assign(nv, 0);
  for (const auto& v : vertices) {
    VertexId i = m.vertex_index(v.id);
    m.colour_[i] = sig.agent_index(v.colour);
    for (const auto& t : v.atoms) {
      int atom = sig.atom_index(t);
      if (sig.atom_owner(atom) != m.colour_[i])
        fail(Errc::valuation_owner_error,
             "vertex '" + v.id + "' of colour '" + v.colour +
                 "' carries foreign atom '" + t + "'");
      m.vval_[i] |= AtomSet{1} << atom;
    }
  }

  int n_agents = sig.agent_count();
  for (const auto& f : facets) {
    std::vector<VertexId> facet;
    for (const auto& name : f) {
      auto v = m.find_vertex(name);
      if (!v) fail(Errc::unknown_id, "unknown vertex '" + name + "'");
      facet.push_back(*v);
    }
    std::sort(facet.begin(), facet.end());
    facet.erase(std::unique(facet.begin(), facet.end()), facet.end());
    AgentSet colours = 0;
    for (VertexId v : facet) {
      AgentSet bit = AgentSet{1} << m.colour_[v];
      if (colours & bit)
        fail(Errc::not_chromatic,
             "facet " + std::to_string(m.facets_.size()) +
                 " has two vertices of colour '" +
                 sig.agents()[m.colour_[v]] + "'");
      colours |= bit;
    }
    if (static_cast<int>(facet.size()) != n_agents)
      fail(Errc::not_pure, "facet has " + std::to_string(facet.size()) +
                               " vertices; expected one per agent (" +
                               std::to_string(n_agents) + ")");
    m.facets_.push_back(std::move(facet));
  }
  if (m.facets_.empty()) fail(Errc::bad_params, "facet set must be nonempty");

  std::sort(m.facets_.begin(), m.facets_.end());
  m.facets_.erase(std::unique(m.facets_.begin(), m.facets_.end()),
                  m.facets_.end());

  // With purity enforced, a strict subset facet would have fewer
  // vertices; this check only matters for callers bypassing purity.
  for (size_t i = 0; i < m.facets_.size(); ++i)
    for (size_t j = 0; j < m.facets_.size(); ++j)
      if (i != j && std::includes(m.facets_[j].begin(), m.facets_[j].end(),
                                  m.facets_[i].begin(), m.facets_[i].end()))
        fail(Errc::non_maximal_facet, "facet contained in another facet");

  std::vector<bool> used(nv, false);
  for (const auto& f : m.facets_)
    for (VertexId v : f) used[v] = true;
  for (VertexId v = 0; v < nv; ++v)
    if (!used[v])
      fail(Errc::orphan_vertex,
           "vertex '" + m.vertex_ids_[v] + "' belongs to no facet");

  m.by_colour_.assign(m.facets_.size(), std::vector<VertexId>(n_agents, -1));
  for (size_t x = 0; x < m.facets_.size(); ++x)
    for (VertexId v : m.facets_[x]) m.by_colour_[x][m.colour_[v]] = v;
  return m;
}

}  // namespace cpl
