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

#include "cpl/model.hpp"

#include <algorithm>
#include <unordered_map>

namespace cpl {

const char* errc_name(Errc e) {
  switch (e) {
    case Errc::partition_error: return "PartitionError";
    case Errc::locality_error: return "LocalityError";
    case Errc::unknown_id: return "UnknownId";
    case Errc::unknown_agent: return "UnknownAgent";
    case Errc::unknown_world: return "UnknownWorld";
    case Errc::unknown_atom: return "UnknownAtom";
    case Errc::unknown_facet: return "UnknownFacet";
    case Errc::unknown_face: return "UnknownFace";
    case Errc::unknown_pattern: return "UnknownPattern";
    case Errc::unknown_family: return "UnknownFamily";
    case Errc::empty_group: return "EmptyGroup";
    case Errc::not_reflexive: return "NotReflexive";
    case Errc::agent_set_mismatch: return "AgentSetMismatch";
    case Errc::signature_mismatch: return "SignatureMismatch";
    case Errc::not_chromatic: return "NotChromatic";
    case Errc::not_pure: return "NotPure";
    case Errc::orphan_vertex: return "OrphanVertex";
    case Errc::non_maximal_facet: return "NonMaximalFacet";
    case Errc::valuation_owner_error: return "ValuationOwnerError";
    case Errc::graph_not_in_pattern: return "GraphNotInPattern";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::bad_params: return "BadParams";
    case Errc::bounds_error: return "BoundsError";
    case Errc::too_large: return "TooLarge";
    case Errc::points_bisimilar: return "ArePointsBisimilar";
  }
  return "Error";
}

AgentSet full_agent_set(int n_agents) {
  return n_agents >= 32 ? ~AgentSet{0} : ((AgentSet{1} << n_agents) - 1);
}

namespace {

bool valid_token(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') return false;
  return true;
}

}  // namespace

Signature::Signature(
    std::vector<std::string> agents,
    const std::map<std::string, std::vector<std::string>>& atoms) {
  if (agents.empty()) fail(Errc::bad_params, "agent set must be nonempty");
  std::sort(agents.begin(), agents.end());
  if (std::adjacent_find(agents.begin(), agents.end()) != agents.end())
    fail(Errc::bad_params, "duplicate agent id");
  for (const auto& a : agents)
    if (!valid_token(a)) fail(Errc::bad_params, "bad agent id '" + a + "'");
  if (static_cast<int>(agents.size()) > kMaxAgents)
    fail(Errc::too_large, "at most " + std::to_string(kMaxAgents) +
                              " agents are supported");
  agents_ = std::move(agents);

  for (const auto& [owner, names] : atoms) {
    if (!std::binary_search(agents_.begin(), agents_.end(), owner))
      fail(Errc::unknown_agent, "atom owner '" + owner + "' is not an agent");
    for (const auto& n : names) {
      if (!valid_token(n)) fail(Errc::bad_params, "bad atom name '" + n + "'");
      atoms_.push_back(n + "_" + owner);
    }
  }
  std::sort(atoms_.begin(), atoms_.end());
  if (std::adjacent_find(atoms_.begin(), atoms_.end()) != atoms_.end())
    fail(Errc::bad_params, "duplicate atom");
  if (static_cast<int>(atoms_.size()) > kMaxAtoms)
    fail(Errc::too_large, "at most " + std::to_string(kMaxAtoms) +
                              " atoms are supported");
  owner_.reserve(atoms_.size());
  for (const auto& t : atoms_)
    owner_.push_back(agent_index(split_atom(t).second));
}

AgentId Signature::agent_index(const std::string& name) const {
  auto i = find_agent(name);
  if (!i) fail(Errc::unknown_agent, "unknown agent '" + name + "'");
  return *i;
}

std::optional<AgentId> Signature::find_agent(const std::string& name) const {
  auto it = std::lower_bound(agents_.begin(), agents_.end(), name);
  if (it == agents_.end() || *it != name) return std::nullopt;
  return static_cast<AgentId>(it - agents_.begin());
}

int Signature::atom_index(const std::string& token) const {
  auto i = find_atom(token);
  if (!i) fail(Errc::unknown_atom, "unknown atom '" + token + "'");
  return *i;
}

std::optional<int> Signature::find_atom(const std::string& token) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), token);
  if (it == atoms_.end() || *it != token) return std::nullopt;
  return static_cast<int>(it - atoms_.begin());
}

AtomSet Signature::atoms_of(AgentSet group) const {
  AtomSet out = 0;
  for (size_t i = 0; i < atoms_.size(); ++i)
    if (group & (AgentSet{1} << owner_[i])) out |= AtomSet{1} << i;
  return out;
}

std::pair<std::string, std::string> Signature::split_atom(
    const std::string& token) {
  auto pos = token.rfind('_');
  if (pos == std::string::npos || pos == 0 || pos + 1 == token.size())
    fail(Errc::unknown_atom,
         "atom token '" + token + "' has no owner suffix");
  return {token.substr(0, pos), token.substr(pos + 1)};
}

WorldId EpistemicModel::world_index(const std::string& name) const {
  auto i = find_world(name);
  if (!i) fail(Errc::unknown_world, "unknown world '" + name + "'");
  return *i;
}

std::optional<WorldId> EpistemicModel::find_world(
    const std::string& name) const {
  auto it = std::lower_bound(worlds_.begin(), worlds_.end(), name);
  if (it == worlds_.end() || *it != name) return std::nullopt;
  return static_cast<WorldId>(it - worlds_.begin());
}

bool EpistemicModel::group_related(WorldId v, WorldId w, AgentSet group) const {
  if (group == 0) fail(Errc::empty_group, "group must be nonempty");
  for (int a = 0; a < sig_.agent_count(); ++a)
    if ((group & (AgentSet{1} << a)) && class_of_[a][v] != class_of_[a][w])
      return false;
  return true;
}

std::vector<int> EpistemicModel::meet_partition(AgentSet group) const {
  if (group == 0) fail(Errc::empty_group, "group must be nonempty");
  int n = world_count();
  // Fold one agent at a time, renumbering pairs by first occurrence;
  // block ids stay deterministic in world order.
  std::vector<int> out;
  bool first = true;
  for (int a = 0; a < sig_.agent_count(); ++a) {
    if (!(group & (AgentSet{1} << a))) continue;
    if (first) {
      out = class_of_[a];
      first = false;
      continue;
    }
    std::unordered_map<std::uint64_t, int> seen;
    seen.reserve(n);
    for (WorldId w = 0; w < n; ++w) {
      std::uint64_t key =
          (std::uint64_t(out[w]) << 32) | std::uint32_t(class_of_[a][w]);
      auto [it, _] = seen.emplace(key, (int)seen.size());
      out[w] = it->second;
    }
  }
  return out;
}

ModelBuilder& ModelBuilder::world(const std::string& name,
                                  const std::vector<std::string>& true_atoms) {
  worlds_.emplace_back(name, true_atoms);
  return *this;
}

ModelBuilder& ModelBuilder::relation(
    const std::string& agent,
    const std::vector<std::vector<std::string>>& blocks) {
  relations_[agent] = blocks;
  return *this;
}

EpistemicModel ModelBuilder::build() const {
  return build_model(sig_, worlds_, relations_);
}

namespace {

struct RawParts {
  std::vector<std::string> names;             // sorted world names
  std::vector<AtomSet> val;                   // by sorted index
  std::vector<std::vector<int>> class_of;     // [agent][world], validated
};

// Shared by build_model and check_locality: resolves names, checks the
// partition shape, and produces index-based parts. Locality is NOT
// checked here.
RawParts resolve_parts(
    const Signature& sig,
    const std::vector<std::pair<std::string, std::vector<std::string>>>&
        worlds,
    const std::map<std::string, std::vector<std::vector<std::string>>>&
        relations) {
  RawParts out;
  if (worlds.empty()) fail(Errc::bad_params, "world set must be nonempty");
  for (const auto& [name, _] : worlds) {
    if (!valid_token(name)) fail(Errc::bad_params, "bad world id '" + name + "'");
    out.names.push_back(name);
  }
  std::sort(out.names.begin(), out.names.end());
  if (std::adjacent_find(out.names.begin(), out.names.end()) != out.names.end())
    fail(Errc::bad_params, "duplicate world id");

  auto index_of = [&](const std::string& w) -> int {
    auto it = std::lower_bound(out.names.begin(), out.names.end(), w);
    if (it == out.names.end() || *it != w)
      fail(Errc::unknown_id, "unknown world '" + w + "'");
    return static_cast<int>(it - out.names.begin());
  };

  int n = static_cast<int>(out.names.size());
  out.val.assign(n, 0);
  for (const auto& [name, atoms] : worlds) {
    AtomSet v = 0;
    for (const auto& t : atoms) v |= AtomSet{1} << sig.atom_index(t);
    out.val[index_of(name)] = v;
  }

  for (const auto& [agent, _] : relations)
    sig.agent_index(agent);  // reject undeclared agents

  out.class_of.assign(sig.agent_count(), {});
  for (int a = 0; a < sig.agent_count(); ++a) {
    const std::string& name = sig.agents()[a];
    std::vector<int> cls(n, -1);
    auto it = relations.find(name);
    int next = 0;
    if (it != relations.end()) {
      for (const auto& block : it->second) {
        if (block.empty())
          fail(Errc::partition_error,
               "agent '" + name + "': empty block in partition");
        int id = next++;
        for (const auto& w : block) {
          int i = index_of(w);
          if (cls[i] != -1)
            fail(Errc::partition_error,
                 "agent '" + name + "': world '" + w +
                     "' appears in two blocks");
          cls[i] = id;
        }
      }
    }
    // Worlds not mentioned form singleton classes; this makes the
    // identity relation expressible as an absent entry while still
    // rejecting genuine overlaps and repeats above.
    for (int i = 0; i < n; ++i)
      if (cls[i] == -1) cls[i] = next++;
    // Renumber blocks by smallest member for canonical block ids.
    std::vector<int> renum(next, -1);
    int fresh = 0;
    for (int i = 0; i < n; ++i)
      if (renum[cls[i]] == -1) renum[cls[i]] = fresh++;
    for (int i = 0; i < n; ++i) cls[i] = renum[cls[i]];
    out.class_of[a] = std::move(cls);
  }
  return out;
}

}  // namespace

std::vector<LocalityViolation> check_locality(
    const Signature& sig,
    const std::vector<std::pair<std::string, std::vector<std::string>>>&
        worlds,
    const std::map<std::string, std::vector<std::vector<std::string>>>&
        relations) {
  RawParts parts = resolve_parts(sig, worlds, relations);
  std::vector<LocalityViolation> out;
  int n = static_cast<int>(parts.names.size());
  for (int a = 0; a < sig.agent_count(); ++a) {
    AtomSet mine = sig.atoms_of(AgentSet{1} << a);
    for (int v = 0; v < n; ++v)
      for (int w = v + 1; w < n; ++w)
        if (parts.class_of[a][v] == parts.class_of[a][w] &&
            (parts.val[v] & mine) != (parts.val[w] & mine))
          out.push_back({sig.agents()[a], parts.names[v], parts.names[w]});
  }
  return out;
}

std::vector<LocalityViolation> check_locality(const EpistemicModel& m) {
  const Signature& sig = m.signature();
  std::vector<LocalityViolation> out;
  for (int a = 0; a < sig.agent_count(); ++a) {
    AtomSet mine = sig.atoms_of(AgentSet{1} << a);
    for (WorldId v = 0; v < m.world_count(); ++v)
      for (WorldId w = v + 1; w < m.world_count(); ++w)
        if (m.related(a, v, w) &&
            (m.valuation(v) & mine) != (m.valuation(w) & mine))
          out.push_back({sig.agents()[a], m.worlds()[v], m.worlds()[w]});
  }
  return out;
}

EpistemicModel build_model(
    const Signature& sig,
    const std::vector<std::pair<std::string, std::vector<std::string>>>&
        worlds,
    const std::map<std::string, std::vector<std::vector<std::string>>>&
        relations) {
  RawParts parts = resolve_parts(sig, worlds, relations);

  auto violations = check_locality(sig, worlds, relations);
  if (!violations.empty()) {
    const auto& v = violations.front();
    fail(Errc::locality_error,
         "agent '" + v.agent + "' cannot distinguish '" + v.world_a +
             "' and '" + v.world_b + "' but their " + v.agent +
             "-atoms differ");
  }

  EpistemicModel m;
  m.sig_ = sig;
  m.worlds_ = std::move(parts.names);
  m.val_ = std::move(parts.val);
  m.class_of_ = std::move(parts.class_of);
  m.blocks_.assign(sig.agent_count(), {});
  int n = m.world_count();
  for (int a = 0; a < sig.agent_count(); ++a) {
    int blocks = 1 + *std::max_element(m.class_of_[a].begin(),
                                       m.class_of_[a].end());
    m.blocks_[a].assign(blocks, {});
    for (WorldId w = 0; w < n; ++w) m.blocks_[a][m.class_of_[a][w]].push_back(w);
  }
  return m;
}

AgentSet agent_set(const Signature& sig,
                   const std::vector<std::string>& names) {
  if (names.empty()) fail(Errc::empty_group, "agent group must be nonempty");
  AgentSet s = 0;
  for (const auto& n : names) s |= AgentSet{1} << sig.agent_index(n);
  return s;
}

std::vector<std::string> agent_names(const Signature& sig, AgentSet set) {
  std::vector<std::string> out;
  for (int a = 0; a < sig.agent_count(); ++a)
    if (set & (AgentSet{1} << a)) out.push_back(sig.agents()[a]);
  return out;
}

}  // namespace cpl
