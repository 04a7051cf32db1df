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

#include "cpl/detail/assemble.hpp"

#include <algorithm>
#include <cassert>

namespace cpl::detail {

EpistemicModel Assembler::model(Signature sig,
                                std::vector<std::string> sorted_worlds,
                                std::vector<AtomSet> valuation,
                                std::vector<std::vector<int>> class_of) {
  assert(std::is_sorted(sorted_worlds.begin(), sorted_worlds.end()));
  EpistemicModel m;
  m.sig_ = std::move(sig);
  m.worlds_ = std::move(sorted_worlds);
  m.val_ = std::move(valuation);
  int n = m.world_count();
  int na = m.sig_.agent_count();
  m.class_of_.resize(na);
  m.blocks_.resize(na);
  for (int a = 0; a < na; ++a) {
    auto& cls = class_of[a];
    assert(static_cast<int>(cls.size()) == n);
    int max_id = *std::max_element(cls.begin(), cls.end());
    std::vector<int> renum(max_id + 1, -1);
    int fresh = 0;
    for (int w = 0; w < n; ++w)
      if (renum[cls[w]] == -1) renum[cls[w]] = fresh++;
    m.class_of_[a].resize(n);
    m.blocks_[a].assign(fresh, {});
    for (int w = 0; w < n; ++w) {
      int id = renum[cls[w]];
      m.class_of_[a][w] = id;
      m.blocks_[a][id].push_back(w);
    }
  }
  return m;
}

SimplicialModel Assembler::simplicial(
    Signature sig, std::vector<std::string> sorted_vertex_ids,
    std::vector<AgentId> colour, std::vector<AtomSet> vertex_valuation,
    std::vector<std::vector<VertexId>> sorted_facets) {
  assert(std::is_sorted(sorted_vertex_ids.begin(), sorted_vertex_ids.end()));
  assert(std::is_sorted(sorted_facets.begin(), sorted_facets.end()));
  SimplicialModel m;
  m.sig_ = std::move(sig);
  m.vertex_ids_ = std::move(sorted_vertex_ids);
  m.colour_ = std::move(colour);
  m.vval_ = std::move(vertex_valuation);
  m.facets_ = std::move(sorted_facets);
  int na = m.sig_.agent_count();
  m.by_colour_.assign(m.facets_.size(), std::vector<VertexId>(na, -1));
  for (size_t x = 0; x < m.facets_.size(); ++x) {
    assert(static_cast<int>(m.facets_[x].size()) == na);
    for (VertexId v : m.facets_[x]) m.by_colour_[x][m.colour_[v]] = v;
  }
  return m;
}

}  // namespace cpl::detail
