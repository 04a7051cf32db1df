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

#include "cpl/duality.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cpl/detail/assemble.hpp"

namespace cpl {

ToSimplicial to_simplicial(const EpistemicModel& m) {
  const Signature& sig = m.signature();
  const int na = sig.agent_count();
  const int nw = m.world_count();

  // One vertex per (agent, class); locality makes the P_a-valuation of a
  // class well defined.
  std::vector<std::vector<int>> vertex_of(na);  // [agent][block] -> raw id
  std::vector<std::string> names;
  std::vector<AgentId> colour;
  std::vector<AtomSet> vval;
  for (int a = 0; a < na; ++a) {
    AtomSet mine = sig.atoms_of(AgentSet{1} << a);
    const auto& blocks = m.blocks(a);
    vertex_of[a].resize(blocks.size());
    for (size_t b = 0; b < blocks.size(); ++b) {
      std::string id = sig.agents()[a] + ":{";
      for (size_t k = 0; k < blocks[b].size(); ++k) {
        if (k) id += ",";
        id += m.worlds()[blocks[b][k]];
      }
      id += "}";
      vertex_of[a][b] = static_cast<int>(names.size());
      names.push_back(std::move(id));
      colour.push_back(a);
      vval.push_back(m.valuation(blocks[b].front()) & mine);
    }
  }

  int nv = static_cast<int>(names.size());
  std::vector<int> vorder(nv);
  std::iota(vorder.begin(), vorder.end(), 0);
  std::sort(vorder.begin(), vorder.end(),
            [&](int a, int b) { return names[a] < names[b]; });
  std::vector<int> vindex(nv);
  std::vector<std::string> sorted_names(nv);
  std::vector<AgentId> sorted_colour(nv);
  std::vector<AtomSet> sorted_vval(nv);
  for (int i = 0; i < nv; ++i) {
    vindex[vorder[i]] = i;
    sorted_names[i] = names[vorder[i]];
    sorted_colour[i] = colour[vorder[i]];
    sorted_vval[i] = vval[vorder[i]];
  }

  // Facets sigma(w); worlds equivalent for every agent collapse.
  std::map<std::vector<VertexId>, int> facet_id;
  std::vector<int> facet_raw_of(nw);
  for (int w = 0; w < nw; ++w) {
    std::vector<VertexId> facet;
    for (int a = 0; a < na; ++a)
      facet.push_back(vindex[vertex_of[a][m.class_of(a, w)]]);
    std::sort(facet.begin(), facet.end());
    auto [it, _] = facet_id.emplace(std::move(facet), (int)facet_id.size());
    facet_raw_of[w] = it->second;
  }
  std::vector<std::vector<VertexId>> facets(facet_id.size());
  for (const auto& [f, id] : facet_id) facets[id] = f;
  int nf = static_cast<int>(facets.size());
  std::vector<int> forder(nf);
  std::iota(forder.begin(), forder.end(), 0);
  std::sort(forder.begin(), forder.end(),
            [&](int a, int b) { return facets[a] < facets[b]; });
  std::vector<int> findex(nf);
  std::vector<std::vector<VertexId>> sorted_facets(nf);
  for (int i = 0; i < nf; ++i) {
    findex[forder[i]] = i;
    sorted_facets[i] = facets[forder[i]];
  }

  ToSimplicial out;
  out.model = detail::Assembler::simplicial(
      sig, std::move(sorted_names), std::move(sorted_colour),
      std::move(sorted_vval), std::move(sorted_facets));
  out.facet_of.resize(nw);
  for (int w = 0; w < nw; ++w) out.facet_of[w] = findex[facet_raw_of[w]];
  return out;
}

ToKripke to_kripke(const SimplicialModel& c) {
  const Signature& sig = c.signature();
  const int na = sig.agent_count();
  const int nf = c.facet_count();

  std::vector<std::string> names(nf);
  for (FacetId x = 0; x < nf; ++x) names[x] = c.facet_name(x);

  std::vector<int> order(nf);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return names[a] < names[b]; });
  std::vector<int> windex(nf);
  std::vector<std::string> sorted_names(nf);
  for (int i = 0; i < nf; ++i) {
    windex[order[i]] = i;
    sorted_names[i] = names[order[i]];
  }

  // X ~_a Y iff the facets share their a-vertex, which partitions the
  // facets by that vertex; L(X) = ell(X).
  std::vector<AtomSet> val(nf);
  std::vector<std::vector<int>> class_of(na, std::vector<int>(nf));
  for (FacetId x = 0; x < nf; ++x) {
    val[windex[x]] = c.facet_valuation(x);
    for (int a = 0; a < na; ++a) class_of[a][windex[x]] = c.vertex_of(x, a);
  }

  ToKripke out;
  out.model = detail::Assembler::model(sig, std::move(sorted_names),
                                       std::move(val), std::move(class_of));
  out.world_of = std::move(windex);
  return out;
}

}  // namespace cpl
