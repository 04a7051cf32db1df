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

#include "cpl/update.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "cpl/detail/assemble.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cpl {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

void check_same_agents(const std::vector<std::string>& model_agents,
                       const CommPattern& u) {
  if (model_agents != u.agents())
    fail(Errc::agent_set_mismatch,
         "pattern agents do not match the model's agents");
}

}  // namespace

KripkeUpdate update_kripke(const EpistemicModel& m, const CommPattern& u,
                           ExecMode mode) {
  check_same_agents(m.signature().agents(), u);
  const int nw = m.world_count();
  const int ng = u.size();
  const int na = m.signature().agent_count();

  std::vector<std::string> graph_str(ng);
  for (int g = 0; g < ng; ++g) graph_str[g] = u.graph(g).str();

  // New worlds are the pairs (w, R); ids get the canonical "(w|R)" form
  // and the model is re-sorted on them.
  const bool par = mode == ExecMode::parallel;
  std::vector<std::string> names(nw * ng);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
  for (int i = 0; i < nw * ng; ++i)
    names[i] = "(" + m.worlds()[i / ng] + "|" + graph_str[i % ng] + ")";

  std::vector<int> order(names.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return names[a] < names[b]; });
  std::vector<int> new_index(names.size());
  std::vector<std::string> sorted_names(names.size());
  for (size_t i = 0; i < order.size(); ++i) {
    new_index[order[i]] = static_cast<int>(i);
    sorted_names[i] = names[order[i]];
  }

  std::vector<AtomSet> val(names.size());
  for (int w = 0; w < nw; ++w)
    for (int g = 0; g < ng; ++g)
      val[new_index[w * ng + g]] = m.valuation(w);

  // In-neighbourhood masks per (agent, graph), and the meet partition of
  // the old model for every distinct mask.
  std::vector<std::vector<AgentSet>> nbhd(na, std::vector<AgentSet>(ng));
  for (int g = 0; g < ng; ++g) {
    CommGraph graph = u.graph(g);
    for (int a = 0; a < na; ++a) nbhd[a][g] = graph.in_neighbourhood(a);
  }
  std::vector<AgentSet> masks;
  for (const auto& row : nbhd)
    for (AgentSet s : row) masks.push_back(s);
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());

  std::vector<std::vector<int>> meet(masks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (par)
#endif
  for (size_t i = 0; i < masks.size(); ++i)
    meet[i] = m.meet_partition(masks[i]);
  auto mask_index = [&](AgentSet s) {
    return std::lower_bound(masks.begin(), masks.end(), s) - masks.begin();
  };

  // (w,R) ~_a (w',R') iff R a = R' a and w, w' share a class of the
  // meet over R a. Keys pack both; ids are renumbered canonically by the
  // assembler, so first-occurrence numbering here just needs to be
  // deterministic.
  std::vector<std::vector<int>> class_of(na,
                                         std::vector<int>(names.size(), -1));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (par)
#endif
  for (int a = 0; a < na; ++a) {
    std::unordered_map<std::uint64_t, int> key_id;
    key_id.reserve(names.size());
    for (int w = 0; w < nw; ++w)
      for (int g = 0; g < ng; ++g) {
        AgentSet s = nbhd[a][g];
        std::uint64_t key = (std::uint64_t(s) << 32) |
                            std::uint32_t(meet[mask_index(s)][w]);
        auto [it, _] = key_id.emplace(key, (int)key_id.size());
        class_of[a][new_index[w * ng + g]] = it->second;
      }
  }

  KripkeUpdate out;
  out.model = detail::Assembler::model(m.signature(), std::move(sorted_names),
                                       std::move(val), std::move(class_of));
  out.world_of.assign(nw, std::vector<WorldId>(ng));
  for (int w = 0; w < nw; ++w)
    for (int g = 0; g < ng; ++g)
      out.world_of[w][g] = new_index[w * ng + g];
  return out;
}

namespace {

struct IntSeqHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b9;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

SimplicialUpdate update_simplicial(const SimplicialModel& c,
                                   const CommPattern& u, ExecMode mode) {
  check_same_agents(c.signature().agents(), u);
  const int nf = c.facet_count();
  const int ng = u.size();
  const int na = c.signature().agent_count();

  std::vector<std::vector<AgentSet>> nbhd(ng, std::vector<AgentSet>(na));
  for (int g = 0; g < ng; ++g) {
    CommGraph graph = u.graph(g);
    for (int a = 0; a < na; ++a) nbhd[g][a] = graph.in_neighbourhood(a);
  }

  // The witness of v in facet Y under R is the face of Y whose colours
  // are exactly R chi(v); with one vertex per colour it is determined by
  // the colour mask, so the parallel pass stores (vertex, mask) pairs
  // and witnesses materialize during deduplication.
  std::vector<std::pair<VertexId, AgentSet>> raw(nf * ng * na);
  const bool par = mode == ExecMode::parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
  for (int i = 0; i < nf * ng; ++i) {
    int x = i / ng, g = i % ng;
    const auto& facet = c.facet(x);
    for (int k = 0; k < na; ++k)
      raw[i * na + k] = {facet[k], nbhd[g][c.colour(facet[k])]};
  }

  // Deduplicate vertices by (base, witness) and facets by vertex set,
  // scanning pairs in (facet, graph) order.
  std::unordered_map<std::vector<int>, int, IntSeqHash> vertex_id;
  std::vector<std::pair<VertexId, std::vector<VertexId>>> vertex_key;
  std::unordered_map<std::vector<int>, int, IntSeqHash> facet_id;
  std::vector<std::vector<int>> facet_raw;
  std::vector<std::vector<FacetId>> facet_of(nf, std::vector<FacetId>(ng));
  vertex_id.reserve(nf * ng * na);
  facet_id.reserve(nf * ng);
  std::vector<int> key;
  for (int i = 0; i < nf * ng; ++i) {
    const auto& facet = c.facet(i / ng);
    std::vector<int> members;
    members.reserve(na);
    for (int k = 0; k < na; ++k) {
      auto [base, colours] = raw[i * na + k];
      key.clear();
      key.push_back(base);
      for (VertexId y : facet)
        if (colours & (AgentSet{1} << c.colour(y))) key.push_back(y);
      auto [it, inserted] = vertex_id.emplace(key, (int)vertex_id.size());
      if (inserted)
        vertex_key.emplace_back(
            base, std::vector<VertexId>(key.begin() + 1, key.end()));
      members.push_back(it->second);
    }
    std::sort(members.begin(), members.end());
    auto [it, inserted] =
        facet_id.emplace(std::move(members), (int)facet_id.size());
    if (inserted) facet_raw.push_back(it->first);
    facet_of[i / ng][i % ng] = it->second;
  }

  // Canonical ids, then re-sort vertices and facets on them.
  int nv = static_cast<int>(vertex_key.size());
  std::vector<std::string> names(nv);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
  for (int v = 0; v < nv; ++v) {
    const auto& [base, witness] = vertex_key[v];
    std::string s = "(" + c.vertex_ids()[base] + "|{";
    for (size_t k = 0; k < witness.size(); ++k) {
      if (k) s += ",";
      s += c.vertex_ids()[witness[k]];
    }
    names[v] = s + "})";
  }
  std::vector<int> vorder(nv);
  std::iota(vorder.begin(), vorder.end(), 0);
  std::sort(vorder.begin(), vorder.end(),
            [&](int a, int b) { return names[a] < names[b]; });
  std::vector<int> vindex(nv);
  std::vector<std::string> sorted_names(nv);
  std::vector<AgentId> colour(nv);
  std::vector<AtomSet> vval(nv);
  for (int i = 0; i < nv; ++i) {
    vindex[vorder[i]] = i;
    sorted_names[i] = names[vorder[i]];
    VertexId base = vertex_key[vorder[i]].first;
    colour[i] = c.colour(base);
    vval[i] = c.vertex_valuation(base);
  }

  int nfr = static_cast<int>(facet_raw.size());
  std::vector<std::vector<VertexId>> facets(nfr);
  for (int f = 0; f < nfr; ++f) {
    for (int v : facet_raw[f]) facets[f].push_back(vindex[v]);
    std::sort(facets[f].begin(), facets[f].end());
  }
  std::vector<int> forder(nfr);
  std::iota(forder.begin(), forder.end(), 0);
  std::sort(forder.begin(), forder.end(),
            [&](int a, int b) { return facets[a] < facets[b]; });
  std::vector<int> findex(nfr);
  std::vector<std::vector<VertexId>> sorted_facets(nfr);
  for (int i = 0; i < nfr; ++i) {
    findex[forder[i]] = i;
    sorted_facets[i] = facets[forder[i]];
  }
  for (auto& row : facet_of)
    for (auto& f : row) f = findex[f];

  SimplicialUpdate out;
  out.model = detail::Assembler::simplicial(
      c.signature(), std::move(sorted_names), std::move(colour),
      std::move(vval), std::move(sorted_facets));
  out.facet_of = std::move(facet_of);
  return out;
}

}  // namespace cpl
