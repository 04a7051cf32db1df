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

#include "cpl/iso.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace cpl {

bool kripke_isomorphic(const EpistemicModel& a, const EpistemicModel& b) {
  if (!(a.signature() == b.signature())) return false;
  int n = a.world_count();
  if (n != b.world_count()) return false;
  int na = a.signature().agent_count();

  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> place = [&](int w) -> bool {
    if (w == n) return true;
    for (int x = 0; x < n; ++x) {
      if (used[x] || a.valuation(w) != b.valuation(x)) continue;
      bool ok = true;
      for (int v = 0; v < w && ok; ++v)
        for (int ag = 0; ag < na && ok; ++ag)
          if (a.related(ag, v, w) != b.related(ag, map[v], x)) ok = false;
      if (!ok) continue;
      map[w] = x;
      used[x] = true;
      if (place(w + 1)) return true;
      used[x] = false;
      map[w] = -1;
    }
    return false;
  };
  return place(0);
}

bool simplicial_isomorphic(const SimplicialModel& a,
                           const SimplicialModel& b) {
  if (!(a.signature() == b.signature())) return false;
  int nv = a.vertex_count();
  if (nv != b.vertex_count() || a.facet_count() != b.facet_count())
    return false;

  std::vector<int> map(nv, -1);
  std::vector<bool> used(nv, false);
  auto facets_match = [&]() {
    std::set<std::vector<VertexId>> images;
    for (const auto& f : a.facets()) {
      std::vector<VertexId> img;
      for (VertexId v : f) img.push_back(map[v]);
      std::sort(img.begin(), img.end());
      images.insert(std::move(img));
    }
    std::set<std::vector<VertexId>> target(b.facets().begin(),
                                           b.facets().end());
    return images == target;
  };
  std::function<bool(int)> place = [&](int v) -> bool {
    if (v == nv) return facets_match();
    for (int x = 0; x < nv; ++x) {
      if (used[x] || a.colour(v) != b.colour(x) ||
          a.vertex_valuation(v) != b.vertex_valuation(x))
        continue;
      map[v] = x;
      used[x] = true;
      if (place(v + 1)) return true;
      used[x] = false;
      map[v] = -1;
    }
    return false;
  };
  return place(0);
}

}  // namespace cpl
