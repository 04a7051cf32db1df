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

#include "cpl/generate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cpl/detail/assemble.hpp"

namespace cpl {

namespace {

// All set partitions of k elements as restricted growth strings.
std::vector<std::vector<int>> set_partitions(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> rgs(k, 0);
  std::function<void(int, int)> rec = [&](int i, int max_used) {
    if (i == k) {
      out.push_back(rgs);
      return;
    }
    for (int c = 0; c <= max_used + 1; ++c) {
      rgs[i] = c;
      rec(i + 1, std::max(max_used, c));
    }
  };
  rec(1, 0);  // rgs[0] is fixed to 0
  if (k == 0) out.clear();
  return out;
}

// One agent's possible contribution: its partition and, per class, the
// subset of its atoms true there (locality makes them class-constant).
struct AgentChoice {
  std::vector<int> class_of;
  std::vector<AtomSet> class_val;
};

std::vector<AgentChoice> agent_choices(const Signature& sig, AgentId a,
                                       int k) {
  std::vector<int> my_atoms;
  for (int i = 0; i < sig.atom_count(); ++i)
    if (sig.atom_owner(i) == a) my_atoms.push_back(i);
  int t = static_cast<int>(my_atoms.size());

  std::vector<AgentChoice> out;
  for (auto& rgs : set_partitions(k)) {
    int classes = 1 + *std::max_element(rgs.begin(), rgs.end());
    std::uint64_t combos = std::uint64_t{1} << (classes * t);
    for (std::uint64_t m = 0; m < combos; ++m) {
      AgentChoice choice;
      choice.class_of = rgs;
      choice.class_val.assign(classes, 0);
      for (int c = 0; c < classes; ++c)
        for (int j = 0; j < t; ++j)
          if (m & (std::uint64_t{1} << (c * t + j)))
            choice.class_val[c] |= AtomSet{1} << my_atoms[j];
      out.push_back(std::move(choice));
    }
  }
  return out;
}

std::vector<std::string> world_names(int k) {
  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) names.push_back("w" + std::to_string(i));
  std::sort(names.begin(), names.end());
  return names;
}

EpistemicModel assemble(const Signature& sig, int k,
                        const std::vector<AgentChoice>& choices) {
  auto names = world_names(k);
  std::vector<AtomSet> val(k, 0);
  std::vector<std::vector<int>> class_of(sig.agent_count());
  for (int a = 0; a < sig.agent_count(); ++a) {
    class_of[a] = choices[a].class_of;
    for (int w = 0; w < k; ++w)
      val[w] |= choices[a].class_val[choices[a].class_of[w]];
  }
  return detail::Assembler::model(sig, std::move(names), std::move(val),
                                  std::move(class_of));
}

}  // namespace

bool for_each_local_model(
    const Signature& sig, int max_worlds,
    const std::function<bool(const EpistemicModel&)>& visit) {
  // Worlds are named w1..wk, so the generated name order only stays
  // canonical up to nine worlds; well beyond the enumeration sizes that
  // are feasible anyway.
  if (max_worlds > 9) fail(Errc::bounds_error, "enumeration capped at 9 worlds");
  int na = sig.agent_count();
  for (int k = 1; k <= max_worlds; ++k) {
    std::vector<std::vector<AgentChoice>> options(na);
    for (int a = 0; a < na; ++a) options[a] = agent_choices(sig, a, k);
    std::vector<AgentChoice> current(na);
    std::function<bool(int)> rec = [&](int a) -> bool {
      if (a == na) return visit(assemble(sig, k, current));
      for (const auto& choice : options[a]) {
        current[a] = choice;
        if (!rec(a + 1)) return false;
      }
      return true;
    };
    if (!rec(0)) return false;
  }
  return true;
}

EpistemicModel random_local_model(const Signature& sig, int max_worlds,
                                  Rng& rng) {
  int k = 1 + static_cast<int>(rng() % max_worlds);
  int na = sig.agent_count();
  std::vector<AgentChoice> choices(na);
  for (int a = 0; a < na; ++a) {
    std::vector<int> my_atoms;
    for (int i = 0; i < sig.atom_count(); ++i)
      if (sig.atom_owner(i) == a) my_atoms.push_back(i);
    auto& c = choices[a];
    c.class_of.assign(k, 0);
    int used = 1;
    for (int w = 1; w < k; ++w) {
      c.class_of[w] = static_cast<int>(rng() % (used + 1));
      if (c.class_of[w] == used) ++used;
    }
    c.class_val.assign(used, 0);
    for (int cls = 0; cls < used; ++cls)
      for (int atom : my_atoms)
        if (rng() & 1) c.class_val[cls] |= AtomSet{1} << atom;
  }
  return assemble(sig, k, choices);
}

SimplicialModel random_simplicial_model(const Signature& sig, int max_facets,
                                        Rng& rng) {
  int nf = 1 + static_cast<int>(rng() % max_facets);
  int na = sig.agent_count();
  std::vector<VertexSpec> vertices;
  std::vector<std::vector<std::string>> facets;
  // Per facet and colour: a fresh vertex, or the same colour's vertex
  // from an earlier facet (gluing the facets along it).
  std::vector<std::vector<std::string>> by_colour;  // [facet][agent]
  for (int f = 0; f < nf; ++f) {
    std::vector<std::string> ids(na);
    for (int a = 0; a < na; ++a) {
      if (f > 0 && (rng() & 1)) {
        ids[a] = by_colour[rng() % f][a];
      } else {
        VertexSpec v;
        v.id = "v" + std::to_string(vertices.size() + 1);
        v.colour = sig.agents()[a];
        for (int i = 0; i < sig.atom_count(); ++i)
          if (sig.atom_owner(i) == a && (rng() & 1))
            v.atoms.push_back(sig.atoms()[i]);
        ids[a] = v.id;
        vertices.push_back(std::move(v));
      }
    }
    by_colour.push_back(ids);
    facets.push_back(std::move(ids));
  }
  return build_simplicial(sig, vertices, facets);
}

CommPattern random_pattern(const std::vector<std::string>& agents,
                           int max_graphs, Rng& rng) {
  int n = static_cast<int>(agents.size());
  int free_bits = n * n - n;
  std::vector<int> free_pos;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) free_pos.push_back(i * n + j);
  GraphBits id = 0;
  for (int i = 0; i < n; ++i) id |= GraphBits{1} << (i * n + i);

  int want = 1 + static_cast<int>(rng() % max_graphs);
  std::set<GraphBits> graphs;
  for (int tries = 0; static_cast<int>(graphs.size()) < want && tries < 64;
       ++tries) {
    GraphBits g = id;
    for (int b = 0; b < free_bits; ++b)
      if (rng() & 1) g |= GraphBits{1} << free_pos[b];
    graphs.insert(g);
  }
  return CommPattern(agents,
                     std::vector<GraphBits>(graphs.begin(), graphs.end()));
}

FormulaPtr random_formula(
    const Signature& sig, int depth, int max_boxes,
    const std::vector<std::shared_ptr<const CommPattern>>& pool, Rng& rng) {
  if (sig.atom_count() == 0)
    fail(Errc::bad_params, "random formulas need at least one atom");
  auto atom = [&] {
    return f_atom(sig.atoms()[rng() % sig.atom_count()]);
  };
  if (depth <= 0) return atom();
  bool box_ok = max_boxes > 0 && !pool.empty();
  switch (rng() % (box_ok ? 5 : 4)) {
    case 0:
      return atom();
    case 1:
      return f_neg(random_formula(sig, depth - 1, max_boxes, pool, rng));
    case 2:
      return f_and(random_formula(sig, depth - 1, max_boxes, pool, rng),
                   random_formula(sig, depth - 1, max_boxes, pool, rng));
    case 3: {
      std::vector<std::string> group;
      for (const auto& a : sig.agents())
        if (rng() & 1) group.push_back(a);
      if (group.empty())
        group.push_back(sig.agents()[rng() % sig.agent_count()]);
      return f_dk(std::move(group),
                  random_formula(sig, depth - 1, max_boxes, pool, rng));
    }
    default: {
      const auto& pat = pool[rng() % pool.size()];
      int g = static_cast<int>(rng() % pat->size());
      return f_box(pat, g,
                   random_formula(sig, depth - 1, max_boxes - 1, pool, rng));
    }
  }
}

EpistemicModel duplicate_worlds(const EpistemicModel& m, int extra, Rng& rng,
                                WorldId point_world, WorldId* image) {
  int n = m.world_count();
  int na = m.signature().agent_count();
  std::vector<std::string> names = m.worlds();
  std::set<std::string> taken(names.begin(), names.end());
  std::vector<AtomSet> val(n);
  std::vector<std::vector<int>> class_of(na, std::vector<int>(n));
  for (int w = 0; w < n; ++w) {
    val[w] = m.valuation(w);
    for (int a = 0; a < na; ++a) class_of[a][w] = m.class_of(a, w);
  }
  for (int e = 0; e < extra; ++e) {
    int base = static_cast<int>(rng() % n);  // duplicate originals only
    std::string name = names[base] + "'";
    while (taken.count(name)) name += "'";
    taken.insert(name);
    names.push_back(name);
    val.push_back(m.valuation(base));
    for (int a = 0; a < na; ++a) class_of[a].push_back(m.class_of(a, base));
  }

  int total = static_cast<int>(names.size());
  std::vector<int> order(total);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return names[a] < names[b]; });
  std::vector<std::string> sorted_names(total);
  std::vector<AtomSet> sorted_val(total);
  std::vector<std::vector<int>> sorted_cls(na, std::vector<int>(total));
  std::vector<int> index(total);
  for (int i = 0; i < total; ++i) {
    index[order[i]] = i;
    sorted_names[i] = names[order[i]];
    sorted_val[i] = val[order[i]];
    for (int a = 0; a < na; ++a) sorted_cls[a][i] = class_of[a][order[i]];
  }
  if (image) *image = index[point_world];
  return detail::Assembler::model(m.signature(), std::move(sorted_names),
                                  std::move(sorted_val),
                                  std::move(sorted_cls));
}

}  // namespace cpl
