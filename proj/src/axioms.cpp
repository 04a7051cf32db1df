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

#include "cpl/axioms.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "cpl/falsify.hpp"

namespace cpl {

namespace {

using Pat = std::shared_ptr<const CommPattern>;

// chi[p/f]: uniform substitution of an atom.
FormulaPtr subst(const FormulaPtr& chi, const std::string& atom,
                 const FormulaPtr& f) {
  switch (chi->kind) {
    case FKind::atom:
      return chi->atom == atom ? f : chi;
    case FKind::neg:
      return f_neg(subst(chi->lhs, atom, f));
    case FKind::conj:
      return f_and(subst(chi->lhs, atom, f), subst(chi->rhs, atom, f));
    case FKind::dknow:
      return f_dk(chi->group, subst(chi->lhs, atom, f));
    case FKind::box:
      return f_box(chi->pattern, chi->graph, subst(chi->lhs, atom, f));
  }
  return chi;
}

struct Instance {
  std::string axiom;
  FormulaPtr formula;
};

// The literal right-hand side of the knowledge reduction schema: the
// conjunction over the graphs informing the group like R does, in
// canonical order, of D over R's informed set with the box kept inside.
FormulaPtr c4_rhs(const Pat& pat, int g,
                  const std::vector<std::string>& group,
                  const FormulaPtr& phi) {
  CommGraph r = pat->graph(g);
  AgentSet mask = 0;
  for (const auto& name : group) {
    auto it =
        std::lower_bound(pat->agents().begin(), pat->agents().end(), name);
    mask |= AgentSet{1} << (it - pat->agents().begin());
  }
  AgentSet informed = r.in_neighbourhood(mask);
  std::vector<std::string> informed_names;
  for (int a = 0; a < pat->agent_count(); ++a)
    if (informed & (AgentSet{1} << a))
      informed_names.push_back(pat->agents()[a]);
  std::vector<FormulaPtr> conjuncts;
  for (int g2 = 0; g2 < pat->size(); ++g2)
    if (group_view_equal(pat->graph(g2), r, mask))
      conjuncts.push_back(f_dk(informed_names, f_box(pat, g2, phi)));
  return f_and_all(conjuncts);
}

// Every nonempty set of reflexive graphs over the given agents, pointed
// at each member graph.
std::vector<std::pair<Pat, int>> all_pointed_patterns(
    const std::vector<std::string>& agents) {
  int n = static_cast<int>(agents.size());
  std::vector<GraphBits> graphs;
  GraphBits id = 0;
  for (int i = 0; i < n; ++i) id |= GraphBits{1} << (i * n + i);
  int free_bits = n * n - n;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << free_bits); ++m) {
    GraphBits g = id;
    int b = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) {
          if (m & (std::uint64_t{1} << b)) g |= GraphBits{1} << (i * n + j);
          ++b;
        }
    graphs.push_back(g);
  }
  std::vector<std::pair<Pat, int>> out;
  for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << graphs.size());
       ++sub) {
    std::vector<GraphBits> chosen;
    for (size_t i = 0; i < graphs.size(); ++i)
      if (sub & (std::uint64_t{1} << i)) chosen.push_back(graphs[i]);
    auto pat = std::make_shared<CommPattern>(agents, chosen);
    for (int g = 0; g < pat->size(); ++g) out.emplace_back(pat, g);
  }
  return out;
}

// The schema instances checked in the exhaustive phase, over two agents
// with one atom each.
std::vector<Instance> exhaustive_instances(const Signature& sig) {
  const std::string a = sig.agents()[0], b = sig.agents()[1];
  FormulaPtr pa = f_atom(sig.atoms()[0]);  // p_a
  FormulaPtr pb = f_atom(sig.atoms()[1]);  // p_b
  std::vector<FormulaPtr> samples = {pa, pb, f_neg(pa), f_know(a, pa),
                                     f_and(pa, pb)};
  std::vector<FormulaPtr> small = {pa, f_neg(pb)};
  std::vector<std::vector<std::string>> groups = {{a}, {b}, {a, b}};
  auto pointed = all_pointed_patterns(sig.agents());

  std::vector<Instance> out;
  auto add = [&](const std::string& name, FormulaPtr f) {
    out.push_back({name, std::move(f)});
  };

  for (const auto& phi : samples) {
    add("P", f_implies(phi, phi));
    add("P", f_or(phi, f_neg(phi)));
    add("P", f_iff(f_neg(f_neg(phi)), phi));
    for (const auto& psi : small) add("P", f_implies(f_and(phi, psi), phi));
  }

  add("L", f_or(f_know(a, pa), f_know(a, f_neg(pa))));
  add("L", f_or(f_know(b, pb), f_know(b, f_neg(pb))));

  for (const auto& g : groups) {
    for (const auto& phi : small)
      for (const auto& psi : small)
        add("K^D", f_implies(f_dk(g, f_implies(phi, psi)),
                             f_implies(f_dk(g, phi), f_dk(g, psi))));
    for (const auto& phi : samples) {
      add("T^D", f_implies(f_dk(g, phi), phi));
      add("4^D", f_implies(f_dk(g, phi), f_dk(g, f_dk(g, phi))));
      add("5^D",
          f_implies(f_neg(f_dk(g, phi)), f_dk(g, f_neg(f_dk(g, phi)))));
    }
  }

  const std::vector<std::pair<std::vector<std::string>,
                              std::vector<std::string>>>
      nested = {{{a}, {a}}, {{a}, {a, b}}, {{b}, {a, b}}, {{a, b}, {a, b}}};
  for (const auto& [small_g, big_g] : nested)
    for (const auto& phi : samples)
      add("W", f_implies(f_dk(small_g, phi), f_dk(big_g, phi)));

  for (const auto& [pat, g] : pointed) {
    add("C1", f_iff(f_box(pat, g, pa), pa));
    add("C1", f_iff(f_box(pat, g, pb), pb));
    for (const auto& phi : small) {
      add("C2", f_iff(f_box(pat, g, f_neg(phi)), f_neg(f_box(pat, g, phi))));
      add("C3", f_iff(f_box(pat, g, f_and(phi, pb)),
                      f_and(f_box(pat, g, phi), f_box(pat, g, pb))));
    }
    for (const auto& grp : groups)
      add("C4", f_iff(f_box(pat, g, f_dk(grp, pa)), c4_rhs(pat, g, grp, pa)));
  }

  // Rule shapes: premises are (checked) validities; conclusions must
  // survive falsification too.
  FormulaPtr valid_premise = f_or(f_know(a, pa), f_know(a, f_neg(pa)));
  for (const auto& g : groups) add("N^D", f_dk(g, valid_premise));
  add("N(.)", f_box(pointed[0].first, pointed[0].second, valid_premise));
  add("N(.)", f_box(pointed.back().first, pointed.back().second,
                    valid_premise));
  {
    FormulaPtr phi = pa, psi = f_and(pa, pa);  // trivially equivalent pair
    FormulaPtr chi = f_dk({a, b}, f_and(pa, f_neg(pb)));
    add("RE", f_iff(subst(chi, pa->atom, phi), subst(chi, pa->atom, psi)));
    FormulaPtr chi2 = f_box(pointed[1].first, pointed[1].second, pa);
    add("RE", f_iff(subst(chi2, pa->atom, phi), subst(chi2, pa->atom, psi)));
  }

  // D_A phi <-> phi is valid thanks to locality; proper subgroups are a
  // control below.
  for (const auto& phi : samples)
    add("D_A", f_iff(f_dk({a, b}, phi), phi));

  return out;
}

std::vector<Instance> control_instances(const Signature& sig) {
  const std::string a = sig.agents()[0], b = sig.agents()[1];
  FormulaPtr pa = f_atom(sig.atoms()[0]);
  FormulaPtr pb = f_atom(sig.atoms()[1]);
  return {
      {"control:K_a p_b", f_or(f_know(a, pb), f_know(a, f_neg(pb)))},
      {"control:D_B phi", f_iff(f_dk({a}, pb), pb)},
  };
}

}  // namespace

std::vector<AxiomReport> run_axiom_suite(const AxiomSuiteOptions& options) {
  std::map<std::string, AxiomReport> reports;
  auto ensure = [&](const std::string& name, bool expect_valid) -> AxiomReport& {
    auto [it, inserted] = reports.emplace(name, AxiomReport{});
    if (inserted) {
      it->second.name = name;
      it->second.expect_valid = expect_valid;
    }
    return it->second;
  };

  auto check = [&](const Instance& inst, bool expect_valid,
                   const Signature& sig, const FalsifyBounds& bounds,
                   std::uint64_t seed, bool simplicial_too) {
    AxiomReport& rep = ensure(inst.axiom, expect_valid);
    rep.instances++;
    if (rep.counterexample_found) return;  // one witness is enough
    if (auto ce = search_counterexample(inst.formula, sig, bounds, seed)) {
      rep.counterexample_found = true;
      rep.detail = to_string(*inst.formula) + "  fails at world " +
                   ce->world + " (epistemic)";
      return;
    }
    if (simplicial_too) {
      FalsifyBounds sb = bounds;
      if (sb.trials > 0) sb.trials = options.random_simplicial_trials;
      if (auto ce = search_counterexample_simplicial(inst.formula, sig, sb,
                                                     seed)) {
        rep.counterexample_found = true;
        rep.detail = to_string(*inst.formula) + "  fails at facet " +
                     ce->facet + " (simplicial)";
      }
    }
  };

  // Exhaustive phase over two agents with one atom each.
  Signature sig2({"a", "b"}, {{"a", {"p"}}, {"b", {"p"}}});
  FalsifyBounds exhaustive{3, 2, 1, 0};
  std::uint64_t seed = options.seed;
  for (const auto& inst : exhaustive_instances(sig2))
    check(inst, true, sig2, exhaustive, seed++, options.both_semantics);
  for (const auto& inst : control_instances(sig2))
    check(inst, false, sig2, exhaustive, seed++, options.both_semantics);

  // Random phase over three agents: random instances of every schema.
  if (!options.exhaustive_only) {
    Signature sig3({"a", "b", "c"},
                   {{"a", {"p"}}, {"b", {"p"}}, {"c", {"p"}}});
    Rng rng(options.seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<Pat> pool;
    for (int i = 0; i < 6; ++i)
      pool.push_back(std::make_shared<CommPattern>(
          random_pattern(sig3.agents(), 4, rng)));
    FalsifyBounds random_bounds{4, 3, 1, options.random_kripke_trials};

    auto rand_group = [&] {
      std::vector<std::string> g;
      for (const auto& name : sig3.agents())
        if (rng() & 1) g.push_back(name);
      if (g.empty()) g.push_back(sig3.agents()[rng() % 3]);
      return g;
    };
    auto rand_phi = [&] { return random_formula(sig3, 2, 0, {}, rng); };
    auto rand_pointed = [&] {
      const auto& pat = pool[rng() % pool.size()];
      return std::make_pair(pat, static_cast<int>(rng() % pat->size()));
    };

    for (int i = 0; i < options.random_instances; ++i) {
      FormulaPtr phi = rand_phi(), psi = rand_phi();
      auto grp = rand_group();
      auto grp_big = grp;
      for (const auto& name : sig3.agents())
        if (rng() & 1) grp_big.push_back(name);
      auto [pat, g] = rand_pointed();

      std::vector<Instance> batch = {
          {"P", f_implies(f_and(phi, psi), phi)},
          {"K^D", f_implies(f_dk(grp, f_implies(phi, psi)),
                            f_implies(f_dk(grp, phi), f_dk(grp, psi)))},
          {"T^D", f_implies(f_dk(grp, phi), phi)},
          {"4^D", f_implies(f_dk(grp, phi), f_dk(grp, f_dk(grp, phi)))},
          {"5^D", f_implies(f_neg(f_dk(grp, phi)),
                            f_dk(grp, f_neg(f_dk(grp, phi))))},
          {"W", f_implies(f_dk(grp, phi), f_dk(grp_big, phi))},
          {"C2", f_iff(f_box(pat, g, f_neg(phi)),
                       f_neg(f_box(pat, g, phi)))},
          {"C3", f_iff(f_box(pat, g, f_and(phi, psi)),
                       f_and(f_box(pat, g, phi), f_box(pat, g, psi)))},
      };
      batch.push_back({"C4", f_iff(f_box(pat, g, f_dk(grp, phi)),
                                   c4_rhs(pat, g, grp, phi))});
      FormulaPtr da_phi = rand_phi();
      batch.push_back({"D_A", f_iff(f_dk(sig3.agents(), da_phi), da_phi)});
      for (auto& inst : batch)
        check(inst, true, sig3, random_bounds, seed++,
              options.both_semantics);
    }

    for (const auto& agent : sig3.agents()) {
      FormulaPtr p = f_atom("p_" + agent);
      auto [pat, g] = rand_pointed();
      check({"L", f_or(f_know(agent, p), f_know(agent, f_neg(p)))}, true,
            sig3, random_bounds, seed++, options.both_semantics);
      check({"C1", f_iff(f_box(pat, g, p), p)}, true, sig3, random_bounds,
            seed++, options.both_semantics);
    }
  }

  std::vector<AxiomReport> out;
  for (auto& [_, rep] : reports) out.push_back(std::move(rep));
  return out;
}

}  // namespace cpl
