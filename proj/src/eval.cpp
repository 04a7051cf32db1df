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

#include "cpl/eval.hpp"

namespace cpl {

namespace {

AgentSet resolve_group(const Signature& sig,
                       const std::vector<std::string>& group) {
  AgentSet mask = 0;
  for (const auto& a : group) {
    auto i = sig.find_agent(a);
    if (!i)
      fail(Errc::signature_mismatch,
           "formula mentions agent '" + a + "' outside the model signature");
    mask |= AgentSet{1} << *i;
  }
  if (mask == 0) fail(Errc::empty_group, "empty group");
  return mask;
}

int resolve_atom(const Signature& sig, const std::string& token) {
  auto i = sig.find_atom(token);
  if (!i)
    fail(Errc::signature_mismatch,
         "formula mentions atom '" + token + "' outside the model signature");
  return *i;
}

void check_pattern_agents(const Signature& sig, const CommPattern& u) {
  if (u.agents() != sig.agents())
    fail(Errc::agent_set_mismatch,
         "pattern agents do not match the model signature");
}

}  // namespace

KripkeEvaluator::KripkeEvaluator(const EpistemicModel& m, ExecMode mode)
    : mode_(mode) {
  root_.model = &m;
}

bool KripkeEvaluator::eval(WorldId w, const Formula& f) {
  if (w < 0 || w >= root_.model->world_count())
    fail(Errc::unknown_world, "world index out of range");
  return eval_at(root_, w, f);
}

bool KripkeEvaluator::eval(const std::string& world, const Formula& f) {
  return eval_at(root_, root_.model->world_index(world), f);
}

bool KripkeEvaluator::valid_on_model(const Formula& f) {
  for (WorldId w = 0; w < root_.model->world_count(); ++w)
    if (!eval_at(root_, w, f)) return false;
  return true;
}

KripkeEvaluator::Node& KripkeEvaluator::child(Node& node,
                                              const CommPattern& u) {
  std::string key = u.str();
  auto it = node.children.find(key);
  if (it == node.children.end()) {
    auto kid = std::make_unique<Node>();
    kid->update = std::make_unique<KripkeUpdate>(
        update_kripke(*node.model, u, mode_));
    kid->model = &kid->update->model;
    it = node.children.emplace(std::move(key), std::move(kid)).first;
  }
  return *it->second;
}

bool KripkeEvaluator::eval_at(Node& node, WorldId w, const Formula& f) {
  const EpistemicModel& m = *node.model;
  switch (f.kind) {
    case FKind::atom:
      return m.valuation(w) &
             (AtomSet{1} << resolve_atom(m.signature(), f.atom));
    case FKind::neg:
      return !eval_at(node, w, *f.lhs);
    case FKind::conj:
      return eval_at(node, w, *f.lhs) && eval_at(node, w, *f.rhs);
    case FKind::dknow: {
      AgentSet mask = resolve_group(m.signature(), f.group);
      for (WorldId v = 0; v < m.world_count(); ++v)
        if (m.group_related(w, v, mask) && !eval_at(node, v, *f.lhs))
          return false;
      return true;
    }
    case FKind::box: {
      check_pattern_agents(m.signature(), *f.pattern);
      Node& kid = child(node, *f.pattern);
      WorldId moved = kid.update->world_of[w][f.graph];
      return eval_at(kid, moved, *f.lhs);
    }
  }
  return false;
}

SimplicialEvaluator::SimplicialEvaluator(const SimplicialModel& c,
                                         ExecMode mode)
    : mode_(mode) {
  root_.model = &c;
}

bool SimplicialEvaluator::eval(FacetId x, const Formula& f) {
  if (x < 0 || x >= root_.model->facet_count())
    fail(Errc::unknown_facet, "facet index out of range");
  return eval_at(root_, x, f);
}

bool SimplicialEvaluator::valid_on_model(const Formula& f) {
  for (FacetId x = 0; x < root_.model->facet_count(); ++x)
    if (!eval_at(root_, x, f)) return false;
  return true;
}

SimplicialEvaluator::Node& SimplicialEvaluator::child(Node& node,
                                                      const CommPattern& u) {
  std::string key = u.str();
  auto it = node.children.find(key);
  if (it == node.children.end()) {
    auto kid = std::make_unique<Node>();
    kid->update = std::make_unique<SimplicialUpdate>(
        update_simplicial(*node.model, u, mode_));
    kid->model = &kid->update->model;
    it = node.children.emplace(std::move(key), std::move(kid)).first;
  }
  return *it->second;
}

bool SimplicialEvaluator::eval_at(Node& node, FacetId x, const Formula& f) {
  const SimplicialModel& c = *node.model;
  switch (f.kind) {
    case FKind::atom:
      return c.facet_valuation(x) &
             (AtomSet{1} << resolve_atom(c.signature(), f.atom));
    case FKind::neg:
      return !eval_at(node, x, *f.lhs);
    case FKind::conj:
      return eval_at(node, x, *f.lhs) && eval_at(node, x, *f.rhs);
    case FKind::dknow: {
      AgentSet mask = resolve_group(c.signature(), f.group);
      for (FacetId y = 0; y < c.facet_count(); ++y)
        if ((c.intersection_colours(x, y) & mask) == mask &&
            !eval_at(node, y, *f.lhs))
          return false;
      return true;
    }
    case FKind::box: {
      check_pattern_agents(c.signature(), *f.pattern);
      Node& kid = child(node, *f.pattern);
      FacetId moved = kid.update->facet_of[x][f.graph];
      return eval_at(kid, moved, *f.lhs);
    }
  }
  return false;
}

bool eval_kripke(const EpistemicModel& m, const std::string& world,
                 const Formula& f) {
  KripkeEvaluator ev(m);
  return ev.eval(world, f);
}

bool eval_kripke(const EpistemicModel& m, WorldId w, const Formula& f) {
  KripkeEvaluator ev(m);
  return ev.eval(w, f);
}

bool eval_simplicial(const SimplicialModel& c, FacetId x, const Formula& f) {
  SimplicialEvaluator ev(c);
  return ev.eval(x, f);
}

}  // namespace cpl
