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

#include "cpl/falsify.hpp"

#include "cpl/duality.hpp"

namespace cpl {

namespace {

void check_bounds(const Signature& sig, const FalsifyBounds& bounds) {
  if (sig.agent_count() > bounds.max_agents)
    fail(Errc::bounds_error, "formula signature has more agents than the bounds allow");
  for (int a = 0; a < sig.agent_count(); ++a) {
    int owned = 0;
    for (int i = 0; i < sig.atom_count(); ++i)
      if (sig.atom_owner(i) == a) ++owned;
    if (owned > bounds.atoms_per_agent)
      fail(Errc::bounds_error,
           "agent '" + sig.agents()[a] + "' owns more atoms than the bounds allow");
  }
  if (bounds.max_worlds < 1) fail(Errc::bounds_error, "max_worlds must be positive");
}

bool exhaustive_core_fits(const Signature& sig) {
  if (sig.agent_count() > 2) return false;
  for (int a = 0; a < sig.agent_count(); ++a) {
    int owned = 0;
    for (int i = 0; i < sig.atom_count(); ++i)
      if (sig.atom_owner(i) == a) ++owned;
    if (owned > 1) return false;
  }
  return true;
}

// First world of the model falsifying f, or -1.
WorldId failing_world(const EpistemicModel& m, const Formula& f) {
  KripkeEvaluator ev(m, ExecMode::serial);
  for (WorldId w = 0; w < m.world_count(); ++w)
    if (!ev.eval(w, f)) return w;
  return -1;
}

FacetId failing_facet(const SimplicialModel& c, const Formula& f) {
  SimplicialEvaluator ev(c, ExecMode::serial);
  for (FacetId x = 0; x < c.facet_count(); ++x)
    if (!ev.eval(x, f)) return x;
  return -1;
}

}  // namespace

std::optional<KripkeCounterexample> search_counterexample(
    const FormulaPtr& f, const Signature& sig, const FalsifyBounds& bounds,
    std::uint64_t seed) {
  check_bounds(sig, bounds);

  std::optional<KripkeCounterexample> found;
  if (exhaustive_core_fits(sig)) {
    for_each_local_model(sig, std::min(3, bounds.max_worlds),
                         [&](const EpistemicModel& m) {
                           WorldId w = failing_world(m, *f);
                           if (w < 0) return true;
                           found = {m, m.worlds()[w]};
                           return false;
                         });
    if (found) return found;
  }

  Rng rng(seed);
  for (int t = 0; t < bounds.trials; ++t) {
    EpistemicModel m = random_local_model(sig, bounds.max_worlds, rng);
    WorldId w = failing_world(m, *f);
    if (w >= 0) {
      std::string name = m.worlds()[w];
      return KripkeCounterexample{std::move(m), std::move(name)};
    }
  }
  return std::nullopt;
}

std::optional<SimplicialCounterexample> search_counterexample_simplicial(
    const FormulaPtr& f, const Signature& sig, const FalsifyBounds& bounds,
    std::uint64_t seed) {
  check_bounds(sig, bounds);

  std::optional<SimplicialCounterexample> found;
  if (exhaustive_core_fits(sig)) {
    for_each_local_model(sig, std::min(3, bounds.max_worlds),
                         [&](const EpistemicModel& m) {
                           SimplicialModel c = to_simplicial(m).model;
                           FacetId x = failing_facet(c, *f);
                           if (x < 0) return true;
                           found = {c, c.facet_name(x)};
                           return false;
                         });
    if (found) return found;
  }

  // Alternate direct random complexes with translated random models, so
  // the search covers shapes both generators favour.
  Rng rng(seed);
  for (int t = 0; t < bounds.trials; ++t) {
    SimplicialModel c =
        (t & 1) ? to_simplicial(random_local_model(sig, bounds.max_worlds, rng))
                      .model
                : random_simplicial_model(sig, bounds.max_worlds, rng);
    FacetId x = failing_facet(c, *f);
    if (x >= 0) {
      std::string name = c.facet_name(x);
      return SimplicialCounterexample{std::move(c), std::move(name)};
    }
  }
  return std::nullopt;
}

}  // namespace cpl
