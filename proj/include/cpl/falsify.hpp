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

#ifndef CPL_FALSIFY_HPP
#define CPL_FALSIFY_HPP

#include <cstdint>
#include <optional>

#include "cpl/eval.hpp"
#include "cpl/generate.hpp"

namespace cpl {

/// Search limits for the validity falsifier. The exhaustive core always
/// runs first when the signature is small enough for it (at most two
/// agents, one atom each, three worlds); `trials` random models at the
/// full bounds follow.
struct FalsifyBounds {
  int max_worlds = 4;
  int max_agents = 3;
  int atoms_per_agent = 1;
  int trials = 1000;
};

struct KripkeCounterexample {
  EpistemicModel model;
  std::string world;
};

struct SimplicialCounterexample {
  SimplicialModel model;
  std::string facet;
};

/// Bounded validity falsification: returns a pointed model where the
/// formula fails, or nothing when every model searched satisfies it.
/// A none-found answer is a bounded-search claim, not a validity proof.
/// Deterministic for a fixed seed. Throws bounds_error when the
/// signature exceeds the bounds.
std::optional<KripkeCounterexample> search_counterexample(
    const FormulaPtr& f, const Signature& sig, const FalsifyBounds& bounds,
    std::uint64_t seed);

/// The same search against the simplicial semantics: translated images
/// of the exhaustive core, then random simplicial models.
std::optional<SimplicialCounterexample> search_counterexample_simplicial(
    const FormulaPtr& f, const Signature& sig, const FalsifyBounds& bounds,
    std::uint64_t seed);

}  // namespace cpl

#endif
