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

#ifndef CPL_GENERATE_HPP
#define CPL_GENERATE_HPP

#include <functional>
#include <random>

#include "cpl/formula.hpp"
#include "cpl/model.hpp"
#include "cpl/simplicial.hpp"

namespace cpl {

using Rng = std::mt19937_64;

/// Enumerates every local model over the signature with 1..max_worlds
/// worlds (worlds named w1..wk): per agent all set partitions paired
/// with all class-constant valuations of that agent's atoms. The visitor
/// returns false to stop early; the function returns false iff stopped.
bool for_each_local_model(
    const Signature& sig, int max_worlds,
    const std::function<bool(const EpistemicModel&)>& visit);

/// Uniform-ish random local model with 1..max_worlds worlds.
EpistemicModel random_local_model(const Signature& sig, int max_worlds,
                                  Rng& rng);

/// Random pure chromatic simplicial model with 1..max_facets facets,
/// grown by chaining fresh or reused per-colour vertices.
SimplicialModel random_simplicial_model(const Signature& sig, int max_facets,
                                        Rng& rng);

/// Random pattern of 1..max_graphs distinct reflexive graphs.
CommPattern random_pattern(const std::vector<std::string>& agents,
                           int max_graphs, Rng& rng);

/// Random formula of bounded connective depth with at most `max_boxes`
/// nested boxes drawn from the pool (pass an empty pool for L^-).
FormulaPtr random_formula(
    const Signature& sig, int depth, int max_boxes,
    const std::vector<std::shared_ptr<const CommPattern>>& pool, Rng& rng);

/// Bisimilarity-preserving mutation: adds `extra` primed copies of
/// random worlds, each sharing its original's classes and valuation.
/// `image` receives the new index of `point_world`.
EpistemicModel duplicate_worlds(const EpistemicModel& m, int extra, Rng& rng,
                                WorldId point_world, WorldId* image);

}  // namespace cpl

#endif
