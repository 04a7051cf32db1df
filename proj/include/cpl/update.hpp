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

#ifndef CPL_UPDATE_HPP
#define CPL_UPDATE_HPP

#include <vector>

#include "cpl/exec.hpp"
#include "cpl/model.hpp"
#include "cpl/pattern.hpp"
#include "cpl/simplicial.hpp"

namespace cpl {

/// Result of updating an epistemic model with a communication pattern.
/// The new worlds are the pairs (w, R); `world_of[w][g]` locates the
/// pair of old world `w` and the pattern's g-th graph.
struct KripkeUpdate {
  EpistemicModel model;
  std::vector<std::vector<WorldId>> world_of;
};

/// Result of updating a simplicial model; `facet_of[x][g]` locates the
/// facet generated by old facet `x` and graph `g` (facets generated by
/// different pairs may coincide and are merged).
struct SimplicialUpdate {
  SimplicialModel model;
  std::vector<std::vector<FacetId>> facet_of;
};

/// M (.) U. New worlds W x U; agent a relates (w,R) and (w',R') iff
/// w ~_{R a} w' and R a = R' a; valuations are inherited. The output is
/// again local. World ids are "(w|graph)" canonical serializations.
KripkeUpdate update_kripke(const EpistemicModel& m, const CommPattern& u,
                           ExecMode mode = ExecMode::parallel);

/// C (/) U. Each facet Y and graph R spawn the facet of witness pairs
/// (v, X) with X the face of Y coloured by R's in-neighbourhood of
/// chi(v); colour and valuation are inherited. Vertex ids are
/// "(v|{x,y})" canonical serializations.
SimplicialUpdate update_simplicial(const SimplicialModel& c,
                                   const CommPattern& u,
                                   ExecMode mode = ExecMode::parallel);

}  // namespace cpl

#endif
