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

#ifndef CPL_DUALITY_HPP
#define CPL_DUALITY_HPP

#include <vector>

#include "cpl/model.hpp"
#include "cpl/simplicial.hpp"

namespace cpl {

/// sigma: every a-class becomes an a-coloured vertex "a:{members}"
/// valued at the class's shared P_a-atoms; world w becomes the facet of
/// its classes. Worlds indistinguishable to every agent merge into one
/// facet; `facet_of[w]` tracks where each world went.
struct ToSimplicial {
  SimplicialModel model;
  std::vector<FacetId> facet_of;
};

ToSimplicial to_simplicial(const EpistemicModel& m);

/// kappa: facets become worlds (named by their canonical facet form),
/// a-related iff they share their a-vertex, valued at ell(X). The result
/// is local by construction. `world_of[x]` maps facets to worlds.
struct ToKripke {
  EpistemicModel model;
  std::vector<WorldId> world_of;
};

ToKripke to_kripke(const SimplicialModel& c);

}  // namespace cpl

#endif
