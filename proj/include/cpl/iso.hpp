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

#ifndef CPL_ISO_HPP
#define CPL_ISO_HPP

#include "cpl/model.hpp"
#include "cpl/simplicial.hpp"

namespace cpl {

/// Isomorphy up to world renaming: a bijection preserving valuations
/// and every agent relation. Backtracking search; meant for the small
/// models equality-of-shape statements are about.
bool kripke_isomorphic(const EpistemicModel& a, const EpistemicModel& b);

/// Isomorphy up to vertex renaming: a colour- and valuation-preserving
/// vertex bijection carrying facets onto facets.
bool simplicial_isomorphic(const SimplicialModel& a, const SimplicialModel& b);

}  // namespace cpl

#endif
