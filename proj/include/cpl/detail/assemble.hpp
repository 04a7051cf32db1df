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

#ifndef CPL_DETAIL_ASSEMBLE_HPP
#define CPL_DETAIL_ASSEMBLE_HPP

#include <vector>

#include "cpl/model.hpp"
#include "cpl/simplicial.hpp"

namespace cpl::detail {

/// Index-based construction for code that produces models whose
/// invariants hold by construction (updates, translations, generators).
/// Inputs must already be sorted; block ids get renumbered canonically.
struct Assembler {
  static EpistemicModel model(Signature sig,
                              std::vector<std::string> sorted_worlds,
                              std::vector<AtomSet> valuation,
                              std::vector<std::vector<int>> class_of);

  static SimplicialModel simplicial(
      Signature sig, std::vector<std::string> sorted_vertex_ids,
      std::vector<AgentId> colour, std::vector<AtomSet> vertex_valuation,
      std::vector<std::vector<VertexId>> sorted_facets);
};

}  // namespace cpl::detail

#endif
