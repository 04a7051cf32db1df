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

#ifndef CPL_BISIM_HPP
#define CPL_BISIM_HPP

#include <string>
#include <vector>

#include "cpl/eval.hpp"
#include "cpl/exec.hpp"
#include "cpl/formula.hpp"
#include "cpl/model.hpp"
#include "cpl/simplicial.hpp"

namespace cpl {

/// Collective bisimulation quantifies forth/back over every nonempty
/// agent group; the standard notion uses singletons only.
enum class BisimKind { collective, standard };

/// One side of a refinement: items with per-agent partition classes and
/// an atom valuation. Epistemic models refine over worlds; simplicial
/// models refine over facets, with "same a-vertex" as the a-classes.
struct RefineSide {
  int n = 0;
  std::vector<std::vector<int>> class_of;  // [agent][item]
  std::vector<AtomSet> atoms;              // [item]
};

RefineSide refine_side(const EpistemicModel& m);
RefineSide refine_side(const SimplicialModel& c);

/// Greatest-fixpoint refinement over item pairs. Pairs start related
/// when their atoms agree; synchronous rounds delete every pair with a
/// forth or back violation until none remains. The deletion round and
/// the first violation (groups scanned in ascending mask order,
/// witnesses in item order) are recorded per pair; both are independent
/// of the execution mode.
struct RefineResult {
  struct Violation {
    AgentSet group = 0;
    bool forth = true;  // else back
    int witness = -1;   // left item (forth) or right item (back)
  };

  // stage[i][j]: -1 = still related; 0 = atoms differ; r >= 1 = deleted
  // in round r.
  std::vector<std::vector<int>> stage;
  std::vector<std::vector<Violation>> why;  // meaningful when stage >= 1
  int rounds = 0;

  bool related(int i, int j) const { return stage[i][j] < 0; }
};

RefineResult refine(const RefineSide& left, const RefineSide& right,
                    BisimKind kind, ExecMode mode = ExecMode::parallel);

/// Outcome of a bisimilarity query: the full surviving relation when
/// related, or a distinguishing formula (true on the left point, false
/// on the right) when not.
struct BisimWitness {
  BisimKind kind = BisimKind::collective;
  bool related = false;
  std::vector<std::pair<std::string, std::string>> relation;
  FormulaPtr distinguishing;
};

BisimWitness collective_bisim_kripke(const EpistemicModel& m, WorldId w,
                                     const EpistemicModel& m2, WorldId w2,
                                     ExecMode mode = ExecMode::parallel);
BisimWitness standard_bisim_kripke(const EpistemicModel& m, WorldId w,
                                   const EpistemicModel& m2, WorldId w2,
                                   ExecMode mode = ExecMode::parallel);
BisimWitness collective_bisim_simplicial(const SimplicialModel& c, FacetId x,
                                         const SimplicialModel& c2, FacetId x2,
                                         ExecMode mode = ExecMode::parallel);
BisimWitness standard_bisim_simplicial(const SimplicialModel& c, FacetId x,
                                       const SimplicialModel& c2, FacetId x2,
                                       ExecMode mode = ExecMode::parallel);

/// L^- formula separating two non-bisimilar points, built from the
/// refinement stage at which their pair died and checked by eval before
/// being returned. Throws points_bisimilar on related points.
FormulaPtr distinguishing_formula(const EpistemicModel& m, WorldId w,
                                  const EpistemicModel& m2, WorldId w2);
FormulaPtr distinguishing_formula_simplicial(const SimplicialModel& c,
                                             FacetId x,
                                             const SimplicialModel& c2,
                                             FacetId x2);

}  // namespace cpl

#endif
