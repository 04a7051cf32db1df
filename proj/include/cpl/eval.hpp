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

#ifndef CPL_EVAL_HPP
#define CPL_EVAL_HPP

#include <map>
#include <memory>
#include <string>

#include "cpl/formula.hpp"
#include "cpl/update.hpp"

namespace cpl {

/// Model checker on an epistemic model. Updated models built for boxes
/// are memoized per pattern, per model in the update tree, so sibling
/// boxes over the same pattern share one product. An evaluator is not
/// safe for concurrent use; use one instance per thread (they are cheap
/// and share nothing).
class KripkeEvaluator {
 public:
  explicit KripkeEvaluator(const EpistemicModel& m,
                           ExecMode mode = ExecMode::parallel);

  bool eval(WorldId w, const Formula& f);
  bool eval(const std::string& world, const Formula& f);

  /// True iff the formula holds at every world.
  bool valid_on_model(const Formula& f);

 private:
  struct Node {
    const EpistemicModel* model;
    std::unique_ptr<KripkeUpdate> update;  // null at the root
    std::map<std::string, std::unique_ptr<Node>> children;  // by pattern key
  };

  bool eval_at(Node& node, WorldId w, const Formula& f);
  Node& child(Node& node, const CommPattern& u);

  Node root_;
  ExecMode mode_;
};

/// Same contract on a simplicial model, evaluating at facets.
class SimplicialEvaluator {
 public:
  explicit SimplicialEvaluator(const SimplicialModel& c,
                               ExecMode mode = ExecMode::parallel);

  bool eval(FacetId x, const Formula& f);
  bool valid_on_model(const Formula& f);

 private:
  struct Node {
    const SimplicialModel* model;
    std::unique_ptr<SimplicialUpdate> update;
    std::map<std::string, std::unique_ptr<Node>> children;
  };

  bool eval_at(Node& node, FacetId x, const Formula& f);
  Node& child(Node& node, const CommPattern& u);

  Node root_;
  ExecMode mode_;
};

/// One-shot conveniences (fresh evaluator per call).
bool eval_kripke(const EpistemicModel& m, const std::string& world,
                 const Formula& f);
bool eval_kripke(const EpistemicModel& m, WorldId w, const Formula& f);
bool eval_simplicial(const SimplicialModel& c, FacetId x, const Formula& f);

}  // namespace cpl

#endif
