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

#include "cpl/reduce.hpp"

#include <algorithm>

namespace cpl {

namespace {

// Every rewrite strictly shrinks what the box binds, so elimination
// terminates; the counter guards against regressions, not theory.
constexpr long kStepLimit = 50'000'000;

class Reducer {
 public:
  FormulaPtr reduce(const FormulaPtr& f) {
    switch (f->kind) {
      case FKind::atom:
        return f;
      case FKind::neg:
        return f_neg(reduce(f->lhs));
      case FKind::conj:
        return f_and(reduce(f->lhs), reduce(f->rhs));
      case FKind::dknow:
        return f_dk(f->group, reduce(f->lhs));
      case FKind::box:
        // Inside out: the body is box-free before this box dissolves.
        return eliminate(f->pattern, f->graph, reduce(f->lhs));
    }
    return f;
  }

 private:
  FormulaPtr eliminate(const std::shared_ptr<const CommPattern>& u, int g,
                       const FormulaPtr& body) {
    if (++steps_ > kStepLimit)
      fail(Errc::too_large, "reduction exceeded the step limit");
    switch (body->kind) {
      case FKind::atom:
        return body;
      case FKind::neg:
        return f_neg(eliminate(u, g, body->lhs));
      case FKind::conj:
        return f_and(eliminate(u, g, body->lhs), eliminate(u, g, body->rhs));
      case FKind::dknow: {
        CommGraph r = u->graph(g);
        AgentSet group = 0;
        for (const auto& name : body->group) {
          auto it = std::lower_bound(u->agents().begin(), u->agents().end(),
                                     name);
          if (it == u->agents().end() || *it != name)
            fail(Errc::unknown_agent,
                 "D-group agent '" + name + "' is not in the pattern");
          group |= AgentSet{1} << (it - u->agents().begin());
        }
        AgentSet informed = r.in_neighbourhood(group);
        std::vector<std::string> new_group;
        for (int a = 0; a < u->agent_count(); ++a)
          if (informed & (AgentSet{1} << a)) new_group.push_back(u->agents()[a]);
        std::vector<FormulaPtr> conjuncts;
        for (int g2 = 0; g2 < u->size(); ++g2)
          if (group_view_equal(u->graph(g2), r, group))
            conjuncts.push_back(
                f_dk(new_group, eliminate(u, g2, body->lhs)));
        return f_and_all(conjuncts);  // includes R itself, so nonempty
      }
      case FKind::box:
        fail(Errc::bad_params, "eliminate called on a non-innermost box");
    }
    return body;
  }

  long steps_ = 0;
};

}  // namespace

FormulaPtr reduce_formula(const FormulaPtr& f) { return Reducer().reduce(f); }

}  // namespace cpl
