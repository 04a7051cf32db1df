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

#include "cpl/bisim.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace cpl {

RefineSide refine_side(const EpistemicModel& m) {
  RefineSide side;
  side.n = m.world_count();
  side.atoms.resize(side.n);
  for (WorldId w = 0; w < side.n; ++w) side.atoms[w] = m.valuation(w);
  int na = m.signature().agent_count();
  side.class_of.resize(na);
  for (int a = 0; a < na; ++a) {
    side.class_of[a].resize(side.n);
    for (WorldId w = 0; w < side.n; ++w) side.class_of[a][w] = m.class_of(a, w);
  }
  return side;
}

RefineSide refine_side(const SimplicialModel& c) {
  RefineSide side;
  side.n = c.facet_count();
  side.atoms.resize(side.n);
  for (FacetId x = 0; x < side.n; ++x) side.atoms[x] = c.facet_valuation(x);
  int na = c.signature().agent_count();
  side.class_of.resize(na);
  for (int a = 0; a < na; ++a) {
    side.class_of[a].resize(side.n);
    // Facets sharing their a-vertex are exactly the a-related ones.
    for (FacetId x = 0; x < side.n; ++x)
      side.class_of[a][x] = c.vertex_of(x, a);
  }
  return side;
}

namespace {

// Meet classes and their member lists for every quantified group.
struct GroupTables {
  std::vector<AgentSet> groups;                      // ascending masks
  std::vector<std::vector<int>> cls;                 // [group][item]
  std::vector<std::vector<std::vector<int>>> members;  // [group][class]
};

GroupTables group_tables(const RefineSide& side, BisimKind kind) {
  int na = static_cast<int>(side.class_of.size());
  GroupTables t;
  for (AgentSet g = 1; g < (AgentSet{1} << na); ++g)
    if (kind == BisimKind::collective || __builtin_popcount(g) == 1)
      t.groups.push_back(g);
  t.cls.resize(t.groups.size());
  t.members.resize(t.groups.size());
  for (size_t gi = 0; gi < t.groups.size(); ++gi) {
    std::map<std::vector<int>, int> ids;
    auto& cls = t.cls[gi];
    cls.resize(side.n);
    for (int i = 0; i < side.n; ++i) {
      std::vector<int> key;
      for (int a = 0; a < na; ++a)
        if (t.groups[gi] & (AgentSet{1} << a))
          key.push_back(side.class_of[a][i]);
      auto [it, _] = ids.emplace(std::move(key), (int)ids.size());
      cls[i] = it->second;
    }
    t.members[gi].resize(ids.size());
    for (int i = 0; i < side.n; ++i) t.members[gi][cls[i]].push_back(i);
  }
  return t;
}

}  // namespace

RefineResult refine(const RefineSide& left, const RefineSide& right,
                    BisimKind kind, ExecMode mode) {
  assert(left.class_of.size() == right.class_of.size());
  const int nl = left.n, nr = right.n;
  GroupTables lt = group_tables(left, kind);
  GroupTables rt = group_tables(right, kind);
  const int ng = static_cast<int>(lt.groups.size());

  RefineResult res;
  res.stage.assign(nl, std::vector<int>(nr, -1));
  res.why.assign(nl, std::vector<RefineResult::Violation>(nr));

  std::vector<std::pair<int, int>> alive;
  for (int i = 0; i < nl; ++i)
    for (int j = 0; j < nr; ++j) {
      if (left.atoms[i] == right.atoms[j])
        alive.emplace_back(i, j);
      else
        res.stage[i][j] = 0;
    }

  // Synchronous rounds: scan the surviving pairs against the previous
  // round's relation, then delete all violators at once. The outcome and
  // the recorded first violation do not depend on scan order, so the
  // parallel lane is bit-identical to the serial one.
  const bool par = mode == ExecMode::parallel;
  std::vector<signed char> kill(alive.size());
  for (int round = 1; !alive.empty(); ++round) {
    res.rounds = round;
    std::fill(kill.begin(), kill.end(), 0);
    const auto related = [&](int v, int v2) { return res.stage[v][v2] < 0; };
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (par)
#endif
    for (size_t p = 0; p < alive.size(); ++p) {
      const auto [i, j] = alive[p];
      for (int g = 0; g < ng && !kill[p]; ++g) {
        for (int v : lt.members[g][lt.cls[g][i]]) {  // forth
          bool matched = false;
          for (int v2 : rt.members[g][rt.cls[g][j]])
            if (related(v, v2)) {
              matched = true;
              break;
            }
          if (!matched) {
            kill[p] = 1;
            res.why[i][j] = {lt.groups[g], true, v};
            break;
          }
        }
        if (kill[p]) break;
        for (int v2 : rt.members[g][rt.cls[g][j]]) {  // back
          bool matched = false;
          for (int v : lt.members[g][lt.cls[g][i]])
            if (related(v, v2)) {
              matched = true;
              break;
            }
          if (!matched) {
            kill[p] = 1;
            res.why[i][j] = {lt.groups[g], false, v2};
            break;
          }
        }
      }
    }

    std::vector<std::pair<int, int>> next;
    next.reserve(alive.size());
    bool any = false;
    for (size_t p = 0; p < alive.size(); ++p) {
      if (kill[p]) {
        res.stage[alive[p].first][alive[p].second] = round;
        any = true;
      } else {
        next.push_back(alive[p]);
      }
    }
    if (!any) break;
    alive.swap(next);
    kill.resize(alive.size());
  }
  return res;
}

namespace {

// Distinguishing formulas out of the refinement stages. For a pair that
// died on a forth violation (B, v): no B-successor of the right point
// matches v, so each such v' already has a separating formula; the
// diamond ~D_B~ of their conjunction holds at the left point only. Back
// violations dualize with D_B over a disjunction.
class Separator {
 public:
  Separator(const Signature& sig, const RefineSide& left,
            const RefineSide& right, const RefineResult& res)
      : sig_(sig), left_(left), right_(right), res_(res) {
    int na = sig.agent_count();
    for (AgentSet g = 1; g < (AgentSet{1} << na); ++g) {
      lmeet_[g] = meet(left_, g);
      rmeet_[g] = meet(right_, g);
    }
  }

  FormulaPtr build(int i, int j) {
    auto it = memo_.find({i, j});
    if (it != memo_.end()) return it->second;
    int stage = res_.stage[i][j];
    assert(stage >= 0);
    FormulaPtr out;
    if (stage == 0) {
      AtomSet diff = left_.atoms[i] ^ right_.atoms[j];
      assert(diff != 0);
      int bit = __builtin_ctzll(diff);
      FormulaPtr atom = f_atom(sig_.atoms()[bit]);
      out = (left_.atoms[i] & (AtomSet{1} << bit)) ? atom : f_neg(atom);
    } else {
      const auto& why = res_.why[i][j];
      std::vector<std::string> group = agent_names(sig_, why.group);
      if (why.forth) {
        int v = why.witness;
        std::vector<FormulaPtr> parts;
        for (int v2 : class_members(rmeet_.at(why.group), right_, j))
          parts.push_back(build(v, v2));
        out = f_neg(f_dk(group, f_neg(f_and_all(parts))));
      } else {
        int v2 = why.witness;
        std::vector<FormulaPtr> parts;
        for (int v : class_members(lmeet_.at(why.group), left_, i))
          parts.push_back(build(v, v2));
        out = f_dk(group, f_or_all(parts));
      }
    }
    memo_.emplace(std::make_pair(i, j), out);
    return out;
  }

 private:
  static std::vector<int> meet(const RefineSide& side, AgentSet g) {
    int na = static_cast<int>(side.class_of.size());
    std::map<std::vector<int>, int> ids;
    std::vector<int> cls(side.n);
    for (int i = 0; i < side.n; ++i) {
      std::vector<int> key;
      for (int a = 0; a < na; ++a)
        if (g & (AgentSet{1} << a)) key.push_back(side.class_of[a][i]);
      auto [it, _] = ids.emplace(std::move(key), (int)ids.size());
      cls[i] = it->second;
    }
    return cls;
  }

  static std::vector<int> class_members(const std::vector<int>& cls,
                                        const RefineSide& side, int item) {
    std::vector<int> out;
    for (int i = 0; i < side.n; ++i)
      if (cls[i] == cls[item]) out.push_back(i);
    return out;
  }

  const Signature& sig_;
  const RefineSide& left_;
  const RefineSide& right_;
  const RefineResult& res_;
  std::map<AgentSet, std::vector<int>> lmeet_, rmeet_;
  std::map<std::pair<int, int>, FormulaPtr> memo_;
};

void check_signatures(const Signature& a, const Signature& b) {
  if (!(a == b))
    fail(Errc::signature_mismatch,
         "the two structures have different signatures");
}

// The certificate contract: true at the left point, false at the right.
void confirm(bool left_true, bool right_true, const Formula& f) {
  if (!left_true || right_true)
    fail(Errc::bad_params, "internal error: separating formula " +
                               to_string(f) + " failed its eval check");
}

template <typename LName, typename RName>
BisimWitness make_witness(const Signature& sig, const RefineSide& l,
                          const RefineSide& r, const RefineResult& res,
                          BisimKind kind, int i, int j, LName left_name,
                          RName right_name) {
  BisimWitness w;
  w.kind = kind;
  w.related = res.related(i, j);
  if (w.related) {
    for (int x = 0; x < l.n; ++x)
      for (int y = 0; y < r.n; ++y)
        if (res.related(x, y)) w.relation.emplace_back(left_name(x),
                                                       right_name(y));
  } else {
    w.distinguishing = Separator(sig, l, r, res).build(i, j);
  }
  return w;
}

}  // namespace

BisimWitness collective_bisim_kripke(const EpistemicModel& m, WorldId w,
                                     const EpistemicModel& m2, WorldId w2,
                                     ExecMode mode) {
  check_signatures(m.signature(), m2.signature());
  RefineSide l = refine_side(m), r = refine_side(m2);
  RefineResult res = refine(l, r, BisimKind::collective, mode);
  auto witness = make_witness(
      m.signature(), l, r, res, BisimKind::collective, w, w2,
      [&](int i) { return m.worlds()[i]; },
      [&](int j) { return m2.worlds()[j]; });
  if (!witness.related)
    confirm(eval_kripke(m, w, *witness.distinguishing),
            eval_kripke(m2, w2, *witness.distinguishing),
            *witness.distinguishing);
  return witness;
}

BisimWitness standard_bisim_kripke(const EpistemicModel& m, WorldId w,
                                   const EpistemicModel& m2, WorldId w2,
                                   ExecMode mode) {
  check_signatures(m.signature(), m2.signature());
  RefineSide l = refine_side(m), r = refine_side(m2);
  RefineResult res = refine(l, r, BisimKind::standard, mode);
  auto witness = make_witness(
      m.signature(), l, r, res, BisimKind::standard, w, w2,
      [&](int i) { return m.worlds()[i]; },
      [&](int j) { return m2.worlds()[j]; });
  if (!witness.related)
    confirm(eval_kripke(m, w, *witness.distinguishing),
            eval_kripke(m2, w2, *witness.distinguishing),
            *witness.distinguishing);
  return witness;
}

BisimWitness collective_bisim_simplicial(const SimplicialModel& c, FacetId x,
                                         const SimplicialModel& c2,
                                         FacetId x2, ExecMode mode) {
  check_signatures(c.signature(), c2.signature());
  RefineSide l = refine_side(c), r = refine_side(c2);
  RefineResult res = refine(l, r, BisimKind::collective, mode);
  auto witness = make_witness(
      c.signature(), l, r, res, BisimKind::collective, x, x2,
      [&](int i) { return c.facet_name(i); },
      [&](int j) { return c2.facet_name(j); });
  if (!witness.related)
    confirm(eval_simplicial(c, x, *witness.distinguishing),
            eval_simplicial(c2, x2, *witness.distinguishing),
            *witness.distinguishing);
  return witness;
}

BisimWitness standard_bisim_simplicial(const SimplicialModel& c, FacetId x,
                                       const SimplicialModel& c2, FacetId x2,
                                       ExecMode mode) {
  check_signatures(c.signature(), c2.signature());
  RefineSide l = refine_side(c), r = refine_side(c2);
  RefineResult res = refine(l, r, BisimKind::standard, mode);
  auto witness = make_witness(
      c.signature(), l, r, res, BisimKind::standard, x, x2,
      [&](int i) { return c.facet_name(i); },
      [&](int j) { return c2.facet_name(j); });
  if (!witness.related)
    confirm(eval_simplicial(c, x, *witness.distinguishing),
            eval_simplicial(c2, x2, *witness.distinguishing),
            *witness.distinguishing);
  return witness;
}

FormulaPtr distinguishing_formula(const EpistemicModel& m, WorldId w,
                                  const EpistemicModel& m2, WorldId w2) {
  auto witness = collective_bisim_kripke(m, w, m2, w2);
  if (witness.related)
    fail(Errc::points_bisimilar, "the points are collectively bisimilar");
  return witness.distinguishing;
}

FormulaPtr distinguishing_formula_simplicial(const SimplicialModel& c,
                                             FacetId x,
                                             const SimplicialModel& c2,
                                             FacetId x2) {
  auto witness = collective_bisim_simplicial(c, x, c2, x2);
  if (witness.related)
    fail(Errc::points_bisimilar, "the points are collectively bisimilar");
  return witness.distinguishing;
}

}  // namespace cpl
