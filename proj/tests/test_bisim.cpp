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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cpl/bisim.hpp"
#include "cpl/duality.hpp"
#include "cpl/gallery.hpp"
#include "cpl/generate.hpp"
#include "cpl/update.hpp"
#include "support/oracles.hpp"

using namespace cpl;

namespace {

Signature sig_abc() {
  return Signature({"a", "b", "c"},
                   {{"a", {"p"}}, {"b", {"p"}}, {"c", {"p"}}});
}

}  // namespace

TEST_CASE("the gallery pair: standard related, collective not") {
  const EpistemicModel& m = gallery_model("cbisim_m");
  const EpistemicModel& mp = gallery_model("cbisim_mp");
  WorldId w = m.world_index("w"), w1 = mp.world_index("w1");

  BisimWitness std_w = standard_bisim_kripke(m, w, mp, w1);
  CHECK(std_w.related);
  CHECK(std_w.relation.size() == 4);  // each world matches its two twins

  BisimWitness col_w = collective_bisim_kripke(m, w, mp, w1);
  CHECK_FALSE(col_w.related);
  REQUIRE(col_w.distinguishing);
  CHECK(eval_kripke(m, w, *col_w.distinguishing));
  CHECK_FALSE(eval_kripke(mp, w1, *col_w.distinguishing));
  // The certificate is the negated distributed-knowledge separator.
  CHECK(formula_equal(*col_w.distinguishing,
                      *f_neg(f_dk({"a", "b"}, f_atom("p_c")))));
}

TEST_CASE("identity and silent-update pairs are related") {
  const EpistemicModel& m = gallery_model("byz_base");
  CHECK(collective_bisim_kripke(m, 0, m, 0).related);

  CommPattern silent = gen_pattern("silent", {"a", "b"});
  KripkeUpdate up = update_kripke(m, silent);
  for (WorldId w = 0; w < m.world_count(); ++w)
    CHECK(collective_bisim_kripke(m, w, up.model, up.world_of[w][0]).related);
}

TEST_CASE("atom mismatch separates immediately") {
  Signature sig({"a", "b"}, {{"a", {"p"}}});
  EpistemicModel m = gallery_model("byz_base");
  EpistemicModel flipped = build_model(
      sig, {{"w1", {}}, {"w2", {"p_a"}}}, {{"b", {{"w1", "w2"}}}});
  BisimWitness w = standard_bisim_kripke(m, m.world_index("w1"), flipped,
                                         flipped.world_index("w1"));
  CHECK_FALSE(w.related);
  REQUIRE(w.distinguishing);
  CHECK(w.distinguishing->kind == FKind::atom);
}

TEST_CASE("simplicial verdicts on the gallery pairs") {
  const SimplicialModel& c = gallery_simplicial("simp_cbisim_c");
  const SimplicialModel& cp = gallery_simplicial("simp_cbisim_cp");
  FacetId x = c.facet_by_name("{c1,va,vb}");
  FacetId xp = cp.facet_by_name("{a1,b1,cl}");

  CHECK(standard_bisim_simplicial(c, x, cp, xp).related);
  BisimWitness w = collective_bisim_simplicial(c, x, cp, xp);
  CHECK_FALSE(w.related);
  CHECK(eval_simplicial(c, x, *w.distinguishing));
  CHECK_FALSE(eval_simplicial(cp, xp, *w.distinguishing));

  CHECK(collective_bisim_simplicial(c, x, c, x).related);
}

TEST_CASE("the one-delivery update is collectively bisimilar to the "
          "a-glued pair") {
  const SimplicialModel& c = gallery_simplicial("tri_shared_ac");
  SimplicialUpdate up = update_simplicial(c, gallery_pattern("rbc"));
  const SimplicialModel& target = gallery_simplicial("tri_shared_a");
  FacetId from = up.facet_of[c.facet_index({"v", "w", "y"})][0];
  FacetId to = target.facet_index({"v", "w", "y"});
  CHECK(collective_bisim_simplicial(up.model, from, target, to).related);
}

TEST_CASE("collective-related implies standard-related") {
  Rng rng(41);
  Signature sig = sig_abc();
  for (int t = 0; t < 40; ++t) {
    EpistemicModel m = random_local_model(sig, 3, rng);
    EpistemicModel m2 = random_local_model(sig, 3, rng);
    for (WorldId w = 0; w < m.world_count(); ++w)
      for (WorldId w2 = 0; w2 < m2.world_count(); ++w2)
        if (collective_bisim_kripke(m, w, m2, w2).related)
          CHECK(standard_bisim_kripke(m, w, m2, w2).related);
  }
}

TEST_CASE("fixpoint verdicts equal the enumerate-all-relations oracle") {
  Rng rng(42);
  Signature sig({"a", "b"}, {{"a", {"p"}}, {"b", {"p"}}});
  for (int t = 0; t < 60; ++t) {
    EpistemicModel m = random_local_model(sig, 3, rng);
    EpistemicModel m2 = random_local_model(sig, 3, rng);
    for (bool collective : {true, false}) {
      BisimKind kind = collective ? BisimKind::collective : BisimKind::standard;
      RefineResult res = refine(refine_side(m), refine_side(m2), kind);
      auto expect = cpl_test::oracle_bisim_matrix(
          cpl_test::oracle_side(m, collective),
          cpl_test::oracle_side(m2, collective));
      for (int i = 0; i < m.world_count(); ++i)
        for (int j = 0; j < m2.world_count(); ++j)
          CHECK(res.related(i, j) == static_cast<bool>(expect[i][j]));
    }

    SimplicialModel c = random_simplicial_model(sig, 3, rng);
    SimplicialModel c2 = random_simplicial_model(sig, 3, rng);
    for (bool collective : {true, false}) {
      BisimKind kind = collective ? BisimKind::collective : BisimKind::standard;
      RefineResult res = refine(refine_side(c), refine_side(c2), kind);
      auto expect = cpl_test::oracle_bisim_matrix(
          cpl_test::oracle_side(c, collective),
          cpl_test::oracle_side(c2, collective));
      for (int i = 0; i < c.facet_count(); ++i)
        for (int j = 0; j < c2.facet_count(); ++j)
          CHECK(res.related(i, j) == static_cast<bool>(expect[i][j]));
    }
  }
}

TEST_CASE("related points satisfy the same formulas") {
  Rng rng(43);
  Signature sig = sig_abc();
  std::vector<std::shared_ptr<const CommPattern>> pool;
  for (int i = 0; i < 3; ++i)
    pool.push_back(
        std::make_shared<CommPattern>(random_pattern(sig.agents(), 3, rng)));
  int related_pairs = 0;
  for (int t = 0; t < 30; ++t) {
    EpistemicModel m = random_local_model(sig, 3, rng);
    WorldId point = static_cast<int>(rng() % m.world_count());
    WorldId image = -1;
    EpistemicModel m2 = duplicate_worlds(m, 2, rng, point, &image);
    BisimWitness w = collective_bisim_kripke(m, point, m2, image);
    REQUIRE(w.related);
    ++related_pairs;
    KripkeEvaluator evl(m), evr(m2);
    for (int k = 0; k < 25; ++k) {
      FormulaPtr f = random_formula(sig, 3, 1, pool, rng);
      CHECK(evl.eval(point, *f) == evr.eval(image, *f));
    }
  }
  CHECK(related_pairs == 30);
}

TEST_CASE("non-related points get verified distinguishing formulas") {
  Rng rng(44);
  Signature sig({"a", "b"}, {{"a", {"p"}}, {"b", {"p"}}});
  int separated = 0;
  for (int t = 0; t < 200 && separated < 60; ++t) {
    EpistemicModel m = random_local_model(sig, 3, rng);
    EpistemicModel m2 = random_local_model(sig, 3, rng);
    WorldId w = static_cast<int>(rng() % m.world_count());
    WorldId w2 = static_cast<int>(rng() % m2.world_count());
    BisimWitness witness = collective_bisim_kripke(m, w, m2, w2);
    if (witness.related) {
      CHECK_THROWS_AS((void)distinguishing_formula(m, w, m2, w2), Error);
      continue;
    }
    ++separated;
    FormulaPtr d = witness.distinguishing;
    REQUIRE(d);
    CHECK_FALSE(has_box(*d));
    CHECK(eval_kripke(m, w, *d));
    CHECK_FALSE(eval_kripke(m2, w2, *d));
  }
  CHECK(separated >= 60);
}

TEST_CASE("simplicial distinguishing formulas verify too") {
  Rng rng(45);
  Signature sig = sig_abc();
  int separated = 0;
  for (int t = 0; t < 100 && separated < 30; ++t) {
    SimplicialModel c = random_simplicial_model(sig, 3, rng);
    SimplicialModel c2 = random_simplicial_model(sig, 3, rng);
    FacetId x = static_cast<int>(rng() % c.facet_count());
    FacetId x2 = static_cast<int>(rng() % c2.facet_count());
    BisimWitness w = collective_bisim_simplicial(c, x, c2, x2);
    if (w.related) continue;
    ++separated;
    CHECK(eval_simplicial(c, x, *w.distinguishing));
    CHECK_FALSE(eval_simplicial(c2, x2, *w.distinguishing));
  }
  CHECK(separated >= 30);
}

TEST_CASE("updates preserve collective bisimilarity") {
  Rng rng(46);
  Signature sig = sig_abc();
  for (int t = 0; t < 15; ++t) {
    EpistemicModel m = random_local_model(sig, 3, rng);
    WorldId point = static_cast<int>(rng() % m.world_count());
    WorldId image = -1;
    EpistemicModel m2 = duplicate_worlds(m, 2, rng, point, &image);
    CommPattern u = random_pattern(sig.agents(), 3, rng);
    KripkeUpdate up1 = update_kripke(m, u);
    KripkeUpdate up2 = update_kripke(m2, u);
    for (int g = 0; g < u.size(); ++g)
      CHECK(collective_bisim_kripke(up1.model, up1.world_of[point][g],
                                    up2.model, up2.world_of[image][g])
                .related);
  }
}

TEST_CASE("serial and parallel refinement agree exactly") {
  Rng rng(47);
  Signature sig = sig_abc();
  for (int t = 0; t < 20; ++t) {
    EpistemicModel m = random_local_model(sig, 5, rng);
    EpistemicModel m2 = random_local_model(sig, 5, rng);
    RefineSide l = refine_side(m), r = refine_side(m2);
    for (BisimKind kind : {BisimKind::collective, BisimKind::standard}) {
      RefineResult s = refine(l, r, kind, ExecMode::serial);
      RefineResult p = refine(l, r, kind, ExecMode::parallel);
      CHECK(s.stage == p.stage);
      CHECK(s.rounds == p.rounds);
      for (int i = 0; i < l.n; ++i)
        for (int j = 0; j < r.n; ++j)
          if (s.stage[i][j] > 0) {
            CHECK(s.why[i][j].group == p.why[i][j].group);
            CHECK(s.why[i][j].forth == p.why[i][j].forth);
            CHECK(s.why[i][j].witness == p.why[i][j].witness);
          }
    }
  }
}

TEST_CASE("signature mismatch is rejected") {
  const EpistemicModel& m = gallery_model("byz_base");
  const EpistemicModel& m3 = gallery_model("cbisim_m");
  CHECK_THROWS_AS((void)collective_bisim_kripke(m, 0, m3, 0), Error);
}
