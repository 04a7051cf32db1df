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

#include "cpl/duality.hpp"
#include "cpl/eval.hpp"
#include "cpl/falsify.hpp"
#include "cpl/gallery.hpp"
#include "cpl/generate.hpp"
#include "cpl/json_io.hpp"
#include "cpl/parser.hpp"
#include "cpl/reduce.hpp"

using namespace cpl;

namespace {

Signature sig_abc() {
  return Signature({"a", "b", "c"},
                   {{"a", {"p"}}, {"b", {"p"}}, {"c", {"p"}}});
}

PatternEnv byz_env() {
  PatternEnv env;
  env.patterns["byz"] =
      std::make_shared<CommPattern>(gallery_pattern("byz"));
  env.graphs.emplace("Rab", CommGraph({"a", "b"}, {{"a", "b"}}, true));
  return env;
}

Errc kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  throw std::runtime_error("expected an error");
}

std::vector<std::shared_ptr<const CommPattern>> pattern_pool(
    const std::vector<std::string>& agents, int count, Rng& rng) {
  std::vector<std::shared_ptr<const CommPattern>> pool;
  for (int i = 0; i < count; ++i)
    pool.push_back(
        std::make_shared<CommPattern>(random_pattern(agents, 3, rng)));
  return pool;
}

}  // namespace

TEST_CASE("parser builds the expected trees") {
  Signature sig = sig_abc();
  FormulaPtr f = parse_formula("D{a,b} p_c", sig);
  REQUIRE(f->kind == FKind::dknow);
  CHECK(f->group == std::vector<std::string>{"a", "b"});
  CHECK(f->lhs->atom == "p_c");

  Signature ab({"a", "b"}, {{"a", {"p"}}});
  FormulaPtr box = parse_formula("[byz; Rab] ~K{b} p_a", ab, byz_env());
  REQUIRE(box->kind == FKind::box);
  CHECK(box->pattern->size() == 2);
  CHECK(box->pattern->graph(box->graph).str() == "{(a,a),(a,b),(b,b)}");
  REQUIRE(box->lhs->kind == FKind::neg);
  CHECK(box->lhs->lhs->kind == FKind::dknow);
  CHECK(box->lhs->lhs->group == std::vector<std::string>{"b"});
}

TEST_CASE("sugar expands to the primitive connectives") {
  Signature sig = sig_abc();
  CHECK(formula_equal(*parse_formula("p_a | p_b", sig),
                      *f_or(f_atom("p_a"), f_atom("p_b"))));
  CHECK(formula_equal(*parse_formula("p_a -> p_b -> p_c", sig),
                      *f_implies(f_atom("p_a"),
                                 f_implies(f_atom("p_b"), f_atom("p_c")))));
  CHECK(formula_equal(*parse_formula("p_a <-> p_b", sig),
                      *f_iff(f_atom("p_a"), f_atom("p_b"))));
  CHECK(formula_equal(*parse_formula("K{a} p_a", sig),
                      *f_dk({"a"}, f_atom("p_a"))));
  // & binds tighter than |, prefixes tighter than &.
  CHECK(formula_equal(
      *parse_formula("~p_a & p_b | p_c", sig),
      *f_or(f_and(f_neg(f_atom("p_a")), f_atom("p_b")), f_atom("p_c"))));
}

TEST_CASE("parser errors") {
  Signature sig = sig_abc();
  Signature ab({"a", "b"}, {{"a", {"p"}}});
  CHECK(kind_of([&] { (void)parse_formula("p_a &", sig); }) ==
        Errc::syntax_error);
  CHECK(kind_of([&] { (void)parse_formula("(p_a", sig); }) ==
        Errc::syntax_error);
  CHECK(kind_of([&] { (void)parse_formula("q_a", sig); }) ==
        Errc::unknown_atom);
  CHECK(kind_of([&] { (void)parse_formula("D{a,x} p_a", sig); }) ==
        Errc::unknown_agent);
  CHECK(kind_of([&] { (void)parse_formula("[nope;I] p_a", sig); }) ==
        Errc::unknown_pattern);
  CHECK(kind_of([&] {
          (void)parse_formula("[byz; U] p_a", ab, byz_env());
        }) == Errc::graph_not_in_pattern);
  // The offset is reported.
  try {
    (void)parse_formula("p_a & ) p_b", sig);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("offset 6") != std::string::npos);
  }
}

TEST_CASE("printed formulas parse back to the same tree") {
  Rng rng(31);
  Signature sig = sig_abc();
  auto pool = pattern_pool(sig.agents(), 3, rng);
  for (int t = 0; t < 200; ++t) {
    FormulaPtr f = random_formula(sig, 3, 2, pool, rng);
    FormulaPtr back = parse_formula(to_string(*f), sig);
    CHECK(formula_equal(*f, *back));
  }
}

TEST_CASE("distributed knowledge separates the gallery pair") {
  const EpistemicModel& m = gallery_model("cbisim_m");
  const EpistemicModel& mp = gallery_model("cbisim_mp");
  FormulaPtr dab_pc = f_dk({"a", "b"}, f_atom("p_c"));
  CHECK_FALSE(eval_kripke(m, "w", *dab_pc));
  CHECK(eval_kripke(mp, "w1", *dab_pc));
  // Singleton knowledge does not separate them.
  CHECK_FALSE(eval_kripke(m, "w", *f_know("a", f_atom("p_c"))));
  CHECK_FALSE(eval_kripke(mp, "w1", *f_know("a", f_atom("p_c"))));
}

TEST_CASE("the whole group distributes exactly the truth") {
  Rng rng(32);
  Signature sig = sig_abc();
  auto pool = pattern_pool(sig.agents(), 2, rng);
  for (int t = 0; t < 40; ++t) {
    EpistemicModel m = random_local_model(sig, 4, rng);
    FormulaPtr phi = random_formula(sig, 2, 1, pool, rng);
    FormulaPtr iff = f_iff(f_dk(sig.agents(), phi), phi);
    KripkeEvaluator ev(m);
    CHECK(ev.valid_on_model(*iff));
  }
}

TEST_CASE("box evaluation moves the point into the update") {
  const EpistemicModel& m = gallery_model("byz_base");
  auto byz = std::make_shared<CommPattern>(gallery_pattern("byz"));
  CommGraph rab({"a", "b"}, {{"a", "b"}}, true);
  CommGraph id = CommGraph::identity({"a", "b"});

  FormulaPtr after_delivery = f_box(byz, rab, f_know("b", f_atom("p_a")));
  FormulaPtr after_loss = f_box(byz, id, f_neg(f_know("b", f_atom("p_a"))));
  CHECK(eval_kripke(m, "w1", *after_delivery));
  CHECK(eval_kripke(m, "w1", *after_loss));
  // a never learns whether the message arrived.
  FormulaPtr a_ignorant = f_box(
      byz, rab, f_neg(f_know("a", f_know("b", f_atom("p_a")))));
  CHECK(eval_kripke(m, "w1", *a_ignorant));
}

TEST_CASE("eval input validation") {
  const EpistemicModel& m = gallery_model("byz_base");
  CHECK(kind_of([&] {
          (void)eval_kripke(m, "nope", *f_atom("p_a"));
        }) == Errc::unknown_world);
  CHECK(kind_of([&] {
          (void)eval_kripke(m, "w1", *f_atom("p_c"));
        }) == Errc::signature_mismatch);
  auto three = std::make_shared<CommPattern>(
      gen_pattern("silent", {"a", "b", "c"}));
  CHECK(kind_of([&] {
          (void)eval_kripke(m, "w1", *f_box(three, 0, f_atom("p_a")));
        }) == Errc::agent_set_mismatch);
}

TEST_CASE("simplicial semantics on the gallery models") {
  const SimplicialModel& c = gallery_simplicial("simp_cbisim_c");
  const SimplicialModel& cp = gallery_simplicial("simp_cbisim_cp");
  FormulaPtr dab_pc = f_dk({"a", "b"}, f_atom("p_c"));
  CHECK_FALSE(eval_simplicial(c, c.facet_by_name("{c1,va,vb}"), *dab_pc));
  CHECK(eval_simplicial(cp, cp.facet_by_name("{a1,b1,cl}"), *dab_pc));

  // Atoms read off the facet valuation.
  const SimplicialModel& tri = gallery_simplicial("tri_shared_a");
  FacetId x = tri.facet_index({"v", "w", "y"});
  CHECK(eval_simplicial(tri, x, *f_atom("p_b")));
  CHECK(eval_simplicial(tri, x, *f_atom("p_c")));
  CHECK_FALSE(eval_simplicial(tri, x, *f_atom("p_a")));
}

TEST_CASE("one delivery teaches c the value of p_b") {
  const SimplicialModel& c = gallery_simplicial("tri_shared_ac");
  auto rbc = std::make_shared<CommPattern>(gallery_pattern("rbc"));
  FormulaPtr f = f_box(rbc, 0, f_dk({"c"}, f_atom("p_b")));
  FacetId x = c.facet_index({"v", "w", "y"});
  FacetId y = c.facet_index({"w", "x", "y"});
  CHECK(eval_simplicial(c, x, *f));
  // Before the update c does not know it.
  CHECK_FALSE(eval_simplicial(c, x, *f_dk({"c"}, f_atom("p_b"))));
  // In the p_b-false facet the update teaches c the negation instead.
  CHECK_FALSE(eval_simplicial(c, y, *f));
  CHECK(eval_simplicial(
      c, y, *f_box(rbc, 0, f_dk({"c"}, f_neg(f_atom("p_b"))))));
}

// ---- reduction -------------------------------------------------------------

TEST_CASE("boxes vanish on boolean bodies") {
  Signature ab({"a", "b"}, {{"a", {"p"}}, {"b", {"p"}}});
  auto pub = std::make_shared<CommPattern>(
      gen_pattern("public_announcement", {"a", "b"}));
  FormulaPtr body = f_and(f_atom("p_a"), f_neg(f_atom("p_b")));
  FormulaPtr reduced = reduce_formula(f_box(pub, 0, body));
  CHECK(formula_equal(*reduced, *body));
}

TEST_CASE("the knowledge clause rewrites along the informing graphs") {
  auto byz = std::make_shared<CommPattern>(gallery_pattern("byz"));
  CommGraph rab({"a", "b"}, {{"a", "b"}}, true);
  CommGraph id = CommGraph::identity({"a", "b"});

  // Only the delivery graph informs b like the delivery graph does.
  FormulaPtr f1 = f_box(byz, rab, f_dk({"b"}, f_atom("p_a")));
  CHECK(formula_equal(*reduce_formula(f1), *f_dk({"a", "b"}, f_atom("p_a"))));

  // Only the identity informs b like the identity does.
  FormulaPtr f2 = f_box(byz, id, f_dk({"b"}, f_atom("p_a")));
  CHECK(formula_equal(*reduce_formula(f2), *f_dk({"b"}, f_atom("p_a"))));

  // a is informed identically by both graphs: two conjuncts.
  FormulaPtr f3 = f_box(byz, id, f_dk({"a"}, f_atom("p_a")));
  FormulaPtr expect = f_and(f_dk({"a"}, f_atom("p_a")),
                            f_dk({"a"}, f_atom("p_a")));
  CHECK(formula_equal(*reduce_formula(f3), *expect));
}

TEST_CASE("reduction removes every box and preserves truth") {
  Rng rng(33);
  Signature sig = sig_abc();
  auto pool = pattern_pool(sig.agents(), 3, rng);
  for (int t = 0; t < 60; ++t) {
    FormulaPtr f = random_formula(sig, 3, 2, pool, rng);
    FormulaPtr r = reduce_formula(f);
    CHECK_FALSE(has_box(*r));

    EpistemicModel m = random_local_model(sig, 3, rng);
    KripkeEvaluator ev(m);
    for (WorldId w = 0; w < m.world_count(); ++w)
      CHECK(ev.eval(w, *f) == ev.eval(w, *r));

    SimplicialModel c = random_simplicial_model(sig, 3, rng);
    SimplicialEvaluator sev(c);
    for (FacetId x = 0; x < c.facet_count(); ++x)
      CHECK(sev.eval(x, *f) == sev.eval(x, *r));
  }
}

TEST_CASE("reduction handles nested boxes inside out") {
  Signature ab({"a", "b"}, {{"a", {"p"}}, {"b", {"p"}}});
  auto byz = std::make_shared<CommPattern>(gallery_pattern("byz"));
  auto pub = std::make_shared<CommPattern>(
      gen_pattern("public_announcement", {"a", "b"}));
  FormulaPtr f = f_box(byz, 0,
                       f_dk({"b"}, f_box(pub, 0, f_dk({"a"}, f_atom("p_b")))));
  FormulaPtr r = reduce_formula(f);
  CHECK_FALSE(has_box(*r));
  Rng rng(34);
  for (int t = 0; t < 20; ++t) {
    EpistemicModel m = random_local_model(ab, 3, rng);
    KripkeEvaluator ev(m);
    for (WorldId w = 0; w < m.world_count(); ++w)
      CHECK(ev.eval(w, *f) == ev.eval(w, *r));
  }
}

// ---- falsifier -------------------------------------------------------------

TEST_CASE("locality axiom survives falsification") {
  Signature ab({"a", "b"}, {{"a", {"p"}}, {"b", {"p"}}});
  FormulaPtr l = parse_formula("K{a} p_a | K{a} ~p_a", ab);
  CHECK_FALSE(search_counterexample(l, ab, {4, 2, 1, 200}, 5).has_value());
  CHECK_FALSE(
      search_counterexample_simplicial(l, ab, {4, 2, 1, 100}, 5).has_value());
}

TEST_CASE("foreign atoms are not known: counterexample found") {
  Signature ab({"a", "b"}, {{"a", {"p"}}, {"b", {"p"}}});
  FormulaPtr bad = parse_formula("K{a} p_b | K{a} ~p_b", ab);
  auto ce = search_counterexample(bad, ab, {3, 2, 1, 0}, 5);  // exhaustive core
  REQUIRE(ce.has_value());
  CHECK_FALSE(eval_kripke(ce->model, ce->world, *bad));

  auto sce = search_counterexample_simplicial(bad, ab, {3, 2, 1, 0}, 5);
  REQUIRE(sce.has_value());
  CHECK_FALSE(
      eval_simplicial(sce->model, sce->model.facet_by_name(sce->facet), *bad));
}

TEST_CASE("distributed knowledge is truthful") {
  Signature ab({"a", "b"}, {{"a", {"p"}}, {"b", {"p"}}});
  Rng rng(35);
  for (int t = 0; t < 5; ++t) {
    FormulaPtr phi = random_formula(ab, 2, 0, {}, rng);
    FormulaPtr td = f_implies(f_dk({"a", "b"}, phi), phi);
    CHECK_FALSE(search_counterexample(td, ab, {3, 2, 1, 50}, t).has_value());
  }
}

TEST_CASE("proper-subgroup resolution is refutable") {
  Signature ab({"a", "b"}, {{"a", {"p"}}, {"b", {"p"}}});
  FormulaPtr bad = parse_formula("D{a} p_b <-> p_b", ab);
  auto ce = search_counterexample(bad, ab, {3, 2, 1, 0}, 5);
  REQUIRE(ce.has_value());
  CHECK_FALSE(eval_kripke(ce->model, ce->world, *bad));
}

TEST_CASE("falsifier is deterministic and respects bounds") {
  Signature sig = sig_abc();  // three agents: no exhaustive core
  FormulaPtr bad = parse_formula("K{a} p_b | K{a} ~p_b", sig);
  auto ce1 = search_counterexample(bad, sig, {4, 3, 1, 500}, 42);
  auto ce2 = search_counterexample(bad, sig, {4, 3, 1, 500}, 42);
  REQUIRE(ce1.has_value());
  REQUIRE(ce2.has_value());
  CHECK(model_to_json(ce1->model) == model_to_json(ce2->model));
  CHECK(ce1->world == ce2->world);

  CHECK(kind_of([&] {
          (void)search_counterexample(bad, sig, {4, 2, 1, 10}, 1);
        }) == Errc::bounds_error);
}

TEST_CASE("counterexamples convert across the duality") {
  // A formula failing somewhere on epistemic models also fails on the
  // translated simplicial model, and vice versa.
  Signature ab({"a", "b"}, {{"a", {"p"}}, {"b", {"p"}}});
  FormulaPtr bad = parse_formula("D{a} p_b <-> p_b", ab);
  auto ce = search_counterexample(bad, ab, {3, 2, 1, 0}, 5);
  REQUIRE(ce.has_value());
  ToSimplicial s = to_simplicial(ce->model);
  CHECK_FALSE(eval_simplicial(
      s.model, s.facet_of[ce->model.world_index(ce->world)], *bad));

  auto sce = search_counterexample_simplicial(bad, ab, {3, 2, 1, 0}, 5);
  REQUIRE(sce.has_value());
  ToKripke k = to_kripke(sce->model);
  CHECK_FALSE(eval_kripke(
      k.model, k.world_of[sce->model.facet_by_name(sce->facet)], *bad));
}
