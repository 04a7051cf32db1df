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

// Times the serial reference implementations of the compute kernels
// against their OpenMP lanes on random inputs, and checks on the fly
// that both produce identical results.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>

#include "cpl/bisim.hpp"
#include "cpl/duality.hpp"
#include "cpl/generate.hpp"
#include "cpl/update.hpp"

namespace {

using namespace cpl;

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

// Best of several runs; shared machines make single timings useless.
template <typename F>
double timed(F&& fn, int reps = 5) {
  double best = 1e100;
  for (int i = 0; i < reps; ++i) {
    auto start = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, ms_since(start));
  }
  return best;
}

void row(const std::string& name, double serial_ms, double parallel_ms,
         bool equal) {
  std::printf("%-34s %10.1f ms %10.1f ms   x%.2f   %s\n", name.c_str(),
              serial_ms, parallel_ms, serial_ms / parallel_ms,
              equal ? "identical" : "MISMATCH");
}

bool same_model(const EpistemicModel& a, const EpistemicModel& b) {
  if (a.worlds() != b.worlds()) return false;
  for (WorldId w = 0; w < a.world_count(); ++w)
    if (a.valuation(w) != b.valuation(w)) return false;
  for (int ag = 0; ag < a.signature().agent_count(); ++ag)
    for (WorldId w = 0; w < a.world_count(); ++w)
      if (a.class_of(ag, w) != b.class_of(ag, w)) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  int worlds = argc > 1 ? std::atoi(argv[1]) : 600;
  std::printf("threads available: %d\n", max_threads());
  std::printf("%-34s %13s %13s\n", "kernel", "serial", "parallel");

  Signature sig({"a", "b", "c"},
                {{"a", {"p", "q"}}, {"b", {"p"}}, {"c", {"p"}}});
  Rng rng(2026);

  // Model update: |W| x |U| product with the immediate-snapshot pattern.
  {
    EpistemicModel m = random_local_model(sig, worlds, rng);
    CommPattern u = gen_pattern("immediate_snapshot", sig.agents());
    KripkeUpdate s_out, p_out;
    double s = timed([&] { s_out = update_kripke(m, u, ExecMode::serial); });
    double p = timed([&] { p_out = update_kripke(m, u, ExecMode::parallel); });
    row("update_kripke " + std::to_string(m.world_count()) + "x" +
            std::to_string(u.size()),
        s, p, same_model(s_out.model, p_out.model));
  }

  // Simplicial update on the translated model.
  {
    EpistemicModel m = random_local_model(sig, worlds / 2, rng);
    SimplicialModel c = to_simplicial(m).model;
    CommPattern u = gen_pattern("immediate_snapshot", sig.agents());
    SimplicialUpdate s_out, p_out;
    double s =
        timed([&] { s_out = update_simplicial(c, u, ExecMode::serial); });
    double p =
        timed([&] { p_out = update_simplicial(c, u, ExecMode::parallel); });
    bool equal = s_out.model.vertex_ids() == p_out.model.vertex_ids() &&
                 s_out.model.facets() == p_out.model.facets();
    row("update_simplicial " + std::to_string(c.facet_count()) + "x" +
            std::to_string(u.size()),
        s, p, equal);
  }

  // Collective bisimulation refinement between a model and a perturbed
  // bisimilar copy.
  {
    EpistemicModel m = random_local_model(sig, worlds / 3, rng);
    WorldId image = 0;
    EpistemicModel m2 = duplicate_worlds(m, worlds / 6, rng, 0, &image);
    RefineSide l = refine_side(m), r = refine_side(m2);
    RefineResult s_res, p_res;
    double s = timed(
        [&] { s_res = refine(l, r, BisimKind::collective, ExecMode::serial); });
    double p = timed([&] {
      p_res = refine(l, r, BisimKind::collective, ExecMode::parallel);
    });
    row("bisim refine " + std::to_string(l.n) + "x" + std::to_string(r.n),
        s, p, s_res.stage == p_res.stage);
  }

  // Refinement on non-bisimilar inputs (random vs random).
  {
    EpistemicModel m = random_local_model(sig, worlds / 3, rng);
    EpistemicModel m2 = random_local_model(sig, worlds / 3, rng);
    RefineSide l = refine_side(m), r = refine_side(m2);
    RefineResult s_res, p_res;
    double s = timed(
        [&] { s_res = refine(l, r, BisimKind::collective, ExecMode::serial); });
    double p = timed([&] {
      p_res = refine(l, r, BisimKind::collective, ExecMode::parallel);
    });
    row("bisim refine (random pair)", s, p, s_res.stage == p_res.stage);
  }

  return 0;
}
