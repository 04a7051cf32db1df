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

#ifndef CPL_AXIOMS_HPP
#define CPL_AXIOMS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace cpl {

/// Outcome of falsification for one axiom schema (or control): whether
/// any sampled instance lost a counterexample search, on either
/// semantics. Valid schemas must survive; controls must not.
struct AxiomReport {
  std::string name;
  bool expect_valid = true;
  int instances = 0;
  bool counterexample_found = false;
  std::string detail;  // first falsified instance and its witness

  bool ok() const { return expect_valid != counterexample_found; }
};

struct AxiomSuiteOptions {
  std::uint64_t seed = 7;
  // Exhaustive phase: two agents, one atom each, up to three worlds,
  // every pattern over the two agents. Random phase: per instance, this
  // many random three-agent models of up to four worlds.
  int random_kripke_trials = 100;
  int random_simplicial_trials = 50;
  int random_instances = 10;
  bool both_semantics = true;
  bool exhaustive_only = false;  // skip the random phase (used by tests)
};

/// Falsification sweep over the axiomatization: propositional schemas,
/// the locality axiom, the S5-style D_B schemas, monotonicity, the four
/// box reduction schemas, the necessitation and replacement rule shapes,
/// plus invalid controls that must produce counterexamples.
std::vector<AxiomReport> run_axiom_suite(const AxiomSuiteOptions& options);

}  // namespace cpl

#endif
