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

#ifndef CPL_FORMULA_HPP
#define CPL_FORMULA_HPP

#include <memory>
#include <string>
#include <vector>

#include "cpl/pattern.hpp"

namespace cpl {

/// AST over the primitive connectives: atoms p_a, negation, conjunction,
/// distributed knowledge D_B, and the pattern box [U,R]. The derived
/// connectives (or, implies, iff, K_a) normalize to these at
/// construction time.
struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class FKind { atom, neg, conj, dknow, box };

struct Formula {
  FKind kind;
  std::string atom;                 // atom
  FormulaPtr lhs, rhs;              // conj: both; neg/dknow/box: lhs
  std::vector<std::string> group;   // dknow: sorted agent names, nonempty
  std::shared_ptr<const CommPattern> pattern;  // box
  int graph = -1;                   // box: index into the pattern
  std::string pattern_name;         // box: display name, may be empty
  std::string graph_name;           // box: display name, may be empty
};

FormulaPtr f_atom(std::string token);
FormulaPtr f_neg(FormulaPtr f);     // collapses double negation
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr f_iff(FormulaPtr a, FormulaPtr b);
FormulaPtr f_dk(std::vector<std::string> group, FormulaPtr f);
FormulaPtr f_know(const std::string& agent, FormulaPtr f);

/// Requires graph to be a member of the pattern (graph_not_in_pattern).
FormulaPtr f_box(std::shared_ptr<const CommPattern> pattern,
                 const CommGraph& graph, FormulaPtr f,
                 std::string pattern_name = {}, std::string graph_name = {});
FormulaPtr f_box(std::shared_ptr<const CommPattern> pattern, int graph_index,
                 FormulaPtr f, std::string pattern_name = {},
                 std::string graph_name = {});

/// Left-assoc conjunction of one or more formulas; a single conjunct is
/// returned as-is.
FormulaPtr f_and_all(const std::vector<FormulaPtr>& fs);
FormulaPtr f_or_all(const std::vector<FormulaPtr>& fs);

bool formula_equal(const Formula& a, const Formula& b);

/// True iff the formula contains a pattern box (i.e. is outside L^-).
bool has_box(const Formula& f);

int formula_size(const Formula& f);

/// Concrete syntax: `~`, `&`, `D{a,b}`, `[pat;graph]`; boxes and
/// patterns print their bound names when known and canonical literals
/// otherwise.
std::string to_string(const Formula& f);

}  // namespace cpl

#endif
