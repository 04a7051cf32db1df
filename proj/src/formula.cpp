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

#include "cpl/formula.hpp"

#include <algorithm>

namespace cpl {

FormulaPtr f_atom(std::string token) {
  Signature::split_atom(token);  // reject tokens without an owner suffix
  auto f = std::make_shared<Formula>();
  f->kind = FKind::atom;
  f->atom = std::move(token);
  return f;
}

FormulaPtr f_neg(FormulaPtr sub) {
  if (sub->kind == FKind::neg) return sub->lhs;
  auto f = std::make_shared<Formula>();
  f->kind = FKind::neg;
  f->lhs = std::move(sub);
  return f;
}

FormulaPtr f_and(FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::conj;
  f->lhs = std::move(a);
  f->rhs = std::move(b);
  return f;
}

FormulaPtr f_or(FormulaPtr a, FormulaPtr b) {
  return f_neg(f_and(f_neg(std::move(a)), f_neg(std::move(b))));
}

FormulaPtr f_implies(FormulaPtr a, FormulaPtr b) {
  return f_neg(f_and(std::move(a), f_neg(std::move(b))));
}

FormulaPtr f_iff(FormulaPtr a, FormulaPtr b) {
  return f_and(f_implies(a, b), f_implies(b, a));
}

FormulaPtr f_dk(std::vector<std::string> group, FormulaPtr sub) {
  if (group.empty()) fail(Errc::empty_group, "D needs a nonempty group");
  std::sort(group.begin(), group.end());
  group.erase(std::unique(group.begin(), group.end()), group.end());
  auto f = std::make_shared<Formula>();
  f->kind = FKind::dknow;
  f->group = std::move(group);
  f->lhs = std::move(sub);
  return f;
}

FormulaPtr f_know(const std::string& agent, FormulaPtr sub) {
  return f_dk({agent}, std::move(sub));
}

FormulaPtr f_box(std::shared_ptr<const CommPattern> pattern, int graph_index,
                 FormulaPtr sub, std::string pattern_name,
                 std::string graph_name) {
  if (!pattern || graph_index < 0 || graph_index >= pattern->size())
    fail(Errc::graph_not_in_pattern, "graph is not in the pattern");
  auto f = std::make_shared<Formula>();
  f->kind = FKind::box;
  f->pattern = std::move(pattern);
  f->graph = graph_index;
  f->lhs = std::move(sub);
  f->pattern_name = std::move(pattern_name);
  f->graph_name = std::move(graph_name);
  return f;
}

FormulaPtr f_box(std::shared_ptr<const CommPattern> pattern,
                 const CommGraph& graph, FormulaPtr sub,
                 std::string pattern_name, std::string graph_name) {
  if (!pattern) fail(Errc::bad_params, "null pattern");
  int i = pattern->index_of(graph);
  if (i < 0)
    fail(Errc::graph_not_in_pattern,
         "graph " + graph.str() + " is not in the pattern");
  return f_box(std::move(pattern), i, std::move(sub), std::move(pattern_name),
               std::move(graph_name));
}

FormulaPtr f_and_all(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) fail(Errc::bad_params, "empty conjunction");
  FormulaPtr out = fs.front();
  for (size_t i = 1; i < fs.size(); ++i) out = f_and(out, fs[i]);
  return out;
}

FormulaPtr f_or_all(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) fail(Errc::bad_params, "empty disjunction");
  FormulaPtr out = fs.front();
  for (size_t i = 1; i < fs.size(); ++i) out = f_or(out, fs[i]);
  return out;
}

bool formula_equal(const Formula& a, const Formula& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case FKind::atom:
      return a.atom == b.atom;
    case FKind::neg:
      return formula_equal(*a.lhs, *b.lhs);
    case FKind::conj:
      return formula_equal(*a.lhs, *b.lhs) && formula_equal(*a.rhs, *b.rhs);
    case FKind::dknow:
      return a.group == b.group && formula_equal(*a.lhs, *b.lhs);
    case FKind::box:
      return *a.pattern == *b.pattern && a.graph == b.graph &&
             formula_equal(*a.lhs, *b.lhs);
  }
  return false;
}

bool has_box(const Formula& f) {
  switch (f.kind) {
    case FKind::atom: return false;
    case FKind::neg: case FKind::dknow: return has_box(*f.lhs);
    case FKind::conj: return has_box(*f.lhs) || has_box(*f.rhs);
    case FKind::box: return true;
  }
  return false;
}

int formula_size(const Formula& f) {
  switch (f.kind) {
    case FKind::atom: return 1;
    case FKind::neg: case FKind::dknow: case FKind::box:
      return 1 + formula_size(*f.lhs);
    case FKind::conj:
      return 1 + formula_size(*f.lhs) + formula_size(*f.rhs);
  }
  return 1;
}

namespace {

void print(const Formula& f, std::string& out) {
  auto print_tight = [&out](const Formula& sub) {
    // Conjunction is the only connective binding looser than the
    // prefixes, so it is the only child needing parentheses.
    if (sub.kind == FKind::conj) {
      out += "(";
      print(sub, out);
      out += ")";
    } else {
      print(sub, out);
    }
  };
  switch (f.kind) {
    case FKind::atom:
      out += f.atom;
      break;
    case FKind::neg:
      out += "~";
      print_tight(*f.lhs);
      break;
    case FKind::conj:
      print(*f.lhs, out);
      out += " & ";
      if (f.rhs->kind == FKind::conj) {
        out += "(";
        print(*f.rhs, out);
        out += ")";
      } else {
        print(*f.rhs, out);
      }
      break;
    case FKind::dknow: {
      out += "D{";
      for (size_t i = 0; i < f.group.size(); ++i) {
        if (i) out += ",";
        out += f.group[i];
      }
      out += "} ";
      print_tight(*f.lhs);
      break;
    }
    case FKind::box: {
      out += "[";
      out += f.pattern_name.empty() ? f.pattern->str() : f.pattern_name;
      out += ";";
      out += f.graph_name.empty() ? f.pattern->graph(f.graph).str()
                                  : f.graph_name;
      out += "] ";
      print_tight(*f.lhs);
      break;
    }
  }
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

}  // namespace cpl
