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

#ifndef CPL_PARSER_HPP
#define CPL_PARSER_HPP

#include <map>
#include <memory>
#include <string>

#include "cpl/formula.hpp"
#include "cpl/model.hpp"

namespace cpl {

/// Name bindings for `[pattern;graph]` references. Graph names resolve
/// here first; `I` and `U` are built in (relative to the pattern's
/// agents), and `{(a,b),...}` literals are accepted in either position.
struct PatternEnv {
  std::map<std::string, std::shared_ptr<const CommPattern>> patterns;
  std::map<std::string, CommGraph> graphs;
};

/// Grammar, loosest to tightest: `<->` | `->` (right-assoc) | `|` | `&`;
/// prefixes `~`, `D{a,..}`, `K{a}`, `[pat;graph]`; atoms `p_a` with the
/// owner after the last underscore; parentheses free. Derived
/// connectives are expanded during parsing. Errors report the offset.
FormulaPtr parse_formula(const std::string& text, const Signature& sig,
                         const PatternEnv& env = {});

}  // namespace cpl

#endif
