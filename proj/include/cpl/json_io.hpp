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

#ifndef CPL_JSON_IO_HPP
#define CPL_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "cpl/model.hpp"
#include "cpl/pattern.hpp"
#include "cpl/simplicial.hpp"

namespace cpl {

using Json = nlohmann::json;

/// File formats. Epistemic:
///   {"agents":[..], "atoms":{"a":["p"],..}, "worlds":[..],
///    "valuation":{"w":["p_a",..],..}, "relations":{"a":[["w1","w2"],..],..}}
/// Simplicial:
///   {"agents":[..], "atoms":{..}, "vertices":{"v":{"colour":"b",
///    "atoms":["p_b"]},..}, "facets":[["v","w","y"],..]}
/// Pattern:
///   {"agents":[..], "graphs":[[["a","a"],["a","b"]],..]}
///   or {"agents":[..], "gen":"immediate_snapshot", "params":{..}}
/// Writers emit canonical (sorted) forms; readers ignore unknown keys.

Json model_to_json(const EpistemicModel& m);
EpistemicModel model_from_json(const Json& j);

Json simplicial_to_json(const SimplicialModel& c);
SimplicialModel simplicial_from_json(const Json& j);

Json pattern_to_json(const CommPattern& u);
CommPattern pattern_from_json(const Json& j);

enum class FileKind { kripke, simplicial, pattern };

/// Detects the structure by its top-level keys: "relations" is epistemic,
/// "facets" simplicial, "graphs"/"gen" a pattern.
FileKind detect_kind(const Json& j);

Json load_json(const std::string& path);
void save_json(const std::string& path, const Json& j);

/// Canonical serialization used for byte-stable CLI output.
std::string dump_json(const Json& j);

}  // namespace cpl

#endif
