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

#ifndef CPL_GALLERY_HPP
#define CPL_GALLERY_HPP

#include <string>
#include <variant>
#include <vector>

#include "cpl/model.hpp"
#include "cpl/pattern.hpp"
#include "cpl/simplicial.hpp"

namespace cpl {

/// Built-in example structures: the classic two-general and gossip-style
/// scenarios, matched epistemic/simplicial pairs, and the named pattern
/// families at small sizes. The CLI `examples` command materializes them
/// and the test suites build on them.
struct GalleryItem {
  std::string name;
  std::variant<EpistemicModel, SimplicialModel, CommPattern> value;
  std::string point;  // a natural world/facet to evaluate at ("" for patterns)
  std::string note;
};

const std::vector<GalleryItem>& gallery();

const EpistemicModel& gallery_model(const std::string& name);
const SimplicialModel& gallery_simplicial(const std::string& name);
const CommPattern& gallery_pattern(const std::string& name);

}  // namespace cpl

#endif
