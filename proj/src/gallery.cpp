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

#include "cpl/gallery.hpp"

namespace cpl {

namespace {

Signature sig_ab_pa() { return Signature({"a", "b"}, {{"a", {"p"}}}); }
Signature sig_ab() {
  return Signature({"a", "b"}, {{"a", {"p"}}, {"b", {"p"}}});
}
Signature sig_abc() {
  return Signature({"a", "b", "c"}, {{"a", {"p"}}, {"b", {"p"}}, {"c", {"p"}}});
}

std::vector<GalleryItem> make_gallery() {
  std::vector<GalleryItem> items;

  // Two generals: b cannot tell whether a wants to attack (p_a).
  items.push_back(
      {"byz_base",
       build_model(sig_ab_pa(), {{"w1", {"p_a"}}, {"w2", {}}},
                   {{"b", {{"w1", "w2"}}}}),
       "w1", "two worlds only b confuses; the unreliable-messenger base"});

  // Each of a and b knows only its own bit.
  items.push_back(
      {"square2",
       build_model(sig_ab(),
                   {{"s", {}}, {"t", {"p_b"}}, {"u", {"p_a", "p_b"}},
                    {"v", {"p_a"}}},
                   {{"a", {{"s", "t"}, {"u", "v"}}},
                    {"b", {{"s", "v"}, {"t", "u"}}}}),
       "u", "two independent private bits; a four-world square"});

  // A pair separated by distributed knowledge of p_c but not by any
  // single agent's knowledge.
  items.push_back(
      {"cbisim_m",
       build_model(sig_abc(),
                   {{"v", {"p_a", "p_b"}}, {"w", {"p_a", "p_b", "p_c"}}},
                   {{"a", {{"v", "w"}}}, {"b", {{"v", "w"}}}}),
       "w", "a and b share one link; D{a,b} p_c fails at w"});
  items.push_back(
      {"cbisim_mp",
       build_model(sig_abc(),
                   {{"v1", {"p_a", "p_b"}},
                    {"w1", {"p_a", "p_b", "p_c"}},
                    {"w2", {"p_a", "p_b", "p_c"}},
                    {"v2", {"p_a", "p_b"}}},
                   {{"a", {{"v1", "w1"}, {"w2", "v2"}}},
                    {"b", {{"v1", "w2"}, {"w1", "v2"}}}}),
       "w1", "alternating a/b square; D{a,b} p_c holds at w1"});

  // Epistemic twins of the three-triangle models below.
  items.push_back(
      {"duo_a",
       build_model(sig_abc(), {{"u", {"p_b", "p_c"}}, {"v", {"p_c"}}},
                   {{"a", {{"u", "v"}}}}),
       "u", "only a confuses the two worlds"});
  items.push_back(
      {"duo_ac",
       build_model(sig_abc(), {{"u", {"p_b", "p_c"}}, {"v", {"p_c"}}},
                   {{"a", {{"u", "v"}}}, {"c", {{"u", "v"}}}}),
       "u", "a and c confuse the two worlds"});
  items.push_back(
      {"solo", build_model(sig_abc(), {{"u", {"p_b", "p_c"}}}, {}), "u",
       "a single world"});

  // Two triangles glued at the a-vertex.
  items.push_back(
      {"tri_shared_a",
       build_simplicial(sig_abc(),
                        {{"v", "b", {"p_b"}},
                         {"w", "a", {}},
                         {"x", "b", {}},
                         {"y", "c", {"p_c"}},
                         {"z", "c", {"p_c"}}},
                        {{"v", "w", "y"}, {"w", "x", "z"}}),
       "{v,w,y}", "two facets sharing only their a-vertex"});

  // Two triangles glued along the a-c edge.
  items.push_back(
      {"tri_shared_ac",
       build_simplicial(sig_abc(),
                        {{"v", "b", {"p_b"}},
                         {"w", "a", {}},
                         {"x", "b", {}},
                         {"y", "c", {"p_c"}}},
                        {{"v", "w", "y"}, {"w", "x", "y"}}),
       "{v,w,y}", "two facets sharing their a- and c-vertices"});

  items.push_back(
      {"tri_single",
       build_simplicial(sig_abc(),
                        {{"w", "a", {}}, {"x", "b", {"p_b"}},
                         {"y", "c", {"p_c"}}},
                        {{"w", "x", "y"}}),
       "{w,x,y}", "one facet; everything is known"});

  // Simplicial counterparts of cbisim_m / cbisim_mp.
  items.push_back(
      {"simp_cbisim_c",
       build_simplicial(sig_abc(),
                        {{"va", "a", {"p_a"}},
                         {"vb", "b", {"p_b"}},
                         {"c1", "c", {"p_c"}},
                         {"c0", "c", {}}},
                        {{"va", "vb", "c1"}, {"va", "vb", "c0"}}),
       "{c1,va,vb}", "two facets sharing the a-b edge"});
  items.push_back(
      {"simp_cbisim_cp",
       build_simplicial(sig_abc(),
                        {{"a1", "a", {"p_a"}},
                         {"a2", "a", {"p_a"}},
                         {"b1", "b", {"p_b"}},
                         {"b2", "b", {"p_b"}},
                         {"cl", "c", {"p_c"}},
                         {"cr", "c", {"p_c"}},
                         {"ct", "c", {}},
                         {"cb", "c", {}}},
                        {{"cl", "a1", "b1"},
                         {"a1", "b2", "ct"},
                         {"a2", "b2", "cr"},
                         {"b1", "a2", "cb"}}),
       "{a1,b1,cl}", "four facets in a ring; alternating a/b gluing"});

  // Patterns.
  items.push_back({"byz",
                   gen_pattern("byzantine", {"a", "b"},
                               {{"sender", "a"}, {"receiver", "b"}}),
                   "", "a's message to b may be lost: {I, I+(a,b)}"});
  items.push_back({"imsnap2", gen_pattern("immediate_snapshot", {"a", "b"}),
                   "", "ordered partitions of two agents"});
  items.push_back({"imsnap3",
                   gen_pattern("immediate_snapshot", {"a", "b", "c"}), "",
                   "ordered partitions of three agents"});
  items.push_back({"fullasync2", gen_pattern("full_async", {"a", "b"}), "",
                   "all reflexive graphs on two agents"});
  items.push_back({"silent2", gen_pattern("silent", {"a", "b"}), "",
                   "nobody sends: {I}"});
  items.push_back({"public2",
                   gen_pattern("public_announcement", {"a", "b"}), "",
                   "everyone tells everyone: {U}"});
  items.push_back({"public3",
                   gen_pattern("public_announcement", {"a", "b", "c"}), "",
                   "everyone tells everyone: {U}"});
  items.push_back({"group_bc3",
                   gen_pattern("group_announcement", {"a", "b", "c"},
                               {{"group", "b,c"}}),
                   "", "b and c announce to all"});
  items.push_back({"gossip3",
                   gen_pattern("gossip", {"a", "b", "c"},
                               {{"mode", "pushpull"}, {"timing", "sync"}}),
                   "", "one synchronous pushpull call"});
  items.push_back({"gossip3_async",
                   gen_pattern("gossip", {"a", "b", "c"},
                               {{"mode", "pushpull"}, {"timing", "async"}}),
                   "", "pushpull calls, possibly none"});
  items.push_back(
      {"rbc",
       CommPattern::of_graphs({CommGraph(
           {"a", "b", "c"}, {{"b", "c"}}, /*auto_reflexive=*/true)}),
       "", "only b's message to c arrives, and that is known"});

  return items;
}

}  // namespace

const std::vector<GalleryItem>& gallery() {
  static const std::vector<GalleryItem> items = make_gallery();
  return items;
}

namespace {

const GalleryItem& find_item(const std::string& name) {
  for (const auto& item : gallery())
    if (item.name == name) return item;
  fail(Errc::unknown_id, "no gallery entry named '" + name + "'");
}

}  // namespace

const EpistemicModel& gallery_model(const std::string& name) {
  return std::get<EpistemicModel>(find_item(name).value);
}

const SimplicialModel& gallery_simplicial(const std::string& name) {
  return std::get<SimplicialModel>(find_item(name).value);
}

const CommPattern& gallery_pattern(const std::string& name) {
  return std::get<CommPattern>(find_item(name).value);
}

}  // namespace cpl
