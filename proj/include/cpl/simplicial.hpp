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

#ifndef CPL_SIMPLICIAL_HPP
#define CPL_SIMPLICIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "cpl/model.hpp"

namespace cpl {

using VertexId = int;
using FacetId = int;

struct VertexSpec {
  std::string id;
  std::string colour;
  std::vector<std::string> atoms;  // full tokens, owned by the colour
};

/// Pure chromatic simplicial model, stored by its facets (the downward
/// closure is implicit). Every facet has exactly one vertex per agent;
/// vertices carry their colour's local atoms. Immutable once built.
class SimplicialModel {
 public:
  const Signature& signature() const { return sig_; }

  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  int facet_count() const { return static_cast<int>(facets_.size()); }

  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  AgentId colour(VertexId v) const { return colour_[v]; }
  AtomSet vertex_valuation(VertexId v) const { return vval_[v]; }

  /// Facet as sorted vertex indices.
  const std::vector<VertexId>& facet(FacetId x) const { return facets_[x]; }
  const std::vector<std::vector<VertexId>>& facets() const { return facets_; }

  /// The unique vertex of colour `a` in facet `x`.
  VertexId vertex_of(FacetId x, AgentId a) const { return by_colour_[x][a]; }

  VertexId vertex_index(const std::string& id) const;
  std::optional<VertexId> find_vertex(const std::string& id) const;

  /// Facet lookup by vertex-id set (order-insensitive).
  FacetId facet_index(const std::vector<std::string>& vertex_names) const;
  std::optional<FacetId> find_facet(
      const std::vector<std::string>& vertex_names) const;

  /// Canonical facet name "{v,w,y}" with sorted vertex ids.
  std::string facet_name(FacetId x) const;
  FacetId facet_by_name(const std::string& name) const;

  /// Colours shared by two facets: chi(X cap Y).
  AgentSet intersection_colours(FacetId x, FacetId y) const;

  /// ell(X): union of the vertex valuations of a facet.
  AtomSet facet_valuation(FacetId x) const;

  /// ell of an arbitrary face given as vertex names; the face must be a
  /// subset of some facet (unknown_face otherwise).
  AtomSet face_valuation(const std::vector<std::string>& vertex_names) const;

  friend SimplicialModel build_simplicial(
      const Signature&, const std::vector<VertexSpec>&,
      const std::vector<std::vector<std::string>>&);
  friend struct detail::Assembler;

 private:
  Signature sig_;
  std::vector<std::string> vertex_ids_;  // sorted
  std::vector<AgentId> colour_;
  std::vector<AtomSet> vval_;
  std::vector<std::vector<VertexId>> facets_;     // sorted sets, sorted list
  std::vector<std::vector<VertexId>> by_colour_;  // [facet][agent]
};

struct PointedSimplicial {
  const SimplicialModel* model;
  FacetId facet;
};

/// Validates and builds: chromatic, pure of dimension |A|-1, no orphan
/// vertices, maximal facets, valuations owned by the vertex colour.
/// Duplicate facets merge silently.
SimplicialModel build_simplicial(
    const Signature& sig, const std::vector<VertexSpec>& vertices,
    const std::vector<std::vector<std::string>>& facets);

}  // namespace cpl

#endif
