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

#ifndef CPL_MODEL_HPP
#define CPL_MODEL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cpl/error.hpp"

namespace cpl {

namespace detail {
struct Assembler;
}

using AgentId = int;
using WorldId = int;

/// Bitmask over agent indices. Capped at kMaxAgents so a communication
/// graph fits in one 64-bit adjacency mask.
using AgentSet = std::uint32_t;

/// Bitmask over atom indices of a signature.
using AtomSet = std::uint64_t;

inline constexpr int kMaxAgents = 8;
inline constexpr int kMaxAtoms = 64;

AgentSet full_agent_set(int n_agents);

/// Agents plus the local atoms they own. Atom tokens are written `p_a`
/// where the owner is the segment after the last underscore.
class Signature {
 public:
  Signature() = default;

  /// `atoms` maps an agent name to its owned atom names (without the
  /// owner suffix), mirroring the JSON model format.
  Signature(std::vector<std::string> agents,
            const std::map<std::string, std::vector<std::string>>& atoms);

  const std::vector<std::string>& agents() const { return agents_; }
  const std::vector<std::string>& atoms() const { return atoms_; }

  int agent_count() const { return static_cast<int>(agents_.size()); }
  int atom_count() const { return static_cast<int>(atoms_.size()); }

  AgentId agent_index(const std::string& name) const;
  std::optional<AgentId> find_agent(const std::string& name) const;

  /// Index of a full atom token such as "p_a"; throws unknown_atom.
  int atom_index(const std::string& token) const;
  std::optional<int> find_atom(const std::string& token) const;

  AgentId atom_owner(int atom) const { return owner_[atom]; }

  /// Mask of the atoms owned by the agents in `group` (the set P_B).
  AtomSet atoms_of(AgentSet group) const;

  bool operator==(const Signature& other) const {
    return agents_ == other.agents_ && atoms_ == other.atoms_;
  }

  /// Splits an atom token at its last underscore: "p_a" -> {"p", "a"}.
  static std::pair<std::string, std::string> split_atom(
      const std::string& token);

 private:
  std::vector<std::string> agents_;  // sorted, unique
  std::vector<std::string> atoms_;   // full tokens, sorted, unique
  std::vector<AgentId> owner_;       // parallel to atoms_
};

/// One indistinguishability violation found by check_locality.
struct LocalityViolation {
  std::string agent;
  std::string world_a;
  std::string world_b;
};

/// Finite epistemic model: worlds, one equivalence relation per agent
/// (stored as a partition), and a valuation. Construction validates the
/// partition shape and locality; instances are immutable afterwards.
class EpistemicModel {
 public:
  const Signature& signature() const { return sig_; }
  const std::vector<std::string>& worlds() const { return worlds_; }
  int world_count() const { return static_cast<int>(worlds_.size()); }

  WorldId world_index(const std::string& name) const;
  std::optional<WorldId> find_world(const std::string& name) const;

  AtomSet valuation(WorldId w) const { return val_[w]; }

  /// Block id of `w` in agent `a`'s partition. Blocks are numbered by
  /// their smallest world index.
  int class_of(AgentId a, WorldId w) const { return class_of_[a][w]; }
  const std::vector<std::vector<WorldId>>& blocks(AgentId a) const {
    return blocks_[a];
  }

  bool related(AgentId a, WorldId v, WorldId w) const {
    return class_of_[a][v] == class_of_[a][w];
  }

  /// w ~_B v: the partition meet over the agents in `group`.
  bool group_related(WorldId v, WorldId w, AgentSet group) const;

  /// Per-world block ids of the meet partition for `group`, numbered by
  /// smallest member. The meet of zero agents is rejected.
  std::vector<int> meet_partition(AgentSet group) const;

  friend class ModelBuilder;
  friend struct detail::Assembler;
  friend EpistemicModel build_model(
      const Signature&,
      const std::vector<std::pair<std::string, std::vector<std::string>>>&,
      const std::map<std::string, std::vector<std::vector<std::string>>>&);

 private:
  Signature sig_;
  std::vector<std::string> worlds_;  // sorted
  std::vector<AtomSet> val_;
  std::vector<std::vector<int>> class_of_;            // [agent][world]
  std::vector<std::vector<std::vector<WorldId>>> blocks_;  // [agent][block]
};

struct PointedModel {
  const EpistemicModel* model;
  WorldId world;
};

/// Assembles and validates an EpistemicModel from name-keyed parts.
class ModelBuilder {
 public:
  explicit ModelBuilder(Signature sig) : sig_(std::move(sig)) {}

  ModelBuilder& world(const std::string& name,
                      const std::vector<std::string>& true_atoms);

  /// Declares agent `a`'s partition as explicit blocks of world names.
  /// Worlds not mentioned in any block form singleton classes, so the
  /// identity relation is expressible by omission; overlapping or empty
  /// blocks are rejected.
  ModelBuilder& relation(const std::string& agent,
                         const std::vector<std::vector<std::string>>& blocks);

  /// Validates and returns the model. Throws partition_error,
  /// locality_error or unknown_id.
  EpistemicModel build() const;

 private:
  Signature sig_;
  std::vector<std::pair<std::string, std::vector<std::string>>> worlds_;
  std::map<std::string, std::vector<std::vector<std::string>>> relations_;
};

/// Constructs a validated model in one call; the JSON layer and the
/// generators funnel through this.
EpistemicModel build_model(
    const Signature& sig,
    const std::vector<std::pair<std::string, std::vector<std::string>>>&
        worlds,
    const std::map<std::string, std::vector<std::vector<std::string>>>&
        relations);

/// Lists every (agent, v, w) pair with v ~_a w but differing P_a-values.
/// Takes the parts pre-validation, so broken inputs can be inspected.
std::vector<LocalityViolation> check_locality(
    const Signature& sig,
    const std::vector<std::pair<std::string, std::vector<std::string>>>&
        worlds,
    const std::map<std::string, std::vector<std::vector<std::string>>>&
        relations);

/// The same report on a built model; empty by construction, but the scan
/// is performed, not assumed.
std::vector<LocalityViolation> check_locality(const EpistemicModel& m);

/// Resolves an agent-name list to a nonempty mask; throws empty_group /
/// unknown_agent.
AgentSet agent_set(const Signature& sig, const std::vector<std::string>& names);

std::vector<std::string> agent_names(const Signature& sig, AgentSet set);

}  // namespace cpl

#endif
