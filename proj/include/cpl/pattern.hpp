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

#ifndef CPL_PATTERN_HPP
#define CPL_PATTERN_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cpl/model.hpp"

namespace cpl {

/// Adjacency mask of a graph over n agents: bit i*n+j set iff agent i's
/// message is received by agent j. n <= kMaxAgents keeps this in 64 bits.
using GraphBits = std::uint64_t;

/// A reflexive relation on a (sorted) agent set: who hears whom in one
/// round of communication.
class CommGraph {
 public:
  CommGraph() = default;

  /// Builds from explicit sender->receiver name pairs. With
  /// `auto_reflexive` the identity pairs are added; otherwise their
  /// absence is a not_reflexive error.
  CommGraph(std::vector<std::string> agents,
            const std::vector<std::pair<std::string, std::string>>& pairs,
            bool auto_reflexive);

  static CommGraph from_bits(std::vector<std::string> agents, GraphBits bits);
  static CommGraph identity(std::vector<std::string> agents);
  static CommGraph universal(std::vector<std::string> agents);

  const std::vector<std::string>& agents() const { return agents_; }
  int agent_count() const { return static_cast<int>(agents_.size()); }
  GraphBits bits() const { return bits_; }

  bool edge(AgentId from, AgentId to) const {
    return bits_ & (GraphBits{1} << (from * agent_count() + to));
  }

  /// In-neighbourhood R a: the senders agent `a` hears from. Always
  /// contains `a` itself.
  AgentSet in_neighbourhood(AgentId a) const;

  /// R B: union of the in-neighbourhoods over a nonempty group.
  AgentSet in_neighbourhood(AgentSet group) const;

  std::vector<std::pair<std::string, std::string>> pairs() const;

  /// Canonical form "{(a,a),(a,b),(b,b)}" with pairs in lexicographic
  /// order; used for ordering, world ids and file output.
  std::string str() const;

  bool operator==(const CommGraph& other) const {
    return agents_ == other.agents_ && bits_ == other.bits_;
  }

 private:
  std::vector<std::string> agents_;
  GraphBits bits_ = 0;
};

/// Lexicographic order on the sorted pair sequences of two graphs over
/// the same agent set.
bool graph_less(int n_agents, GraphBits a, GraphBits b);

/// Name-based in-neighbourhood queries (the spec's operation surface).
AgentSet in_neighbourhood(const CommGraph& g, const std::string& agent);
AgentSet in_neighbourhood(const CommGraph& g,
                          const std::vector<std::string>& group);

/// R B === R' B: the graphs inform every agent in the group identically
/// (pointwise equality of in-neighbourhoods, strictly stronger than
/// equality of the unions).
bool group_view_equal(const CommGraph& r, const CommGraph& r2, AgentSet group);
bool group_view_equal(const CommGraph& r, const CommGraph& r2,
                      const std::vector<std::string>& group);

/// A nonempty, duplicate-free set of communication graphs over one agent
/// set, kept in canonical order.
class CommPattern {
 public:
  CommPattern() = default;
  CommPattern(std::vector<std::string> agents, std::vector<GraphBits> graphs);

  static CommPattern of_graphs(const std::vector<CommGraph>& graphs);

  const std::vector<std::string>& agents() const { return agents_; }
  int agent_count() const { return static_cast<int>(agents_.size()); }
  int size() const { return static_cast<int>(graphs_.size()); }

  GraphBits bits(int i) const { return graphs_[i]; }
  CommGraph graph(int i) const;

  /// Index of the graph in canonical order, or -1.
  int index_of(GraphBits bits) const;
  int index_of(const CommGraph& g) const;

  /// Canonical form "{graph,graph,...}" in canonical graph order.
  std::string str() const;

  bool operator==(const CommPattern& other) const {
    return agents_ == other.agents_ && graphs_ == other.graphs_;
  }

 private:
  std::vector<std::string> agents_;
  std::vector<GraphBits> graphs_;  // canonically sorted, unique
};

/// Named pattern families. Parameters:
///   byzantine            sender, receiver  ({I, I+(s,r)})
///   immediate_snapshot   -                 (ordered partitions of A)
///   full_async           -                 (all reflexive graphs)
///   silent               -                 ({I})
///   public_announcement  -                 ({U})
///   group_announcement   group             ({(B x A) + I})
///   gossip               mode: pushpull|push|pull, timing: sync|async
CommPattern gen_pattern(const std::string& family,
                        std::vector<std::string> agents,
                        const std::map<std::string, std::string>& params = {});

}  // namespace cpl

#endif
