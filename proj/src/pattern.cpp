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

#include "cpl/pattern.hpp"

#include <algorithm>
#include <functional>

namespace cpl {

namespace {

GraphBits identity_bits(int n) {
  GraphBits b = 0;
  for (int i = 0; i < n; ++i) b |= GraphBits{1} << (i * n + i);
  return b;
}

GraphBits universal_bits(int n) {
  return n * n >= 64 ? ~GraphBits{0} : (GraphBits{1} << (n * n)) - 1;
}

void check_agent_cap(const std::vector<std::string>& agents) {
  if (agents.empty()) fail(Errc::bad_params, "agent set must be nonempty");
  if (static_cast<int>(agents.size()) > kMaxAgents)
    fail(Errc::too_large, "at most " + std::to_string(kMaxAgents) +
                              " agents are supported");
}

std::vector<std::string> sorted_unique(std::vector<std::string> agents) {
  std::sort(agents.begin(), agents.end());
  if (std::adjacent_find(agents.begin(), agents.end()) != agents.end())
    fail(Errc::bad_params, "duplicate agent id");
  return agents;
}

}  // namespace

CommGraph::CommGraph(
    std::vector<std::string> agents,
    const std::vector<std::pair<std::string, std::string>>& pairs,
    bool auto_reflexive) {
  agents_ = sorted_unique(std::move(agents));
  check_agent_cap(agents_);
  int n = agent_count();
  auto index = [&](const std::string& a) -> int {
    auto it = std::lower_bound(agents_.begin(), agents_.end(), a);
    if (it == agents_.end() || *it != a)
      fail(Errc::unknown_agent, "unknown agent '" + a + "'");
    return static_cast<int>(it - agents_.begin());
  };
  for (const auto& [from, to] : pairs)
    bits_ |= GraphBits{1} << (index(from) * n + index(to));
  GraphBits id = identity_bits(n);
  if (auto_reflexive) {
    bits_ |= id;
  } else if ((bits_ & id) != id) {
    for (int i = 0; i < n; ++i)
      if (!(bits_ & (GraphBits{1} << (i * n + i))))
        fail(Errc::not_reflexive,
             "missing reflexive pair (" + agents_[i] + "," + agents_[i] + ")");
  }
}

CommGraph CommGraph::from_bits(std::vector<std::string> agents,
                               GraphBits bits) {
  CommGraph g;
  g.agents_ = sorted_unique(std::move(agents));
  check_agent_cap(g.agents_);
  GraphBits id = identity_bits(g.agent_count());
  if ((bits & id) != id)
    fail(Errc::not_reflexive, "graph mask is not reflexive");
  g.bits_ = bits;
  return g;
}

CommGraph CommGraph::identity(std::vector<std::string> agents) {
  auto sorted = sorted_unique(std::move(agents));
  check_agent_cap(sorted);
  GraphBits id = identity_bits(static_cast<int>(sorted.size()));
  return from_bits(std::move(sorted), id);
}

CommGraph CommGraph::universal(std::vector<std::string> agents) {
  auto sorted = sorted_unique(std::move(agents));
  check_agent_cap(sorted);
  GraphBits u = universal_bits(static_cast<int>(sorted.size()));
  return from_bits(std::move(sorted), u);
}

AgentSet CommGraph::in_neighbourhood(AgentId a) const {
  int n = agent_count();
  AgentSet out = 0;
  for (int i = 0; i < n; ++i)
    if (bits_ & (GraphBits{1} << (i * n + a))) out |= AgentSet{1} << i;
  return out;
}

AgentSet CommGraph::in_neighbourhood(AgentSet group) const {
  if (group == 0) fail(Errc::empty_group, "group must be nonempty");
  AgentSet out = 0;
  for (int a = 0; a < agent_count(); ++a)
    if (group & (AgentSet{1} << a)) out |= in_neighbourhood(a);
  return out;
}

std::vector<std::pair<std::string, std::string>> CommGraph::pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  int n = agent_count();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (bits_ & (GraphBits{1} << (i * n + j)))
        out.emplace_back(agents_[i], agents_[j]);
  return out;
}

std::string CommGraph::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [from, to] : pairs()) {
    if (!first) out += ",";
    first = false;
    out += "(" + from + "," + to + ")";
  }
  return out + "}";
}

bool graph_less(int /*n_agents*/, GraphBits x, GraphBits y) {
  // Pair sequences in lexicographic order are the ascending bit
  // positions, so compare at the lowest differing bit.
  if (x == y) return false;
  GraphBits diff = x ^ y;
  GraphBits low = diff & (~diff + 1);
  GraphBits above = ~(low | (low - 1));
  if (x & low) return (y & above) != 0;  // y continues past the prefix
  return (x & above) == 0;               // x is a proper prefix of y
}

AgentSet in_neighbourhood(const CommGraph& g, const std::string& agent) {
  auto it = std::lower_bound(g.agents().begin(), g.agents().end(), agent);
  if (it == g.agents().end() || *it != agent)
    fail(Errc::unknown_agent, "unknown agent '" + agent + "'");
  return g.in_neighbourhood(static_cast<AgentId>(it - g.agents().begin()));
}

AgentSet in_neighbourhood(const CommGraph& g,
                          const std::vector<std::string>& group) {
  if (group.empty()) fail(Errc::empty_group, "agent group must be nonempty");
  AgentSet out = 0;
  for (const auto& a : group) out |= in_neighbourhood(g, a);
  return out;
}

bool group_view_equal(const CommGraph& r, const CommGraph& r2,
                      AgentSet group) {
  if (r.agents() != r2.agents())
    fail(Errc::agent_set_mismatch, "graphs are over different agent sets");
  if (group == 0) fail(Errc::empty_group, "group must be nonempty");
  for (int a = 0; a < r.agent_count(); ++a)
    if ((group & (AgentSet{1} << a)) &&
        r.in_neighbourhood(a) != r2.in_neighbourhood(a))
      return false;
  return true;
}

bool group_view_equal(const CommGraph& r, const CommGraph& r2,
                      const std::vector<std::string>& group) {
  if (group.empty()) fail(Errc::empty_group, "agent group must be nonempty");
  AgentSet g = 0;
  for (const auto& a : group) {
    auto it = std::lower_bound(r.agents().begin(), r.agents().end(), a);
    if (it == r.agents().end() || *it != a)
      fail(Errc::unknown_agent, "unknown agent '" + a + "'");
    g |= AgentSet{1} << (it - r.agents().begin());
  }
  return group_view_equal(r, r2, g);
}

CommPattern::CommPattern(std::vector<std::string> agents,
                         std::vector<GraphBits> graphs) {
  agents_ = sorted_unique(std::move(agents));
  check_agent_cap(agents_);
  if (graphs.empty()) fail(Errc::bad_params, "pattern must be nonempty");
  GraphBits id = identity_bits(agent_count());
  for (GraphBits g : graphs)
    if ((g & id) != id)
      fail(Errc::not_reflexive, "pattern contains a non-reflexive graph");
  int n = agent_count();
  std::sort(graphs.begin(), graphs.end(),
            [n](GraphBits a, GraphBits b) { return graph_less(n, a, b); });
  graphs.erase(std::unique(graphs.begin(), graphs.end()), graphs.end());
  graphs_ = std::move(graphs);
}

CommPattern CommPattern::of_graphs(const std::vector<CommGraph>& graphs) {
  if (graphs.empty()) fail(Errc::bad_params, "pattern must be nonempty");
  std::vector<GraphBits> bits;
  for (const auto& g : graphs) {
    if (g.agents() != graphs.front().agents())
      fail(Errc::agent_set_mismatch, "graphs are over different agent sets");
    bits.push_back(g.bits());
  }
  return CommPattern(graphs.front().agents(), std::move(bits));
}

CommGraph CommPattern::graph(int i) const {
  return CommGraph::from_bits(agents_, graphs_[i]);
}

int CommPattern::index_of(GraphBits bits) const {
  int n = agent_count();
  auto it = std::lower_bound(
      graphs_.begin(), graphs_.end(), bits,
      [n](GraphBits a, GraphBits b) { return graph_less(n, a, b); });
  if (it == graphs_.end() || *it != bits) return -1;
  return static_cast<int>(it - graphs_.begin());
}

int CommPattern::index_of(const CommGraph& g) const {
  if (g.agents() != agents_) return -1;
  return index_of(g.bits());
}

std::string CommPattern::str() const {
  std::string out = "{";
  for (int i = 0; i < size(); ++i) {
    if (i) out += ",";
    out += graph(i).str();
  }
  return out + "}";
}

namespace {

// Ordered partitions of {0..n-1}: (a,b) in the induced graph iff a's
// concurrency class comes no later than b's.
void ordered_partitions(int n, std::vector<GraphBits>& out) {
  std::vector<int> stage(n, -1);
  std::function<void(AgentSet, int)> rec = [&](AgentSet remaining, int depth) {
    if (remaining == 0) {
      GraphBits g = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (stage[i] <= stage[j]) g |= GraphBits{1} << (i * n + j);
      out.push_back(g);
      return;
    }
    // Iterate nonempty subsets of the remaining agents as the next class.
    for (AgentSet s = remaining; s != 0; s = (s - 1) & remaining) {
      for (int i = 0; i < n; ++i)
        if (s & (AgentSet{1} << i)) stage[i] = depth;
      rec(remaining & ~s, depth + 1);
      for (int i = 0; i < n; ++i)
        if (s & (AgentSet{1} << i)) stage[i] = -1;
    }
  };
  rec(full_agent_set(n), 0);
}

std::vector<std::string> parse_group_param(const std::string& value) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : value) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

CommPattern gen_pattern(const std::string& family,
                        std::vector<std::string> agents,
                        const std::map<std::string, std::string>& params) {
  auto sorted = sorted_unique(std::move(agents));
  check_agent_cap(sorted);
  int n = static_cast<int>(sorted.size());
  auto index = [&](const std::string& a) -> int {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), a);
    if (it == sorted.end() || *it != a)
      fail(Errc::unknown_agent, "unknown agent '" + a + "'");
    return static_cast<int>(it - sorted.begin());
  };
  auto param = [&](const std::string& key) -> std::string {
    auto it = params.find(key);
    if (it == params.end())
      fail(Errc::bad_params, family + " requires parameter '" + key + "'");
    return it->second;
  };

  GraphBits id = identity_bits(n);
  std::vector<GraphBits> graphs;

  if (family == "byzantine") {
    int s = index(param("sender"));
    int r = index(param("receiver"));
    if (s == r) fail(Errc::bad_params, "byzantine: sender equals receiver");
    graphs = {id, id | (GraphBits{1} << (s * n + r))};
  } else if (family == "immediate_snapshot") {
    ordered_partitions(n, graphs);
  } else if (family == "full_async") {
    if (n > 5)
      fail(Errc::too_large,
           "full_async over " + std::to_string(n) + " agents has 2^" +
               std::to_string(n * n - n) + " graphs; refusing");
    int free_bits = n * n - n;
    std::vector<int> free_pos;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) free_pos.push_back(i * n + j);
    graphs.reserve(std::size_t{1} << free_bits);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << free_bits); ++m) {
      GraphBits g = id;
      for (int b = 0; b < free_bits; ++b)
        if (m & (std::uint64_t{1} << b)) g |= GraphBits{1} << free_pos[b];
      graphs.push_back(g);
    }
  } else if (family == "silent") {
    graphs = {id};
  } else if (family == "public_announcement") {
    graphs = {universal_bits(n)};
  } else if (family == "group_announcement") {
    auto group = parse_group_param(param("group"));
    if (group.empty()) fail(Errc::bad_params, "group must be nonempty");
    GraphBits g = id;
    for (const auto& a : group) {
      int i = index(a);
      for (int j = 0; j < n; ++j) g |= GraphBits{1} << (i * n + j);
    }
    graphs = {g};
  } else if (family == "gossip") {
    if (n < 2) fail(Errc::bad_params, "gossip needs at least two agents");
    std::string mode = params.count("mode") ? params.at("mode") : "pushpull";
    std::string timing = params.count("timing") ? params.at("timing") : "sync";
    if (timing != "sync" && timing != "async")
      fail(Errc::bad_params, "gossip timing must be sync or async");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        GraphBits g = id;
        if (mode == "pushpull") {
          if (i > j) continue;  // the call ab is symmetric
          g |= GraphBits{1} << (i * n + j);
          g |= GraphBits{1} << (j * n + i);
        } else if (mode == "push") {
          g |= GraphBits{1} << (i * n + j);  // caller informs callee
        } else if (mode == "pull") {
          g |= GraphBits{1} << (j * n + i);  // callee informs caller
        } else {
          fail(Errc::bad_params, "gossip mode must be pushpull, push or pull");
        }
        graphs.push_back(g);
      }
    if (timing == "async") graphs.push_back(id);
  } else {
    fail(Errc::unknown_family, "unknown pattern family '" + family + "'");
  }

  return CommPattern(std::move(sorted), std::move(graphs));
}

}  // namespace cpl
