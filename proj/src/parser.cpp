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

#include "cpl/parser.hpp"

#include <cctype>

namespace cpl {

namespace {

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Parser {
 public:
  Parser(const std::string& text, const Signature& sig, const PatternEnv& env)
      : text_(text), sig_(sig), env_(env) {}

  FormulaPtr run() {
    FormulaPtr f = parse_iff();
    skip_ws();
    if (pos_ != text_.size()) err("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void err(const std::string& what) {
    fail(Errc::syntax_error,
         what + " at offset " + std::to_string(pos_) + " in formula");
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!eat(c)) err(std::string("expected '") + c + "'");
  }

  bool eat_str(const char* s) {
    skip_ws();
    size_t n = std::char_traits<char>::length(s);
    if (text_.compare(pos_, n, s) != 0) return false;
    pos_ += n;
    return true;
  }

  std::string name() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
    if (pos_ == start) err("expected a name");
    return text_.substr(start, pos_ - start);
  }

  std::vector<std::string> name_list() {
    std::vector<std::string> out{name()};
    while (eat(',')) out.push_back(name());
    return out;
  }

  FormulaPtr parse_iff() {
    FormulaPtr f = parse_implies();
    while (eat_str("<->")) f = f_iff(f, parse_implies());
    return f;
  }

  FormulaPtr parse_implies() {
    FormulaPtr f = parse_or();
    skip_ws();
    // `->` but not `<->`, which eat_str already consumed above.
    if (text_.compare(pos_, 2, "->") == 0) {
      pos_ += 2;
      return f_implies(f, parse_implies());  // right-associative
    }
    return f;
  }

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (peek('|')) {
      ++pos_;
      f = f_or(f, parse_and());
    }
    return f;
  }

  FormulaPtr parse_and() {
    FormulaPtr f = parse_unary();
    while (peek('&')) {
      ++pos_;
      f = f_and(f, parse_unary());
    }
    return f;
  }

  FormulaPtr parse_unary() {
    skip_ws();
    if (pos_ >= text_.size()) err("unexpected end of formula");
    if (eat('~')) return f_neg(parse_unary());
    if (eat('(')) {
      FormulaPtr f = parse_iff();
      expect(')');
      return f;
    }
    if (eat('[')) return parse_box();
    // D{...} / K{...} only act as operators when the brace follows.
    if (text_[pos_] == 'D' && pos_ + 1 < text_.size() &&
        text_[pos_ + 1] == '{') {
      pos_ += 2;
      auto group = name_list();
      expect('}');
      for (const auto& a : group) sig_.agent_index(a);
      return f_dk(std::move(group), parse_unary());
    }
    if (text_[pos_] == 'K' && pos_ + 1 < text_.size() &&
        text_[pos_ + 1] == '{') {
      pos_ += 2;
      std::string agent = name();
      expect('}');
      sig_.agent_index(agent);
      return f_know(agent, parse_unary());
    }
    std::string token = name();
    sig_.atom_index(token);  // unknown_atom on undeclared atoms
    return f_atom(std::move(token));
  }

  // "[pattern;graph] phi" with both sides a bound name or a literal.
  FormulaPtr parse_box() {
    std::string pattern_name;
    std::shared_ptr<const CommPattern> pattern;
    skip_ws();
    if (peek('{')) {
      pattern = std::make_shared<CommPattern>(parse_pattern_literal());
    } else {
      pattern_name = name();
      auto it = env_.patterns.find(pattern_name);
      if (it == env_.patterns.end())
        fail(Errc::unknown_pattern, "unbound pattern '" + pattern_name + "'");
      pattern = it->second;
    }
    expect(';');
    auto [graph, graph_name] = parse_graph_ref(*pattern);
    expect(']');
    int gi = pattern->index_of(graph);
    if (gi < 0)
      fail(Errc::graph_not_in_pattern,
           "graph " + (graph_name.empty() ? graph.str() : graph_name) +
               " is not in pattern " +
               (pattern_name.empty() ? pattern->str() : pattern_name));
    return f_box(std::move(pattern), gi, parse_unary(),
                 std::move(pattern_name), std::move(graph_name));
  }

  CommPattern parse_pattern_literal() {
    expect('{');
    std::vector<CommGraph> graphs;
    do {
      graphs.push_back(parse_graph_literal(sig_.agents()));
    } while (eat(','));
    expect('}');
    return CommPattern::of_graphs(graphs);
  }

  // "{(a,b),(b,b)}"; closed reflexively so identity pairs can be left
  // out.
  CommGraph parse_graph_literal(const std::vector<std::string>& agents) {
    expect('{');
    std::vector<std::pair<std::string, std::string>> pairs;
    if (!peek('}')) {
      do {
        expect('(');
        std::string from = name();
        expect(',');
        std::string to = name();
        expect(')');
        pairs.emplace_back(std::move(from), std::move(to));
      } while (eat(','));
    }
    expect('}');
    return CommGraph(agents, pairs, /*auto_reflexive=*/true);
  }

  std::pair<CommGraph, std::string> parse_graph_ref(const CommPattern& pat) {
    skip_ws();
    if (peek('{')) return {parse_graph_literal(pat.agents()), ""};
    std::string gname = name();
    if (gname == "I") return {CommGraph::identity(pat.agents()), gname};
    if (gname == "U") return {CommGraph::universal(pat.agents()), gname};
    auto it = env_.graphs.find(gname);
    if (it == env_.graphs.end())
      fail(Errc::unknown_pattern, "unbound graph '" + gname + "'");
    return {it->second, gname};
  }

  const std::string& text_;
  const Signature& sig_;
  const PatternEnv& env_;
  size_t pos_ = 0;
};

}  // namespace

FormulaPtr parse_formula(const std::string& text, const Signature& sig,
                         const PatternEnv& env) {
  return Parser(text, sig, env).run();
}

}  // namespace cpl
