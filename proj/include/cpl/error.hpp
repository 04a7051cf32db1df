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

#ifndef CPL_ERROR_HPP
#define CPL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cpl {

enum class Errc {
  partition_error,
  locality_error,
  unknown_id,
  unknown_agent,
  unknown_world,
  unknown_atom,
  unknown_facet,
  unknown_face,
  unknown_pattern,
  unknown_family,
  empty_group,
  not_reflexive,
  agent_set_mismatch,
  signature_mismatch,
  not_chromatic,
  not_pure,
  orphan_vertex,
  non_maximal_facet,
  valuation_owner_error,
  graph_not_in_pattern,
  syntax_error,
  bad_params,
  bounds_error,
  too_large,
  points_bisimilar,
};

const char* errc_name(Errc e);

/// Library-wide exception. `kind()` drives the CLI exit code and the
/// machine-readable error output.
class Error : public std::runtime_error {
 public:
  Error(Errc kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Errc kind() const { return kind_; }

 private:
  Errc kind_;
};

[[noreturn]] inline void fail(Errc kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace cpl

#endif
