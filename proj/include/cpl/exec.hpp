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

#ifndef CPL_EXEC_HPP
#define CPL_EXEC_HPP

namespace cpl {

/// Chooses between the serial reference implementation of a kernel and
/// its OpenMP lane. Both produce identical output; the serial path is
/// kept as the reference the parallel one is tested against.
enum class ExecMode { serial, parallel };

/// Worker count the parallel lane would use (1 without OpenMP).
int max_threads();

}  // namespace cpl

#endif
