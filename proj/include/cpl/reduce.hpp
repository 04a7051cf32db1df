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

#ifndef CPL_REDUCE_HPP
#define CPL_REDUCE_HPP

#include "cpl/formula.hpp"

namespace cpl {

/// Rewrites away every pattern box, innermost first: boxes commute with
/// negation and conjunction, vanish on atoms, and distribute over D_B as
/// the conjunction, in canonical graph order, of D_{R B}-boxes over the
/// graphs informing B like R. A one-conjunct conjunction collapses. The
/// result is equivalent and box-free.
FormulaPtr reduce_formula(const FormulaPtr& f);

}  // namespace cpl

#endif
