// Copyright 2026 The k3lat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>

#include "k3lat/sym_matrix.hpp"

namespace k3lat {

/// Finds some x >= 0 with A x <= b by an exact phase-one simplex (Bland's
/// rule, so it terminates). A is row-major with b.size() rows. Returns
/// nullopt iff the system is infeasible.
std::optional<RationalVector> find_feasible_point(const RationalMatrix& a,
                                                  const RationalVector& b);

}  // namespace k3lat
