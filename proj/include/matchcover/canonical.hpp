/*
 * Copyright (C) 2026 The matchcover Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "matchcover/multigraph.hpp"

namespace matchcover {

inline constexpr std::size_t kDefaultCanonicalLimit = 24;

/// Relabelling-invariant fingerprint of the underlying simple graph: the
/// lexicographically least upper-triangle adjacency string over all vertex
/// orders reachable by equitable refinement + individualisation.
struct CanonicalForm {
  std::uint32_t order = 0;
  std::vector<std::uint64_t> adjacency;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

  std::string to_string() const;
};

/// Throws CapabilityError when the graph has more than `limit` vertices
/// (hard ceiling 64).
CanonicalForm canonical_form(const MultiGraph& g, std::size_t limit = kDefaultCanonicalLimit);

bool isomorphic_up_to_multiplicity(const MultiGraph& a, const MultiGraph& b);

}  // namespace matchcover
