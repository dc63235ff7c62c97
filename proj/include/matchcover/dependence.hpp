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

#include <cstddef>
#include <vector>

#include "matchcover/multigraph.hpp"

namespace matchcover {

/// e → f: every perfect matching through e also uses f. Reflexive. Assumes
/// g is matching covered; throws DomainError for unknown edges.
bool depends_on(const MultiGraph& g, EdgeId e, EdgeId f);
/// e ↔ f.
bool mutually_dependent(const MultiGraph& g, EdgeId e, EdgeId f);

/// ℰ_G: the mutual-dependence classes of E(G).
class EquivalencePartition {
 public:
  EquivalencePartition() = default;
  /// Sorts classes by lowest edge id.
  explicit EquivalencePartition(std::vector<EdgeSet> classes);

  const std::vector<EdgeSet>& classes() const noexcept { return classes_; }
  /// ε: size of the largest class (0 for an empty edge set).
  std::size_t epsilon() const noexcept;
  std::size_t class_index(EdgeId e) const;
  const EdgeSet& class_of(EdgeId e) const { return classes_[class_index(e)]; }
  bool is_class(const EdgeSet& edges) const;

  friend bool operator==(const EquivalencePartition&, const EquivalencePartition&) = default;

 private:
  std::vector<EdgeSet> classes_;
};

enum class Execution { Serial, Parallel };

/// Throws DomainError unless g is matching covered.
EquivalencePartition equivalence_partition(const MultiGraph& g, Execution exec = Execution::Parallel);
std::size_t epsilon(const MultiGraph& g);
/// The class containing e, from 2m dependence queries.
EdgeSet equivalence_class_of(const MultiGraph& g, EdgeId e);

/// G - e matching covered. DomainError on K2 (the only case where the
/// notion is degenerate) and on unknown edges.
bool is_removable_edge(const MultiGraph& g, EdgeId e);
EdgeSet removable_edges(const MultiGraph& g);
/// Classes R of ℰ_G with G - R matching covered.
std::vector<EdgeSet> removable_classes(const MultiGraph& g);

}  // namespace matchcover
