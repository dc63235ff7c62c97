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
#include <span>
#include <vector>

#include "matchcover/multigraph.hpp"

// Data-parallel kernels. Each OpenMP kernel has a serial reference that
// answers the same question by the plainest route; tests hold them equal and
// bench/ compares their speed.

namespace matchcover {

/// Row e, column f (edge indices): e → f.
class DependenceMatrix {
 public:
  explicit DependenceMatrix(std::size_t m = 0) : m_(m), bits_(m * m, 0) {}

  std::size_t size() const noexcept { return m_; }
  bool at(std::size_t e, std::size_t f) const noexcept { return bits_[e * m_ + f] != 0; }
  void set(std::size_t e, std::size_t f) noexcept { bits_[e * m_ + f] = 1; }

  friend bool operator==(const DependenceMatrix&, const DependenceMatrix&) = default;

 private:
  std::size_t m_;
  std::vector<char> bits_;
};

/// Every ordered pair: e → f ⇔ e = f or e is inadmissible in G - f.
DependenceMatrix dependence_matrix_serial(const MultiGraph& g);
/// Rows in parallel; only edges of one perfect matching through e can be
/// depended on, so each row checks n/2 candidates instead of m.
DependenceMatrix dependence_matrix_parallel(const MultiGraph& g);

/// Candidates (odd shores) that are tight cuts of g, in input order.
std::vector<Cut> tight_cut_filter_serial(const MultiGraph& g, std::span<const Cut> candidates);
std::vector<Cut> tight_cut_filter_parallel(const MultiGraph& g, std::span<const Cut> candidates);

}  // namespace matchcover
