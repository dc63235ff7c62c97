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

#include <array>
#include <cstddef>
#include <string_view>

// Values computed once by the brute-force oracles in oracle.cpp and frozen.
namespace frozen {

struct Row {
  std::string_view name;
  std::size_t n, m, perfect_matchings, epsilon, classes, kappa, even_two_cuts, barrier_parts, tight_cuts;
};

inline constexpr std::array<Row, 19> kCorpus{{
    {"K2", 2, 1, 1, 1, 1, 1, 0, 2, 0},
    {"K4", 4, 6, 3, 2, 3, 3, 0, 4, 0},
    {"C4", 4, 4, 2, 2, 2, 2, 2, 2, 0},
    {"C6", 6, 6, 2, 3, 2, 2, 6, 2, 3},
    {"C8", 8, 8, 2, 4, 2, 2, 12, 2, 8},
    {"C10", 10, 10, 2, 5, 2, 2, 20, 2, 15},
    {"C12", 12, 12, 2, 6, 2, 2, 30, 2, 24},
    {"K3,3", 6, 9, 6, 1, 9, 3, 0, 2, 0},
    {"K4,4", 8, 16, 24, 1, 16, 4, 0, 2, 0},
    {"C6bar", 6, 9, 4, 2, 6, 3, 0, 6, 0},
    {"prism4", 8, 12, 9, 1, 12, 3, 0, 2, 0},
    {"prism5", 10, 15, 11, 2, 10, 3, 0, 10, 0},
    {"prism6", 12, 18, 20, 1, 18, 3, 0, 2, 0},
    {"W5", 6, 10, 5, 1, 10, 3, 0, 6, 0},
    {"W7", 8, 14, 7, 1, 14, 3, 0, 8, 0},
    {"petersen", 10, 15, 6, 1, 15, 3, 0, 10, 0},
    {"fig2b", 8, 12, 5, 2, 10, 3, 0, 8, 0},
    {"fig2c", 8, 12, 6, 2, 9, 3, 0, 6, 1},
    {"K6", 6, 15, 15, 1, 15, 5, 0, 6, 0},
}};

}  // namespace frozen
