// Copyright 2026 The topobench Authors
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

#ifndef TOPOBENCH_DATASET_HPP
#define TOPOBENCH_DATASET_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "topobench/graph.hpp"

namespace topobench {

enum class Task { kTriangles, kCliqueDistance };

std::string_view task_name(Task task);
/// Accepts "triangles" and "clique-distance"; throws ConfigError otherwise.
Task parse_task(std::string_view name);

/// One benchmark graph with its binary label. `meta` carries provenance:
/// the derived seed, generator family and the raw generator parameters.
struct DatasetItem {
  std::uint64_t id = 0;
  Graph graph;
  int label = 0;
  nlohmann::json meta = nlohmann::json::object();

  friend bool operator==(const DatasetItem&, const DatasetItem&) = default;
};

using Dataset = std::vector<DatasetItem>;

/// Number of items per label (index 0 and 1).
std::array<std::size_t, 2> class_counts(const Dataset& items);

}  // namespace topobench

#endif  // TOPOBENCH_DATASET_HPP
