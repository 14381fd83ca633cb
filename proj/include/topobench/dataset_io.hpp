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

#ifndef TOPOBENCH_DATASET_IO_HPP
#define TOPOBENCH_DATASET_IO_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "topobench/dataset.hpp"
#include "topobench/tensor.hpp"

namespace topobench {

inline constexpr const char* kToolVersion = "0.1.0";

/// One compact JSON object per line:
///   {"edges":[[u,v],...],"id":..,"label":..,"meta":{..},"n":..}
/// plus "node_labels"/"edge_labels" arrays for labeled graphs. Keys are
/// sorted and edges canonical, so equal datasets give equal bytes.
std::string dataset_record(const DatasetItem& item);
DatasetItem parse_dataset_record(const std::string& line);

void write_dataset(std::ostream& out, const Dataset& items);
void write_dataset(const std::filesystem::path& path, const Dataset& items);
/// Throws ValidationError "line N: ..." on malformed lines or duplicate ids.
Dataset read_dataset(std::istream& in);
Dataset read_dataset(const std::filesystem::path& path);

/// Tensor TSV: a header line
///   #topology:<dim>:space=<s>\t...\tlabel:<dim>:deps=<a,b>\tweight
/// then one row per entry (mode indices, then the weight), rows sorted.
/// Weights use the shortest round-trip decimal form.
void export_tensor_tsv(std::ostream& out, const SparseTensor& t);
void export_tensor_tsv(const std::filesystem::path& path, const SparseTensor& t);
SparseTensor import_tensor_tsv(std::istream& in);
SparseTensor import_tensor_tsv(const std::filesystem::path& path);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

/// Run record kept next to the data files. Every command appends an entry
/// to `commands`; the rest summarizes the current state of the run.
struct Manifest {
  std::uint64_t master_seed = 0;
  std::string task;
  nlohmann::json generator_params = nlohmann::json::object();
  std::size_t candidate_count = 0;
  std::array<std::size_t, 2> candidates_per_class{};
  nlohmann::json filter_config = nullptr;
  std::optional<std::array<std::size_t, 2>> train_per_class;
  std::optional<std::array<std::size_t, 2>> test_per_class;
  std::string tool_version = kToolVersion;
  std::vector<std::string> warnings;
  nlohmann::json commands = nlohmann::json::array();

  /// Throws ValidationError when counts disagree.
  void validate() const;
  nlohmann::json to_json() const;
  static Manifest from_json(const nlohmann::json& j);
};

void write_manifest(const std::filesystem::path& path, const Manifest& manifest);
Manifest read_manifest(const std::filesystem::path& path);

/// Pretty-printed (indent 2), sorted keys, trailing newline.
void write_json_file(const std::filesystem::path& path, const nlohmann::json& doc);
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace topobench

#endif  // TOPOBENCH_DATASET_IO_HPP
