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

#include "topobench/dataset_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "topobench/errors.hpp"

namespace topobench {

std::string_view task_name(Task task) {
  return task == Task::kTriangles ? "triangles" : "clique-distance";
}

Task parse_task(std::string_view name) {
  if (name == "triangles") return Task::kTriangles;
  if (name == "clique-distance") return Task::kCliqueDistance;
  throw ConfigError("unknown task '" + std::string(name) +
                    "' (expected triangles or clique-distance)");
}

std::array<std::size_t, 2> class_counts(const Dataset& items) {
  std::array<std::size_t, 2> counts{};
  for (const DatasetItem& item : items) {
    if (item.label == 0 || item.label == 1) ++counts[static_cast<std::size_t>(item.label)];
  }
  return counts;
}

std::string dataset_record(const DatasetItem& item) {
  nlohmann::json j;
  j["id"] = item.id;
  j["n"] = item.graph.num_nodes();
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : item.graph.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  j["label"] = item.label;
  j["meta"] = item.meta;
  if (item.graph.node_labels()) j["node_labels"] = *item.graph.node_labels();
  if (item.graph.edge_labels()) j["edge_labels"] = *item.graph.edge_labels();
  return j.dump();
}

DatasetItem parse_dataset_record(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("record is not an object");
  for (const char* key : {"id", "n", "edges", "label"}) {
    if (!j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
  }
  try {
    DatasetItem item;
    item.id = j.at("id").get<std::uint64_t>();
    const auto n = j.at("n").get<std::size_t>();
    item.label = j.at("label").get<int>();
    if (item.label != 0 && item.label != 1) throw ValidationError("label must be 0 or 1");
    if (j.contains("meta")) item.meta = j.at("meta");
    std::optional<std::vector<LabelId>> node_labels;
    if (j.contains("node_labels")) node_labels = j.at("node_labels").get<std::vector<LabelId>>();
    const auto& edges = j.at("edges");
    if (!edges.is_array()) throw ValidationError("'edges' must be an array");
    if (j.contains("edge_labels")) {
      const auto labels = j.at("edge_labels").get<std::vector<LabelId>>();
      if (labels.size() != edges.size()) throw ValidationError("one edge label per edge");
      std::vector<LabeledEdge> labeled;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        labeled.push_back({edges[i].at(0).get<NodeId>(), edges[i].at(1).get<NodeId>(), labels[i]});
      }
      item.graph = build_labeled_graph(n, labeled, std::move(node_labels));
    } else {
      std::vector<std::pair<NodeId, NodeId>> pairs;
      for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2) throw ValidationError("edges must be [u, v] pairs");
        pairs.emplace_back(e[0].get<NodeId>(), e[1].get<NodeId>());
      }
      item.graph = build_graph(n, pairs);
      if (node_labels) item.graph = with_node_labels(item.graph, std::move(*node_labels));
    }
    return item;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad field: ") + e.what());
  }
}

void write_dataset(std::ostream& out, const Dataset& items) {
  for (const DatasetItem& item : items) out << dataset_record(item) << '\n';
}

void write_dataset(const std::filesystem::path& path, const Dataset& items) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  write_dataset(out, items);
  if (!out) throw ValidationError("write failed for " + path.string());
}

Dataset read_dataset(std::istream& in) {
  Dataset items;
  std::set<std::uint64_t> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    DatasetItem item;
    try {
      item = parse_dataset_record(line);
    } catch (const ValidationError& e) {
      throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!ids.insert(item.id).second) {
      throw ValidationError("line " + std::to_string(line_no) + ": duplicate id " +
                            std::to_string(item.id));
    }
    items.push_back(std::move(item));
  }
  return items;
}

Dataset read_dataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path.string());
  return read_dataset(in);
}

std::string format_double(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw ValidationError("cannot format number");
  return std::string(buf, end);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream stream(s);
  while (std::getline(stream, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

template <typename T>
T parse_number(const std::string& text, const std::string& what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ValidationError("bad " + what + " '" + text + "'");
  }
  return value;
}

std::string mode_descriptor(const ModeInfo& m) {
  if (m.kind == ModeKind::kTopology) {
    return "topology:" + std::to_string(m.dim) + ":space=" + std::to_string(m.space);
  }
  std::string deps;
  for (std::size_t i = 0; i < m.depends_on.size(); ++i) {
    deps += (i ? "," : "") + std::to_string(m.depends_on[i]);
  }
  return "label:" + std::to_string(m.dim) + ":deps=" + deps;
}

ModeInfo parse_descriptor(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ValidationError("bad mode descriptor '" + text + "'");
  ModeInfo m;
  m.dim = parse_number<std::size_t>(parts[1], "mode dimension");
  if (parts[0] == "topology" && parts[2].starts_with("space=")) {
    m.kind = ModeKind::kTopology;
    m.space = parse_number<int>(parts[2].substr(6), "space id");
  } else if (parts[0] == "label" && parts[2].starts_with("deps=")) {
    m.kind = ModeKind::kLabel;
    const std::string deps = parts[2].substr(5);
    if (!deps.empty()) {
      for (const auto& d : split(deps, ',')) {
        m.depends_on.push_back(parse_number<std::size_t>(d, "dependency"));
      }
    }
  } else {
    throw ValidationError("bad mode descriptor '" + text + "'");
  }
  return m;
}

}  // namespace

void export_tensor_tsv(std::ostream& out, const SparseTensor& t) {
  out << '#';
  for (std::size_t m = 0; m < t.order(); ++m) out << mode_descriptor(t.mode(m)) << '\t';
  out << "weight\n";
  for (std::size_t r = 0; r < t.nnz(); ++r) {
    for (std::size_t idx : t.row(r)) out << idx << '\t';
    out << format_double(t.weights()[r]) << '\n';
  }
}

void export_tensor_tsv(const std::filesystem::path& path, const SparseTensor& t) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  export_tensor_tsv(out, t);
}

SparseTensor import_tensor_tsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.empty() || line[0] != '#') {
    throw ValidationError("tensor TSV must start with a '#' header line");
  }
  const auto header = split(line.substr(1), '\t');
  if (header.size() < 2 || header.back() != "weight") {
    throw ValidationError("tensor TSV header must end with 'weight'");
  }
  std::vector<ModeInfo> modes;
  for (std::size_t i = 0; i + 1 < header.size(); ++i) modes.push_back(parse_descriptor(header[i]));
  std::vector<std::size_t> indices;
  std::vector<double> weights;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto cells = split(line, '\t');
    if (cells.size() != modes.size() + 1) {
      throw ValidationError("line " + std::to_string(line_no) + ": expected " +
                            std::to_string(modes.size() + 1) + " columns");
    }
    for (std::size_t m = 0; m < modes.size(); ++m) {
      indices.push_back(parse_number<std::size_t>(cells[m], "index"));
    }
    weights.push_back(parse_number<double>(cells.back(), "weight"));
  }
  return SparseTensor(std::move(modes), std::move(indices), std::move(weights));
}

SparseTensor import_tensor_tsv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path.string());
  return import_tensor_tsv(in);
}

void Manifest::validate() const {
  if (candidates_per_class[0] + candidates_per_class[1] != candidate_count) {
    throw ValidationError("manifest: per-class candidate counts do not sum to the candidate count");
  }
  std::size_t selected = 0;
  if (train_per_class) selected += (*train_per_class)[0] + (*train_per_class)[1];
  if (test_per_class) selected += (*test_per_class)[0] + (*test_per_class)[1];
  if (selected > candidate_count) {
    throw ValidationError("manifest: train + test exceed the candidate count");
  }
}

nlohmann::json Manifest::to_json() const {
  nlohmann::json j;
  j["master_seed"] = master_seed;
  j["task"] = task;
  j["generator_params"] = generator_params;
  j["candidate_count"] = candidate_count;
  j["candidates_per_class"] = candidates_per_class;
  j["filter_config"] = filter_config;
  j["train_per_class"] = train_per_class ? nlohmann::json(*train_per_class) : nlohmann::json(nullptr);
  j["test_per_class"] = test_per_class ? nlohmann::json(*test_per_class) : nlohmann::json(nullptr);
  j["tool_version"] = tool_version;
  j["warnings"] = warnings;
  j["commands"] = commands;
  return j;
}

Manifest Manifest::from_json(const nlohmann::json& j) {
  try {
    Manifest m;
    m.master_seed = j.at("master_seed").get<std::uint64_t>();
    m.task = j.at("task").get<std::string>();
    m.generator_params = j.at("generator_params");
    m.candidate_count = j.at("candidate_count").get<std::size_t>();
    m.candidates_per_class = j.at("candidates_per_class").get<std::array<std::size_t, 2>>();
    m.filter_config = j.value("filter_config", nlohmann::json(nullptr));
    if (j.contains("train_per_class") && !j["train_per_class"].is_null()) {
      m.train_per_class = j["train_per_class"].get<std::array<std::size_t, 2>>();
    }
    if (j.contains("test_per_class") && !j["test_per_class"].is_null()) {
      m.test_per_class = j["test_per_class"].get<std::array<std::size_t, 2>>();
    }
    m.tool_version = j.value("tool_version", std::string(kToolVersion));
    m.warnings = j.value("warnings", std::vector<std::string>{});
    m.commands = j.value("commands", nlohmann::json::array());
    m.validate();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("manifest: ") + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const nlohmann::json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void write_manifest(const std::filesystem::path& path, const Manifest& manifest) {
  manifest.validate();
  write_json_file(path, manifest.to_json());
}

Manifest read_manifest(const std::filesystem::path& path) {
  return Manifest::from_json(read_json_file(path));
}

}  // namespace topobench
