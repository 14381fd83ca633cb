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


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "reference.hpp"
#include "topobench/dataset_io.hpp"
#include "topobench/embedding.hpp"
#include "topobench/errors.hpp"
#include "topobench/pipeline.hpp"

namespace {

namespace fs = std::filesystem;
using namespace topobench;

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class PipelineDir : public ::testing::Test {
 protected:
  void SetUp() override {
    root_ = fs::temp_directory_path() /
            ("topobench_pipeline_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(root_);
    fs::create_directories(root_);
  }
  void TearDown() override { fs::remove_all(root_); }

  RunConfig config(const std::string& sub, Task task = Task::kTriangles) const {
    RunConfig cfg;
    cfg.task = task;
    cfg.seed = 7;
    cfg.candidates = 200;
    cfg.filter.train_size = 60;
    cfg.filter.test_size = 20;
    cfg.out_dir = root_ / sub;
    return cfg;
  }

  fs::path root_;
};

TEST_F(PipelineDir, GenerateTrianglesBalancedAndValid) {
  const Manifest m = cmd_generate(config("a"));
  EXPECT_EQ(m.candidate_count, 200u);
  EXPECT_EQ(m.candidates_per_class, (std::array<std::size_t, 2>{100, 100}));
  const Dataset items = read_dataset(root_ / "a" / kCandidatesFile);
  ASSERT_EQ(items.size(), 200u);
  for (std::size_t i = 0; i < items.size(); ++i) {
    EXPECT_EQ(items[i].id, i);
    EXPECT_EQ(items[i].label, static_cast<int>(i % 2));
    EXPECT_EQ(items[i].meta.at("seed").get<std::uint64_t>(), derive_seed(7, {i}));
  }
  const VerifyReport report = cmd_verify(root_ / "a" / kCandidatesFile, std::nullopt, 4, 4);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.histogram.at("0") + report.histogram.at("1"), 200u);
}

TEST_F(PipelineDir, SameSeedGivesByteIdenticalFiles) {
  for (const char* sub : {"a", "b"}) {
    RunConfig cfg = config(sub);
    cfg.threads = sub[0] == 'a' ? 1 : 3;
    cmd_generate(cfg);
    cmd_filter(cfg);
  }
  for (const char* file : {kCandidatesFile, kTrainFile, kTestFile, kManifestFile}) {
    EXPECT_EQ(read_file(root_ / "a" / file), read_file(root_ / "b" / file)) << file;
  }
  RunConfig other = config("c");
  other.seed = 8;
  cmd_generate(other);
  EXPECT_NE(read_file(root_ / "a" / kCandidatesFile), read_file(root_ / "c" / kCandidatesFile));
}

TEST_F(PipelineDir, CliqueItemsCarryTwoCliquesAndMatchingLabels) {
  RunConfig cfg = config("q", Task::kCliqueDistance);
  cmd_generate(cfg);
  const VerifyReport report = cmd_verify(root_ / "q" / kCandidatesFile, std::nullopt, 4, 4);
  EXPECT_TRUE(report.ok()) << report.to_json().dump();
  EXPECT_EQ(report.two_clique_items, 200u);
  std::size_t total = 0;
  for (const auto& [key, count] : report.histogram) total += count;
  EXPECT_EQ(total, 200u);
}

TEST_F(PipelineDir, VerifyNamesCorruptedItem) {
  cmd_generate(config("v"));
  Dataset items = read_dataset(root_ / "v" / kCandidatesFile);
  items[17].label = 1 - items[17].label;
  write_dataset(root_ / "v" / "bad.jsonl", items);
  const VerifyReport report = cmd_verify(root_ / "v" / "bad.jsonl", Task::kTriangles, 4, 4);
  EXPECT_FALSE(report.ok());
  EXPECT_EQ(report.failed_ids, (std::vector<std::uint64_t>{17}));
  ASSERT_EQ(report.failure_reasons.size(), 1u);
  EXPECT_NE(report.failure_reasons[0].find("id 17"), std::string::npos);
}

TEST_F(PipelineDir, VerifyWithoutTaskNeedsMeta) {
  DatasetItem item;
  item.graph = ref::complete(3);
  item.label = 1;
  write_dataset(root_ / "plain.jsonl", {item});
  EXPECT_THROW(cmd_verify(root_ / "plain.jsonl", std::nullopt, 4, 4), ConfigError);
  EXPECT_TRUE(cmd_verify(root_ / "plain.jsonl", Task::kTriangles, 4, 4).ok());
}

TEST_F(PipelineDir, FilterWritesSplitsAndLogsAccuracies) {
  RunConfig cfg = config("f");
  cfg.candidates = 2000;
  cfg.filter.train_size = 200;
  cfg.filter.test_size = 40;
  cmd_generate(cfg);
  const FilterOutcome out = cmd_filter(cfg);
  const Dataset train = read_dataset(root_ / "f" / kTrainFile);
  const Dataset test = read_dataset(root_ / "f" / kTestFile);
  EXPECT_EQ(train.size(), 200u);
  EXPECT_EQ(test.size(), 40u);
  EXPECT_EQ(class_counts(train), (std::array<std::size_t, 2>{100, 100}));
  EXPECT_EQ(class_counts(test), (std::array<std::size_t, 2>{20, 20}));
  const Manifest m = read_manifest(root_ / "f" / kManifestFile);
  ASSERT_EQ(m.commands.size(), 2u);
  const auto& entry = m.commands[1];
  EXPECT_EQ(entry.at("command"), "filter");
  EXPECT_DOUBLE_EQ(entry.at("pre_filter_cv_accuracy").get<double>(), out.pre_accuracy);
  EXPECT_DOUBLE_EQ(entry.at("post_filter_cv_accuracy").get<double>(), out.post_accuracy);
  EXPECT_GT(out.pre_accuracy, 0.0);
  EXPECT_GT(out.post_accuracy, 0.0);
  EXPECT_TRUE(m.train_per_class.has_value());
  EXPECT_FALSE(m.filter_config.is_null());
}

TEST_F(PipelineDir, FilterTargetsBeyondPool) {
  RunConfig cfg = config("i");
  cfg.candidates = 40;
  cfg.filter.train_size = 40;
  cfg.filter.test_size = 10;
  cmd_generate(cfg);
  EXPECT_THROW(cmd_filter(cfg), ConfigError);
}

TEST_F(PipelineDir, GenerateRejectsOddCount) {
  RunConfig cfg = config("o");
  cfg.candidates = 201;
  EXPECT_THROW(cmd_generate(cfg), ConfigError);
}

TEST_F(PipelineDir, BaselineExactGraphletsSolveTriangles) {
  RunConfig cfg = config("g");
  cfg.candidates = 600;
  cfg.filter.train_size = 200;
  cfg.filter.test_size = 60;
  cmd_generate(cfg);
  cmd_filter(cfg);
  cfg.baseline = "graphlet-exact";
  const BaselineReport report = cmd_baseline(cfg, root_ / "g" / kTrainFile, root_ / "g" / kTestFile);
  EXPECT_DOUBLE_EQ(report.test.accuracy, 1.0);
  EXPECT_TRUE(fs::exists(root_ / "g" / "baseline_graphlet-exact.json"));
  const Manifest m = read_manifest(root_ / "g" / kManifestFile);
  EXPECT_EQ(m.commands.back().at("command"), "baseline");
  cfg.baseline = "svm";
  EXPECT_THROW(cmd_baseline(cfg, root_ / "g" / kTrainFile, root_ / "g" / kTestFile), ConfigError);
}

TEST_F(PipelineDir, TensorDemoShapesAndDeterminism) {
  cmd_generate(config("t"));
  TensorDemoConfig demo;
  demo.dataset = root_ / "t" / kCandidatesFile;
  demo.limit = 5;
  demo.width = 3;
  for (const char* sub : {"d1", "d2"}) {
    demo.out_dir = root_ / sub;
    EXPECT_EQ(cmd_tensor_demo(demo), 5u);
  }
  EXPECT_EQ(read_file(root_ / "d1" / "embeddings.jsonl"), read_file(root_ / "d2" / "embeddings.jsonl"));
  const Dataset items = read_dataset(demo.dataset);
  std::ifstream in(root_ / "d1" / "embeddings.jsonl");
  std::string line;
  std::size_t i = 0;
  while (std::getline(in, line)) {
    const auto rec = nlohmann::json::parse(line);
    const DatasetItem& item = items[i];
    EXPECT_EQ(rec.at("id").get<std::uint64_t>(), item.id);
    const auto& emb = rec.at("embeddings");
    ASSERT_FALSE(emb.empty());
    for (const auto& row : emb) EXPECT_EQ(row.size(), 6u);
    const auto perm = rec.at("perm").get<std::vector<NodeId>>();
    const Graph shuffled = permute_nodes(item.graph, perm);
    const auto mask = rec.at("mask").get<std::vector<std::string>>();
    ASSERT_EQ(mask.size(), item.graph.num_nodes());
    for (NodeId a = 0; a < mask.size(); ++a)
      for (NodeId b = 0; b < mask.size(); ++b)
        EXPECT_EQ(mask[a][b] == '1', shuffled.has_edge(a, b));
    const SparseTensor tsv = import_tensor_tsv(root_ / "d1" / ("item_" + std::to_string(item.id) + ".tsv"));
    EXPECT_EQ(tsv, graph_to_tensor(shuffled));
    ++i;
  }
  EXPECT_EQ(i, 5u);
}

}  // namespace
