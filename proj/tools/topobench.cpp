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

// Command-line front end: generate, filter, verify, baseline, tensor-demo.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "topobench/errors.hpp"
#include "topobench/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitInfeasible = 3;

topobench::WLInit parse_wl_init(const std::string& name) {
  if (name == "uniform") return topobench::WLInit::kUniform;
  if (name == "degree") return topobench::WLInit::kDegree;
  if (name == "labels") return topobench::WLInit::kNodeLabels;
  throw topobench::ConfigError("unknown WL init '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace topobench;

  CLI::App app{"Topology-only graph benchmark generation and baselines"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML file with option values; command-line flags win");

  RunConfig cfg;
  std::string task = "triangles";
  std::string wl_init = "uniform";
  std::string clique_attach = "bridge";
  std::string out_dir = "run";
  app.add_option("--task", task, "triangles | clique-distance")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
  app.add_option("--candidates", cfg.candidates, "Candidate pool size")->capture_default_str();
  app.add_option("--train-size", cfg.filter.train_size)->capture_default_str();
  app.add_option("--test-size", cfg.filter.test_size)->capture_default_str();
  app.add_option("--folds", cfg.filter.folds, "Cross-validation folds")->capture_default_str();
  app.add_option("--train-folds", cfg.filter.train_folds, "Folds trained on per round")
      ->capture_default_str();
  app.add_option("--threshold", cfg.threshold, "Clique distance threshold")->capture_default_str();
  app.add_option("--clique-size", cfg.clique_size)->capture_default_str();
  app.add_option("--clique-attach", clique_attach, "bridge | shared")->capture_default_str();
  app.add_option("--tri-min-nodes", cfg.triangles.node_count.lo)->capture_default_str();
  app.add_option("--tri-max-nodes", cfg.triangles.node_count.hi)->capture_default_str();
  app.add_option("--er-mean-degree", cfg.triangles.er_mean_degree, "Sets p = degree / (n - 1)")
      ->capture_default_str();
  app.add_option("--knn-min-k", cfg.triangles.knn_k.lo)->capture_default_str();
  app.add_option("--knn-max-k", cfg.triangles.knn_k.hi)->capture_default_str();
  app.add_option("--family-mix", cfg.triangles.family_mix, "Probability of an ER graph")
      ->capture_default_str();
  app.add_option("--baseline", cfg.baseline, "undermanned | wl | graphlet-exact | graphlet-sampled")
      ->capture_default_str();
  app.add_option("--wl-iterations", cfg.wl.iterations)->capture_default_str();
  app.add_option("--wl-init", wl_init, "uniform | degree | labels")->capture_default_str();
  app.add_option("--graphlet-size", cfg.graphlets.size)->capture_default_str();
  app.add_option("--graphlet-samples", cfg.graphlets.samples)->capture_default_str();
  app.add_option("--epochs", cfg.hyper.epochs)->capture_default_str();
  app.add_option("--learning-rate", cfg.hyper.learning_rate)->capture_default_str();
  app.add_option("--l2", cfg.hyper.l2)->capture_default_str();
  app.add_option("--threads", cfg.threads)->capture_default_str();
  app.add_option("--out", out_dir, "Run directory")->capture_default_str();

  auto* generate = app.add_subcommand("generate", "Generate a balanced candidate pool");
  auto* filter = app.add_subcommand("filter", "Select hard train/test splits from the pool");
  auto* verify = app.add_subcommand("verify", "Recompute labels with exact oracles");
  auto* baseline = app.add_subcommand("baseline", "Train and score one kernel baseline");
  auto* demo = app.add_subcommand("tensor-demo", "Tensor export and initial node embeddings");

  std::string verify_path;
  verify->add_option("dataset", verify_path, "JSONL dataset")->required();

  std::string train_path;
  std::string test_path;
  baseline->add_option("--train", train_path, "Defaults to <out>/train.jsonl");
  baseline->add_option("--test", test_path, "Defaults to <out>/test.jsonl");

  TensorDemoConfig demo_cfg;
  std::string demo_path;
  demo->add_option("dataset", demo_path, "JSONL dataset")->required();
  demo->add_option("--main-mode", demo_cfg.main_mode)->capture_default_str();
  demo->add_option("--width", demo_cfg.width)->capture_default_str();
  demo->add_option("--limit", demo_cfg.limit, "0 processes every item")->capture_default_str();

  for (auto* sub : {generate, filter, verify, baseline, demo}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.task = parse_task(task);
    cfg.wl.init = parse_wl_init(wl_init);
    cfg.clique_attachment = parse_clique_attach(clique_attach);
    cfg.out_dir = out_dir;

    if (*generate) {
      const Manifest m = cmd_generate(cfg);
      std::cout << nlohmann::json{{"candidates", m.candidate_count},
                                  {"per_class", m.candidates_per_class},
                                  {"out", out_dir}}
                       .dump()
                << '\n';
    } else if (*filter) {
      const FilterOutcome out = cmd_filter(cfg);
      for (const auto& w : out.result.warnings) std::cerr << "warning: " << w << '\n';
      std::cout << nlohmann::json{{"pre_filter_cv_accuracy", out.pre_accuracy},
                                  {"post_filter_cv_accuracy", out.post_accuracy},
                                  {"hard_available", out.result.hard_available},
                                  {"hard_selected", out.result.hard_selected},
                                  {"train", out.result.train.size()},
                                  {"test", out.result.test.size()}}
                       .dump()
                << '\n';
    } else if (*verify) {
      std::optional<Task> t;
      if (app.get_option("--task")->count() > 0) t = cfg.task;
      const VerifyReport report = cmd_verify(verify_path, t, cfg.threshold, cfg.clique_size);
      std::cout << report.to_json().dump() << '\n';
      if (!report.ok()) {
        for (const auto& why : report.failure_reasons) std::cerr << why << '\n';
        return kExitValidation;
      }
    } else if (*baseline) {
      const std::filesystem::path train =
          train_path.empty() ? cfg.out_dir / kTrainFile : std::filesystem::path(train_path);
      const std::filesystem::path test =
          test_path.empty() ? cfg.out_dir / kTestFile : std::filesystem::path(test_path);
      const BaselineReport report = cmd_baseline(cfg, train, test);
      std::cout << report.to_json().dump() << '\n';
    } else if (*demo) {
      demo_cfg.dataset = demo_path;
      demo_cfg.out_dir = out_dir;
      demo_cfg.seed = cfg.seed;
      const std::size_t n = cmd_tensor_demo(demo_cfg);
      std::cout << nlohmann::json{{"items", n}, {"out", out_dir}}.dump() << '\n';
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}
