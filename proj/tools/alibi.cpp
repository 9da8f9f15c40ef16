// Copyright 2026 The Alibi Authors.
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

// alibi: command-line front end.
//
//   alibi validate [--ds-a F] [--ds-d F] [--kb F] [--scenario F] ...
//   alibi pipeline --kb F --scenario F [--kar k1|k11|random]
//                  [--snacs any|bst|tag|random] [--seed N] [--out F]
//   alibi eval [--methods csv] [--runs N] [--seed N] [--out F]
//
// Exit status: 0 success, 1 input or configuration error, 2 verification
// failure.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "alibi/eval.hpp"
#include "alibi/pipeline.hpp"

#ifndef ALIBI_DATA_DIR
#define ALIBI_DATA_DIR "data"
#endif

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerify = 2;

struct Options {
  std::string data = ALIBI_DATA_DIR;
  std::string ds_a, ds_d, templates, graphs, config;
  std::string kb, scenario, out;
  std::string kar = "k1";
  std::string snacs = "bst";
  std::string methods = "snacs-any,snacs-bst,snacs-tag,rnd-snacs,planner,rnd-planner";
  std::uint64_t seed = 0;
  int runs = 20;

  alibi::BundlePaths Paths() const {
    auto p = alibi::BundlePaths::Under(data);
    if (!ds_a.empty()) p.ds_a = ds_a;
    if (!ds_d.empty()) p.ds_d = ds_d;
    if (!templates.empty()) p.templates = templates;
    if (!graphs.empty()) p.graphs = graphs;
    if (!config.empty()) p.config = config;
    return p;
  }
};

void AddBundleFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--data", o.data, "Directory holding the default data bundle");
  cmd->add_option("--ds-a", o.ds_a, "Activities dataset (DS_A)");
  cmd->add_option("--ds-d", o.ds_d, "Activity-details dataset (DS_D)");
  cmd->add_option("--templates", o.templates, "Introduction template directory");
  cmd->add_option("--graphs", o.graphs, "Plot graph directory");
  cmd->add_option("--config", o.config, "Score tables and thresholds");
}

void Emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    alibi::WriteTextFile(path, content);
  }
}

int Validate(const Options& o) {
  auto checks = alibi::ValidateBundle(o.Paths(), o.kb, o.scenario);
  bool all = true;
  for (const auto& c : checks) {
    std::cout << (c.ok ? "PASS " : "FAIL ") << c.path;
    if (!c.ok) std::cout << ": " << c.message;
    std::cout << "\n";
    all = all && c.ok;
  }
  return all ? kExitOk : kExitInput;
}

int Pipeline(const Options& o) {
  if (o.kb.empty() || o.scenario.empty()) {
    throw alibi::Error("cli", "pipeline needs --kb and --scenario");
  }
  auto kar = alibi::ParseEnum<alibi::KarVariant>(o.kar);
  if (!kar) throw alibi::Error("cli", "unknown --kar '" + o.kar + "'");
  auto snacs = alibi::ParseEnum<alibi::SnacsVariant>(o.snacs);
  if (!snacs) throw alibi::Error("cli", "unknown --snacs '" + o.snacs + "'");
  alibi::Bundle bundle = alibi::LoadBundle(o.Paths(), /*with_graphs=*/false);
  auto kb = alibi::LoadKnowledgeBase(o.kb);
  auto scenario = alibi::LoadScenario(o.scenario);
  auto result = alibi::RunPipeline(bundle, kb, scenario, {*kar, *snacs, o.seed});
  std::cerr << "repair cost " << result.assignment.cost << ", replaced "
            << result.replaced.size() << " entr" << (result.replaced.size() == 1 ? "y" : "ies")
            << "\n";
  Emit(o.out, alibi::SerializeScenario(result.scenario));
  if (!result.report.passed()) {
    for (const auto& v : result.report.violations) {
      std::cerr << "violation " << v.rule_id;
      if (v.entry) std::cerr << " at entry " << *v.entry;
      std::cerr << ": " << v.message << "\n";
    }
    return kExitVerify;
  }
  return kExitOk;
}

int Eval(const Options& o) {
  auto methods = alibi::ParseMethods(o.methods);
  bool planner = false;
  for (auto m : methods) planner = planner || alibi::IsPlannerMethod(m);
  alibi::Bundle bundle = alibi::LoadBundle(o.Paths(), planner);
  alibi::KnowledgeBase kb;
  if (!o.kb.empty()) kb = alibi::LoadKnowledgeBase(o.kb);
  auto report = alibi::RunEval(bundle, kb, methods, o.runs, o.seed);
  std::cout << alibi::FormatReportTable(report);
  if (!o.out.empty()) alibi::WriteTextFile(o.out, alibi::Dump(alibi::ToJson(report)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scenario repair and activity-details generation"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "Load and check every dataset and fixture");
  AddBundleFlags(validate, o);
  validate->add_option("--kb", o.kb, "Knowledge base to check");
  validate->add_option("--scenario", o.scenario, "Scenario to check");

  auto* pipeline = app.add_subcommand("pipeline", "Repair a scenario and generate details");
  AddBundleFlags(pipeline, o);
  pipeline->add_option("--kb", o.kb, "Knowledge base")->required();
  pipeline->add_option("--scenario", o.scenario, "Input scenario")->required();
  pipeline->add_option("--kar", o.kar, "Activity replacement: k1, k11, random");
  pipeline->add_option("--snacs", o.snacs, "Details generation: any, bst, tag, random");
  pipeline->add_option("--seed", o.seed, "Random seed");
  pipeline->add_option("--out", o.out, "Output scenario file (default stdout)");

  auto* eval = app.add_subcommand("eval", "Compare generation methods");
  AddBundleFlags(eval, o);
  eval->add_option("--kb", o.kb, "Knowledge base used for the pass rate");
  eval->add_option("--methods", o.methods, "Comma-separated methods");
  eval->add_option("--runs", o.runs, "Generations per cell")->check(CLI::PositiveNumber);
  eval->add_option("--seed", o.seed, "Random seed");
  eval->add_option("--out", o.out, "JSON report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*validate) return Validate(o);
    if (*pipeline) return Pipeline(o);
    if (*eval) return Eval(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
