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

// End-to-end scenario repair: encode, solve, apply, replace each
// placeholder, generate details, verify. Also the bundle loader and the
// per-file validation report used by the command-line tool.

#ifndef ALIBI_PIPELINE_HPP_
#define ALIBI_PIPELINE_HPP_

#include <filesystem>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "alibi/consistency.hpp"
#include "alibi/dataset.hpp"
#include "alibi/kar.hpp"
#include "alibi/planner.hpp"
#include "alibi/realizer.hpp"
#include "alibi/similarity.hpp"
#include "alibi/snacs.hpp"

namespace alibi {

// Shipped data layout under one directory.
struct BundlePaths {
  std::string ds_a;
  std::string ds_d;
  std::string templates;
  std::string graphs;
  std::string config;

  static BundlePaths Under(const std::string& dir) {
    auto p = [&](const char* leaf) { return (std::filesystem::path(dir) / leaf).string(); };
    return {p("ds_a.json"), p("ds_d.json"), p("templates"), p("graphs"), p("score_tables.json")};
  }
};

struct Bundle {
  DatasetA ds_a;
  DatasetD ds_d;
  TemplateSet templates;
  PlotGraphSet graphs;
  ScoreConfig config;

  Comparator MakeComparator() const {
    return Comparator(config.thresholds, ds_a.location_groups, ds_d.type_groups);
  }
};

inline Bundle LoadBundle(const BundlePaths& paths, bool with_graphs = true) {
  Bundle b;
  b.ds_a = LoadDatasetA(paths.ds_a);
  b.ds_d = LoadDatasetD(paths.ds_d);
  b.templates = LoadTemplates(paths.templates);
  if (with_graphs) b.graphs = LoadPlotGraphs(paths.graphs);
  b.config = LoadScoreConfig(paths.config);
  return b;
}

struct PipelineOptions {
  KarVariant kar = KarVariant::kK1;
  SnacsVariant snacs = SnacsVariant::kBst;
  std::uint64_t seed = 0;
};

struct PipelineResult {
  Encoding encoding;
  Assignment assignment;
  Scenario repaired;                 // after apply, placeholders still open
  Scenario scenario;                 // final
  std::vector<std::size_t> replaced;  // entries filled by KAR
  VerifyReport report;
};

inline std::uint64_t EntrySeed(std::uint64_t seed, std::size_t index) {
  return MixSeed(seed, "pipeline.entry." + std::to_string(index));
}

inline PipelineResult RunPipeline(const Bundle& b, const KnowledgeBase& kb,
                                  const Scenario& input, const PipelineOptions& opt) {
  for (std::size_t i = 1; i < input.entries.size(); ++i) {
    if (ChronologicallyBefore(input.entries[i].instance, input.entries[i - 1].instance)) {
      throw Error("consistency", "scenario entries out of chronological order at " +
                                     std::to_string(i));
    }
  }
  PipelineResult r;
  r.encoding = Encode(input, kb);
  r.assignment = SolveEncoding(r.encoding);
  r.repaired = ApplySolution(input, r.assignment, r.encoding);
  Comparator cmp = b.MakeComparator();
  Scenario s = r.repaired;
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    if (!s.entries[i].instance.is_placeholder()) continue;
    auto forbidden = ForbiddenNamesAt(kb, s.entries[i].instance, b.ds_a.activity_vocabulary);
    std::set<std::string> excluded(forbidden.begin(), forbidden.end());
    s = ReplaceActivity(cmp, s, i, opt.kar, b.ds_a, b.config.tables, EntrySeed(opt.seed, i),
                        excluded);
    r.replaced.push_back(i);
    auto& entry = s.entries[i];
    auto type = b.ds_a.detail_types.find(entry.instance.name);
    if (type == b.ds_a.detail_types.end()) continue;
    GenerationRequest req{s.subject, entry.instance, type->second, opt.snacs,
                          EntrySeed(opt.seed, i)};
    entry.details = GenerateDetails(cmp, req, b.ds_d, b.templates, b.config.tables, kb);
  }
  r.report = Verify(s, kb);
  r.scenario = std::move(s);
  return r;
}

// ---------------------------------------------------------------------------
// Validation report

struct FileCheck {
  std::string path;
  bool ok = true;
  std::string message;
};

inline FileCheck CheckFile(const std::string& path, const std::function<void()>& load) {
  FileCheck c{path, true, ""};
  try {
    if (!std::filesystem::exists(path)) {
      throw DatasetError(path, std::nullopt, "", "file not found");
    }
    load();
  } catch (const std::exception& e) {
    c.ok = false;
    c.message = e.what();
  }
  return c;
}

// Loads every file of the bundle individually; optional kb and scenario
// paths are checked when non-empty.
inline std::vector<FileCheck> ValidateBundle(const BundlePaths& paths, const std::string& kb,
                                             const std::string& scenario) {
  std::vector<FileCheck> out;
  out.push_back(CheckFile(paths.ds_a, [&] { LoadDatasetA(paths.ds_a); }));
  out.push_back(CheckFile(paths.ds_d, [&] { LoadDatasetD(paths.ds_d); }));
  for (auto type : AllValues<ActivityType>()) {
    auto path = (std::filesystem::path(paths.templates) / TemplateFileName(type)).string();
    out.push_back(CheckFile(path, [&] { ParseTemplateFile(ReadTextFile(path), type, path); }));
  }
  for (auto type : AllValues<ActivityType>()) {
    if (!SupportsPlanner(type)) continue;
    auto path = (std::filesystem::path(paths.graphs) / PlotGraphFileName(type)).string();
    out.push_back(CheckFile(path, [&] {
      if (LoadPlotGraph(path).activity_type != type) {
        throw DatasetError(path, std::nullopt, "activity_type", "does not match the file name");
      }
    }));
  }
  out.push_back(CheckFile(paths.config, [&] { LoadScoreConfig(paths.config); }));
  if (!kb.empty()) out.push_back(CheckFile(kb, [&] { LoadKnowledgeBase(kb); }));
  if (!scenario.empty()) out.push_back(CheckFile(scenario, [&] { LoadScenario(scenario); }));
  return out;
}

}  // namespace alibi

#endif  // ALIBI_PIPELINE_HPP_
