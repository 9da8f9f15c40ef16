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

// Repairs the shipped robbery scenario and prints the replaced entry.

#include <iostream>

#include "alibi/pipeline.hpp"

int main(int argc, char** argv) {
  std::string data = argc > 1 ? argv[1] : ALIBI_DATA_DIR;
  try {
    auto bundle = alibi::LoadBundle(alibi::BundlePaths::Under(data), false);
    auto kb = alibi::LoadKnowledgeBase(data + "/kb_robbery.json");
    auto scenario = alibi::LoadScenario(data + "/scenario_john.json");
    auto result = alibi::RunPipeline(bundle, kb, scenario, {});
    for (std::size_t i : result.replaced) {
      const auto& e = result.scenario.entries[i];
      std::cout << "entry " << i << ": " << e.instance.name << " ("
                << alibi::ToString(e.instance.day) << " " << e.instance.start_hour << "-"
                << e.instance.end_hour << ", " << e.instance.location << ")\n";
      if (e.details) {
        std::cout << "  " << e.details->adp.introduction << "\n"
                  << "  " << e.details->adp.body << "\n"
                  << "  " << e.details->adp.perception << "\n";
      }
    }
    std::cout << (result.report.passed() ? "verified" : "verification failed") << "\n";
    return result.report.passed() ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
