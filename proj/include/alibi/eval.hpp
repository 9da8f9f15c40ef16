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

// Automated comparison of the detail generators. Each (method, activity
// type) cell runs N seeded generations over rotating profiles and slots and
// reports four measures:
//
//   constraint_pass_rate  generation succeeded, the ADA agrees with the
//                         slot and the kb verifies the one-entry scenario
//   base_diversity        distinct base records used
//   lexical_diversity     distinct word bigrams / all word bigrams
//   leakage_rate          runs whose text keeps a replaced value or a
//                         kinship mention the profile contradicts

#ifndef ALIBI_EVAL_HPP_
#define ALIBI_EVAL_HPP_

#include <cstdio>
#include <iomanip>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "alibi/consistency.hpp"
#include "alibi/pipeline.hpp"
#include "alibi/planner.hpp"
#include "alibi/snacs.hpp"

namespace alibi {

enum class EvalMethod { kSnacsAny, kSnacsBst, kSnacsTag, kRndSnacs, kPlanner, kRndPlanner };

template <>
struct EnumNames<EvalMethod> {
  static constexpr std::string_view kLabel = "method";
  static constexpr std::array<std::string_view, 6> kNames = {
      "snacs-any", "snacs-bst", "snacs-tag", "rnd-snacs", "planner", "rnd-planner"};
};

inline bool IsPlannerMethod(EvalMethod m) {
  return m == EvalMethod::kPlanner || m == EvalMethod::kRndPlanner;
}

struct EvalCell {
  bool supported = true;
  int runs = 0;
  double constraint_pass_rate = 0.0;
  int base_diversity = 0;
  double lexical_diversity = 0.0;
  double leakage_rate = 0.0;
};

struct EvalReport {
  std::vector<EvalMethod> methods;
  std::vector<ActivityType> types;
  // cells[m][t] in the order of methods x types.
  std::vector<std::vector<EvalCell>> cells;

  const EvalCell& Cell(EvalMethod m, ActivityType t) const {
    for (std::size_t i = 0; i < methods.size(); ++i) {
      if (methods[i] != m) continue;
      for (std::size_t j = 0; j < types.size(); ++j) {
        if (types[j] == t) return cells[i][j];
      }
    }
    throw Error("cli", "no eval cell for " + std::string(ToString(m)) + " x " +
                           std::string(ToString(t)));
  }
};

// One generation outcome, kept so callers (and tests) can inspect samples.
struct EvalSample {
  bool ok = false;
  bool passed = false;
  bool leaked = false;
  std::string base_id;
  std::string text;
  std::string error;
};

// distinct bigrams / total bigrams over the word streams of all texts; 0
// when there is no bigram.
inline double LexicalDiversity(const std::vector<std::string>& texts) {
  std::set<std::pair<std::string, std::string>> distinct;
  std::size_t total = 0;
  for (const auto& t : texts) {
    auto words = SplitWords(t);
    for (std::size_t i = 0; i + 1 < words.size(); ++i) {
      distinct.emplace(words[i], words[i + 1]);
      ++total;
    }
  }
  return total == 0 ? 0.0 : static_cast<double>(distinct.size()) / static_cast<double>(total);
}

// Rotation pools: profiles and slots of the schedule records (placeholders
// excluded), in file order.
struct EvalPools {
  std::vector<Profile> profiles;
  std::vector<ActivityInstance> slots;

  static EvalPools From(const DatasetA& ds) {
    EvalPools p;
    for (const auto& r : ds.schedule_records) {
      if (std::find(p.profiles.begin(), p.profiles.end(), r.profile) == p.profiles.end()) {
        p.profiles.push_back(r.profile);
      }
      for (const auto& ai : r.schedule) {
        if (!ai.is_placeholder()) p.slots.push_back(ai);
      }
    }
    if (p.profiles.empty() || p.slots.empty()) {
      throw Error("cli", "DS_A has no schedule records to rotate over");
    }
    return p;
  }
};

// Activity name standing for `type` in the verification scenario.
inline std::string RepresentativeName(const DatasetA& ds, ActivityType type) {
  for (const auto& [name, t] : ds.detail_types) {
    if (t == type) return name;
  }
  throw Error("cli", "no activity in DS_A maps to " + std::string(ToString(type)));
}

inline bool AdaMatchesSlot(const Ada& ada, const ActivityInstance& slot) {
  return ada.day && *ada.day == DayValue(slot.day) && ada.part_of_day &&
         *ada.part_of_day == slot.part_of_day() && ada.location &&
         NormalizeToken(*ada.location) == NormalizeToken(slot.location) && ada.participants &&
         *ada.participants == slot.participants;
}

inline Adr GenerateForMethod(EvalMethod method, const Bundle& b, const Comparator& cmp,
                             const KnowledgeBase& kb, const GenerationRequest& base_req) {
  GenerationRequest req = base_req;
  switch (method) {
    case EvalMethod::kSnacsAny:
      req.variant = SnacsVariant::kAny;
      return GenerateDetails(cmp, req, b.ds_d, b.templates, b.config.tables, kb);
    case EvalMethod::kSnacsBst:
      req.variant = SnacsVariant::kBst;
      return GenerateDetails(cmp, req, b.ds_d, b.templates, b.config.tables, kb);
    case EvalMethod::kSnacsTag:
      req.variant = SnacsVariant::kTag;
      return GenerateDetails(cmp, req, b.ds_d, b.templates, b.config.tables, kb);
    case EvalMethod::kRndSnacs:
      req.variant = SnacsVariant::kRandom;
      return GenerateDetails(cmp, req, b.ds_d, b.templates, b.config.tables, kb);
    case EvalMethod::kPlanner:
    case EvalMethod::kRndPlanner: {
      if (!SupportsPlanner(req.activity_type)) {
        throw UnsupportedError("planner", "no plot graph for " +
                                              std::string(ToString(req.activity_type)));
      }
      bool random = method == EvalMethod::kRndPlanner;
      req.variant = random ? SnacsVariant::kRandom : SnacsVariant::kBst;
      const Adr& base = SelectBase(cmp, req, b.ds_d, b.config.tables);
      Adr out;
      out.ada = random ? FillAttributesRandom(req, base, b.ds_d) : FillAttributes(req, base, b.ds_d, kb);
      const PlotGraph& g = b.graphs.at(req.activity_type);
      Plan plan = MakePlan(g, req.profile, out.ada,
                           random ? PlanMode::kRandom : PlanMode::kConstrained, req.seed);
      out.adp = RealizePlan(plan, g, out.ada, req.profile, b.templates.at(req.activity_type),
                            req.seed);
      out.id = "plan-" + base.id;
      out.activity_type = req.activity_type;
      out.profile = req.profile;
      out.provenance = Provenance{base.id, std::string(ToString(method)), req.seed};
      return out;
    }
  }
  throw Error("cli", "unknown method");
}

inline std::uint64_t RunSeed(std::uint64_t seed, int run) {
  return MixSeed(seed, "eval.run." + std::to_string(run));
}

// Run r uses profile r mod P and slot (3r + 1) mod S.
inline GenerationRequest EvalRequest(const EvalPools& pools, ActivityType type, int run,
                                     std::uint64_t seed) {
  GenerationRequest req;
  req.profile = pools.profiles[static_cast<std::size_t>(run) % pools.profiles.size()];
  req.slot = pools.slots[(3 * static_cast<std::size_t>(run) + 1) % pools.slots.size()];
  req.activity_type = type;
  req.seed = RunSeed(seed, run);
  return req;
}

inline EvalSample RunSample(EvalMethod method, const Bundle& b, const Comparator& cmp,
                            const KnowledgeBase& kb, const GenerationRequest& req,
                            const std::string& activity_name) {
  EvalSample s;
  try {
    Adr adr = GenerateForMethod(method, b, cmp, kb, req);
    s.ok = true;
    s.base_id = adr.provenance ? adr.provenance->base_record_id : "";
    s.text = adr.adp.introduction + " " + adr.adp.body + " " + adr.adp.perception;
    const Adr* base = nullptr;
    for (const auto& r : b.ds_d.detail_records) {
      if (r.id == s.base_id) base = &r;
    }
    s.leaked = base && !FindLeaks(base->ada, adr).empty();
    Scenario one;
    one.subject = req.profile;
    ScenarioEntry e;
    e.instance = req.slot;
    e.instance.name = activity_name;
    e.details = adr;
    one.entries.push_back(std::move(e));
    // Window requirements concern whole scenarios, not a lone entry.
    KnowledgeBase entry_rules = kb;
    entry_rules.require_rules.clear();
    s.passed = adr.adp.well_formed() && AdaMatchesSlot(adr.ada, req.slot) &&
               Verify(one, entry_rules).passed();
  } catch (const UnsupportedError&) {
    throw;
  } catch (const Error& e) {
    s.error = e.what();
  }
  return s;
}

inline EvalCell RunCell(EvalMethod method, ActivityType type, const Bundle& b,
                        const KnowledgeBase& kb, int runs, std::uint64_t seed,
                        std::vector<EvalSample>* samples = nullptr) {
  if (runs < 1) throw Error("cli", "--runs must be >= 1");
  EvalCell cell;
  if (IsPlannerMethod(method) && !SupportsPlanner(type)) {
    cell.supported = false;
    return cell;
  }
  Comparator cmp = b.MakeComparator();
  EvalPools pools = EvalPools::From(b.ds_a);
  std::string name = RepresentativeName(b.ds_a, type);
  int passed = 0, leaked = 0;
  std::set<std::string> bases;
  std::vector<std::string> texts;
  for (int r = 0; r < runs; ++r) {
    EvalSample s = RunSample(method, b, cmp, kb, EvalRequest(pools, type, r, seed), name);
    passed += s.passed;
    leaked += s.leaked;
    if (s.ok) {
      bases.insert(s.base_id);
      texts.push_back(s.text);
    }
    if (samples) samples->push_back(std::move(s));
  }
  cell.runs = runs;
  cell.constraint_pass_rate = static_cast<double>(passed) / runs;
  cell.base_diversity = static_cast<int>(bases.size());
  cell.lexical_diversity = LexicalDiversity(texts);
  cell.leakage_rate = static_cast<double>(leaked) / runs;
  return cell;
}

inline EvalReport RunEval(const Bundle& b, const KnowledgeBase& kb,
                          const std::vector<EvalMethod>& methods, int runs, std::uint64_t seed) {
  EvalReport report;
  report.methods = methods;
  for (auto t : AllValues<ActivityType>()) report.types.push_back(t);
  for (auto m : methods) {
    std::vector<EvalCell> row;
    for (auto t : report.types) row.push_back(RunCell(m, t, b, kb, runs, seed));
    report.cells.push_back(std::move(row));
  }
  return report;
}

inline std::vector<EvalMethod> ParseMethods(const std::string& csv) {
  std::vector<EvalMethod> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = NormalizeToken(tok);
    if (tok.empty()) continue;
    auto m = ParseEnum<EvalMethod>(tok);
    if (!m) throw Error("cli", "unknown method '" + tok + "'");
    if (std::find(out.begin(), out.end(), *m) == out.end()) out.push_back(*m);
  }
  if (out.empty()) throw Error("cli", "no methods given");
  return out;
}

// ---------------------------------------------------------------------------
// Output

inline std::string FormatRate(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

inline std::string FormatReportTable(const EvalReport& r) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"method", "activity", "runs", "pass", "bases", "lexdiv", "leakage"});
  for (std::size_t i = 0; i < r.methods.size(); ++i) {
    for (std::size_t j = 0; j < r.types.size(); ++j) {
      const EvalCell& c = r.cells[i][j];
      std::vector<std::string> row = {std::string(ToString(r.methods[i])),
                                      std::string(ToString(r.types[j]))};
      if (!c.supported) {
        for (int k = 0; k < 5; ++k) row.push_back("n/a");
      } else {
        row.push_back(std::to_string(c.runs));
        row.push_back(FormatRate(c.constraint_pass_rate));
        row.push_back(std::to_string(c.base_diversity));
        row.push_back(FormatRate(c.lexical_diversity));
        row.push_back(FormatRate(c.leakage_rate));
      }
      rows.push_back(std::move(row));
    }
  }
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k < 2) {
        os << std::left << std::setw(static_cast<int>(width[k])) << row[k];
      } else {
        os << std::right << std::setw(static_cast<int>(width[k])) << row[k];
      }
      os << (k + 1 == row.size() ? "\n" : "  ");
    }
  }
  return os.str();
}

inline OrderedJson ToJson(const EvalReport& r) {
  OrderedJson cells = OrderedJson::array();
  for (std::size_t i = 0; i < r.methods.size(); ++i) {
    for (std::size_t j = 0; j < r.types.size(); ++j) {
      const EvalCell& c = r.cells[i][j];
      OrderedJson cell;
      cell["method"] = ToString(r.methods[i]);
      cell["activity_type"] = ToString(r.types[j]);
      if (!c.supported) {
        cell["status"] = "n/a";
      } else {
        cell["status"] = "ok";
        cell["runs"] = c.runs;
        cell["constraint_pass_rate"] = c.constraint_pass_rate;
        cell["base_diversity"] = c.base_diversity;
        cell["lexical_diversity"] = c.lexical_diversity;
        cell["leakage_rate"] = c.leakage_rate;
      }
      cells.push_back(std::move(cell));
    }
  }
  OrderedJson doc;
  doc["schema_version"] = kSchemaVersion;
  doc["cells"] = std::move(cells);
  return doc;
}

}  // namespace alibi

#endif  // ALIBI_EVAL_HPP_
