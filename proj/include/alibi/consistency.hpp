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

// Scenario consistency: a knowledge base of forbid / keep / require rules,
// the MaxSat encoding that picks the cheapest set of activities to give up,
// placeholder insertion, and final verification.
//
// Encoding: variable i+1 means "entry i is kept verbatim". A forbidden entry
// gets the hard unit (-x), a kept fact the hard unit (x), two overlapping
// entries the hard pair (-x_i v -x_j), and every entry the soft unit (x)
// with its weight. Require rules are not encoded: placeholders keep their
// slot, so coverage is checked after generation by Verify.

#ifndef ALIBI_CONSISTENCY_HPP_
#define ALIBI_CONSISTENCY_HPP_

#include <fnmatch.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "alibi/core_model.hpp"
#include "alibi/dataset.hpp"
#include "alibi/text.hpp"
#include "alibi/wcnf.hpp"

namespace alibi {

struct ForbidRule {
  std::string id;
  std::string activity = "*";  // fnmatch pattern over activity names
  std::optional<DayValue> day;
  std::optional<PartOfDay> part_of_day;
  std::optional<std::string> location;
};

// Same matching fields as ForbidRule; matching entries must be kept.
using KeepRule = ForbidRule;

// A named object (venue, movie) that may not appear in generated details.
struct ForbidObject {
  std::string id;
  std::string object_name;
  std::optional<DayValue> day;
  std::optional<PartOfDay> part_of_day;
};

struct RequireRule {
  std::string id;
  Day day = Day::kMon;
  int start_hour = 0;
  int end_hour = 24;
  std::optional<std::string> location;
  std::optional<Participants> participants;
};

struct KnowledgeBase {
  std::vector<ForbidRule> forbid_rules;
  std::vector<KeepRule> keep_rules;
  std::vector<ForbidObject> forbid_objects;
  std::vector<RequireRule> require_rules;
};

// ---------------------------------------------------------------------------
// Rule matching

inline bool DayMatches(const std::optional<DayValue>& rule, Day day) {
  if (!rule) return true;
  if (const auto* d = std::get_if<Day>(&*rule)) return *d == day;
  return std::get<DayClass>(*rule) == ClassOfDay(day);
}

// True when any hour of the instance falls in the part of day.
inline bool SpansPartOfDay(const ActivityInstance& ai, PartOfDay pod) {
  for (int h = ai.start_hour; h < ai.end_hour; ++h) {
    if (PartOfDayAt(h) == pod) return true;
  }
  return false;
}

inline bool RuleMatches(const ForbidRule& rule, const ActivityInstance& ai) {
  if (ai.is_placeholder()) return false;
  if (fnmatch(rule.activity.c_str(), ai.name.c_str(), 0) != 0) return false;
  if (!DayMatches(rule.day, ai.day)) return false;
  if (rule.part_of_day && !SpansPartOfDay(ai, *rule.part_of_day)) return false;
  if (rule.location && NormalizeToken(*rule.location) != NormalizeToken(ai.location)) {
    return false;
  }
  return true;
}

inline bool ObjectForbidden(const ForbidObject& rule, const std::string& name,
                            const ActivityInstance& slot) {
  if (NormalizeToken(rule.object_name) != NormalizeToken(name)) return false;
  if (!DayMatches(rule.day, slot.day)) return false;
  if (rule.part_of_day && !SpansPartOfDay(slot, *rule.part_of_day)) return false;
  return true;
}

inline bool ObjectForbidden(const KnowledgeBase& kb, const std::string& name,
                            const ActivityInstance& slot) {
  for (const auto& rule : kb.forbid_objects) {
    if (ObjectForbidden(rule, name, slot)) return true;
  }
  return false;
}

// Names of vocabulary activities some forbid rule rejects at this slot.
inline std::vector<std::string> ForbiddenNamesAt(const KnowledgeBase& kb,
                                                 const ActivityInstance& slot,
                                                 const std::vector<std::string>& vocabulary) {
  std::vector<std::string> out;
  for (const auto& name : vocabulary) {
    ActivityInstance probe = slot;
    probe.name = name;
    for (const auto& rule : kb.forbid_rules) {
      if (RuleMatches(rule, probe)) {
        out.push_back(name);
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Encoding

struct Encoding {
  WcnfProblem problem;
  // entry index for variable v is entry_of_var[v - 1].
  std::vector<std::size_t> entry_of_var;
  // Human-readable origin of each hard clause (rule id or overlap pair).
  std::vector<std::string> hard_origin;
};

inline Encoding Encode(const Scenario& s, const KnowledgeBase& kb,
                       const std::vector<std::uint64_t>& weights = {}) {
  Encoding enc;
  auto& p = enc.problem;
  std::vector<int> var_of_entry(s.entries.size(), 0);
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    if (s.entries[i].instance.is_placeholder()) continue;
    enc.entry_of_var.push_back(i);
    var_of_entry[i] = static_cast<int>(enc.entry_of_var.size());
  }
  p.num_vars = static_cast<int>(enc.entry_of_var.size());
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    int x = var_of_entry[i];
    if (!x) continue;
    const auto& ai = s.entries[i].instance;
    for (const auto& rule : kb.forbid_rules) {
      if (RuleMatches(rule, ai)) {
        p.hard_clauses.push_back({-x});
        enc.hard_origin.push_back("forbid " + rule.id + " on entry " + std::to_string(i));
      }
    }
    for (const auto& rule : kb.keep_rules) {
      if (RuleMatches(rule, ai)) {
        p.hard_clauses.push_back({x});
        enc.hard_origin.push_back("keep " + rule.id + " on entry " + std::to_string(i));
      }
    }
  }
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    for (std::size_t j = i + 1; j < s.entries.size(); ++j) {
      if (!var_of_entry[i] || !var_of_entry[j]) continue;
      if (Overlaps(s.entries[i].instance, s.entries[j].instance)) {
        p.hard_clauses.push_back({-var_of_entry[i], -var_of_entry[j]});
        enc.hard_origin.push_back("overlap of entries " + std::to_string(i) + " and " +
                                  std::to_string(j));
      }
    }
  }
  for (std::size_t v = 0; v < enc.entry_of_var.size(); ++v) {
    std::size_t i = enc.entry_of_var[v];
    std::uint64_t w = i < weights.size() ? weights[i] : 1;
    if (w == 0) throw Error("consistency", "entry weights must be >= 1");
    p.soft_clauses.push_back({w, {static_cast<int>(v) + 1}});
  }
  return enc;
}

// Solves the encoding; an unsatisfiable rule set is reported with the rule
// origins of its core.
inline Assignment SolveEncoding(const Encoding& enc) {
  try {
    return Solve(enc.problem);
  } catch (const UnsatError& e) {
    std::string msg = "no consistent repair; conflicting rules:";
    for (auto idx : e.core()) msg += " [" + enc.hard_origin[idx] + "]";
    throw Error("consistency", msg);
  }
}

// Entries whose variable is false become placeholders that keep day, hours,
// location and participants; their stale details are dropped.
inline Scenario ApplySolution(const Scenario& s, const Assignment& a, const Encoding& enc) {
  Scenario out = s;
  for (std::size_t v = 0; v < enc.entry_of_var.size(); ++v) {
    if (a.Value(static_cast<int>(v) + 1)) continue;
    auto& entry = out.entries[enc.entry_of_var[v]];
    entry.instance.name = std::string(kPlaceholder);
    entry.details.reset();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verification

struct RuleViolation {
  std::string rule_id;
  std::optional<std::size_t> entry;
  std::string message;
};

struct VerifyReport {
  std::vector<RuleViolation> violations;
  bool passed() const { return violations.empty(); }
};

inline bool Covers(const ActivityInstance& ai, const RequireRule& rule) {
  if (ai.day != rule.day) return false;
  if (rule.location && NormalizeToken(*rule.location) != NormalizeToken(ai.location)) {
    return false;
  }
  if (rule.participants && *rule.participants != ai.participants) return false;
  return true;
}

inline VerifyReport Verify(const Scenario& s, const KnowledgeBase& kb) {
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    if (s.entries[i].instance.is_placeholder()) {
      throw Error("consistency",
                  "incomplete scenario: entry " + std::to_string(i) + " is still a placeholder");
    }
  }
  VerifyReport report;
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    const auto& entry = s.entries[i];
    for (const auto& rule : kb.forbid_rules) {
      if (RuleMatches(rule, entry.instance)) {
        report.violations.push_back(
            {rule.id, i, "forbidden activity '" + entry.instance.name + "'"});
      }
    }
    if (entry.details) {
      const auto& ada = entry.details->ada;
      for (const auto& rule : kb.forbid_objects) {
        for (const auto* name : {&ada.object_name, &ada.venue}) {
          if (*name && ObjectForbidden(rule, **name, entry.instance)) {
            report.violations.push_back({rule.id, i, "forbidden object '" + **name + "'"});
          }
        }
      }
    }
  }
  for (const auto& rule : kb.require_rules) {
    for (int h = rule.start_hour; h < rule.end_hour; ++h) {
      bool covered = false;
      for (const auto& e : s.entries) {
        if (Covers(e.instance, rule) && e.instance.start_hour <= h && h < e.instance.end_hour) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        report.violations.push_back({rule.id, std::nullopt,
                                     "window " + std::string(ToString(rule.day)) + " " +
                                         std::to_string(rule.start_hour) + "-" +
                                         std::to_string(rule.end_hour) +
                                         " not covered at hour " + std::to_string(h)});
        break;
      }
    }
  }
  for (std::size_t i = 1; i < s.entries.size(); ++i) {
    const auto& prev = s.entries[i - 1].instance;
    const auto& cur = s.entries[i].instance;
    if (ChronologicallyBefore(cur, prev)) {
      report.violations.push_back({"structure.order", i, "entry out of chronological order"});
    }
  }
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    for (std::size_t j = i + 1; j < s.entries.size(); ++j) {
      if (Overlaps(s.entries[i].instance, s.entries[j].instance)) {
        report.violations.push_back({"structure.overlap", j,
                                     "overlaps entry " + std::to_string(i)});
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Knowledge-base file

inline KnowledgeBase ParseKnowledgeBase(const Json& doc, const std::string& file = "") {
  using namespace json_detail;
  Loc top{file, std::nullopt};
  CheckKeys(doc, {"schema_version", "forbid_rules", "keep_rules", "forbid_objects",
                  "require_rules"},
            top, "");
  CheckSchemaVersion(doc, file);
  KnowledgeBase kb;
  std::set<std::string> ids;
  auto take_id = [&](const Json& j, const Loc& loc) {
    auto id = GetString(j, "id", loc, "");
    if (!ids.insert(id).second) Fail(loc, "id", "duplicate rule id '" + id + "'");
    return id;
  };
  auto matcher = [&](const Json& j, const Loc& loc) {
    CheckKeys(j, {"id", "activity", "day", "part_of_day", "location"}, loc, "");
    ForbidRule r;
    r.id = take_id(j, loc);
    if (j.contains("activity")) r.activity = GetString(j, "activity", loc, "");
    if (j.contains("day")) r.day = ParseDayValue(j["day"], loc, "day");
    if (j.contains("part_of_day")) r.part_of_day = GetEnum<PartOfDay>(j, "part_of_day", loc, "");
    if (j.contains("location")) r.location = GetString(j, "location", loc, "");
    return r;
  };
  auto each = [&](const char* key, auto&& fn) {
    if (!doc.contains(key)) return;
    const Json& arr = GetArray(doc, key, top, "");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      fn(arr[i], Loc{file.empty() ? key : file + " " + key, i});
    }
  };
  each("forbid_rules", [&](const Json& j, const Loc& loc) { kb.forbid_rules.push_back(matcher(j, loc)); });
  each("keep_rules", [&](const Json& j, const Loc& loc) { kb.keep_rules.push_back(matcher(j, loc)); });
  each("forbid_objects", [&](const Json& j, const Loc& loc) {
    CheckKeys(j, {"id", "object_name", "day", "part_of_day"}, loc, "");
    ForbidObject r;
    r.id = take_id(j, loc);
    r.object_name = GetString(j, "object_name", loc, "");
    if (j.contains("day")) r.day = ParseDayValue(j["day"], loc, "day");
    if (j.contains("part_of_day")) r.part_of_day = GetEnum<PartOfDay>(j, "part_of_day", loc, "");
    kb.forbid_objects.push_back(std::move(r));
  });
  each("require_rules", [&](const Json& j, const Loc& loc) {
    CheckKeys(j, {"id", "day", "start_hour", "end_hour", "location", "participants"}, loc, "");
    RequireRule r;
    r.id = take_id(j, loc);
    r.day = GetEnum<Day>(j, "day", loc, "");
    r.start_hour = GetInt(j, "start_hour", loc, "");
    r.end_hour = GetInt(j, "end_hour", loc, "");
    if (r.start_hour < 0 || r.end_hour > 24 || r.start_hour >= r.end_hour) {
      Fail(loc, "end_hour", "window must satisfy 0 <= start < end <= 24");
    }
    if (j.contains("location")) r.location = GetString(j, "location", loc, "");
    if (j.contains("participants")) {
      r.participants = GetEnum<Participants>(j, "participants", loc, "");
    }
    kb.require_rules.push_back(std::move(r));
  });
  return kb;
}

inline KnowledgeBase LoadKnowledgeBase(const std::string& path) {
  return ParseKnowledgeBase(ReadJsonFile(path), path);
}

}  // namespace alibi

#endif  // ALIBI_CONSISTENCY_HPP_
