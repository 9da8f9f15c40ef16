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

// Plot-graph baseline generator. A graph is a partial order over basic
// actions, each with a pool of descriptions; choice groups pick exactly one
// of their members and the perception group closes the plan. Planning draws
// a seeded linear extension of the selected actions and one description per
// action.

#ifndef ALIBI_PLANNER_HPP_
#define ALIBI_PLANNER_HPP_

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "alibi/dataset.hpp"
#include "alibi/realizer.hpp"
#include "alibi/text.hpp"

namespace alibi {

enum class PlanMode { kConstrained, kRandom };

template <>
struct EnumNames<PlanMode> {
  static constexpr std::string_view kLabel = "plan mode";
  static constexpr std::array<std::string_view, 2> kNames = {"constrained", "random"};
};

inline constexpr std::size_t kMinPoolSize = 10;
inline constexpr std::size_t kMaxPoolSize = 15;

struct Description {
  std::string text;
  std::vector<std::string> tags;  // empty: generic
};

// Attribute-equality predicate over (Profile, ADA). Attributes: gender,
// personal_status, has_children, participants, day_class, part_of_day,
// object_type, location.
struct Condition {
  std::string attribute;
  bool equal = true;
  std::string value;
};

struct PlotAction {
  std::string id;
  std::vector<Description> descriptions;
  std::vector<Condition> conditions;
};

struct ChoiceGroup {
  std::string id;
  std::vector<std::string> actions;
};

struct PlotGraph {
  ActivityType activity_type = ActivityType::kSeeAMovie;
  std::vector<PlotAction> actions;
  std::vector<std::pair<std::string, std::string>> edges;  // first before second
  std::vector<ChoiceGroup> choice_groups;
  std::string perception_group;

  std::size_t IndexOf(const std::string& action) const {
    for (std::size_t i = 0; i < actions.size(); ++i) {
      if (actions[i].id == action) return i;
    }
    throw Error("planner", "unknown action '" + action + "'");
  }

  const ChoiceGroup* GroupOf(const std::string& action) const {
    for (const auto& g : choice_groups) {
      if (std::find(g.actions.begin(), g.actions.end(), action) != g.actions.end()) return &g;
    }
    return nullptr;
  }

  const ChoiceGroup& Perception() const {
    for (const auto& g : choice_groups) {
      if (g.id == perception_group) return g;
    }
    throw Error("planner", "perception group '" + perception_group + "' is not a choice group");
  }
};

struct PlanStep {
  std::string action;
  std::size_t description = 0;

  bool operator==(const PlanStep&) const = default;
};

// Steps in execution order; the last step belongs to the perception group.
struct Plan {
  std::vector<PlanStep> steps;

  bool operator==(const Plan&) const = default;
};

inline bool SupportsPlanner(ActivityType type) {
  return type == ActivityType::kSeeAMovie || type == ActivityType::kEatAtARestaurant;
}

// ---------------------------------------------------------------------------
// Validation

namespace planner_detail {

inline std::vector<std::vector<std::size_t>> Successors(const PlotGraph& g) {
  std::vector<std::vector<std::size_t>> out(g.actions.size());
  for (const auto& [a, b] : g.edges) out[g.IndexOf(a)].push_back(g.IndexOf(b));
  return out;
}

// reach[i][j]: j is reachable from i through one or more edges.
inline std::vector<std::vector<bool>> Reachability(const PlotGraph& g) {
  auto succ = Successors(g);
  std::size_t n = g.actions.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack = succ[s];
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      if (reach[s][v]) continue;
      reach[s][v] = true;
      for (std::size_t w : succ[v]) stack.push_back(w);
    }
  }
  return reach;
}

}  // namespace planner_detail

// Structural invariants: unique ids, known edge endpoints, no cycle,
// disjoint non-empty choice groups, a perception group with no outgoing
// edges. Pool sizes are checked separately so tiny in-code graphs stay
// usable.
inline void ValidatePlotGraph(const PlotGraph& g) {
  if (!SupportsPlanner(g.activity_type)) {
    throw UnsupportedError("planner", "no plot graph for " + std::string(ToString(g.activity_type)));
  }
  if (g.actions.empty()) throw Error("planner", "plot graph has no actions");
  std::set<std::string> ids;
  for (const auto& a : g.actions) {
    if (!ids.insert(a.id).second) throw Error("planner", "duplicate action '" + a.id + "'");
    if (a.descriptions.empty()) throw Error("planner", "action '" + a.id + "' has no descriptions");
  }
  auto reach = planner_detail::Reachability(g);
  for (std::size_t i = 0; i < g.actions.size(); ++i) {
    if (reach[i][i]) throw Error("planner", "edge cycle through '" + g.actions[i].id + "'");
  }
  std::set<std::string> grouped;
  std::set<std::string> group_ids;
  for (const auto& grp : g.choice_groups) {
    if (grp.actions.empty()) throw Error("planner", "choice group '" + grp.id + "' is empty");
    if (!group_ids.insert(grp.id).second) {
      throw Error("planner", "duplicate choice group '" + grp.id + "'");
    }
    for (const auto& a : grp.actions) {
      g.IndexOf(a);
      if (!grouped.insert(a).second) {
        throw Error("planner", "action '" + a + "' is in more than one choice group");
      }
    }
  }
  for (const auto& a : g.Perception().actions) {
    for (const auto& [from, to] : g.edges) {
      if (from == a) throw Error("planner", "perception action '" + a + "' has a successor");
    }
  }
}

inline void CheckPoolSizes(const PlotGraph& g) {
  for (const auto& a : g.actions) {
    if (a.descriptions.size() < kMinPoolSize || a.descriptions.size() > kMaxPoolSize) {
      throw Error("planner", "action '" + a.id + "' has " + std::to_string(a.descriptions.size()) +
                                 " descriptions, expected " + std::to_string(kMinPoolSize) + "-" +
                                 std::to_string(kMaxPoolSize));
    }
  }
}

// Whether `order` is a linear extension of the graph's partial order
// restricted to the actions it contains.
inline bool IsLinearExtension(const PlotGraph& g, const std::vector<std::string>& order) {
  auto reach = planner_detail::Reachability(g);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (reach[g.IndexOf(order[j])][g.IndexOf(order[i])]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Conditions and tags

inline std::optional<std::string> AttributeOf(const std::string& attribute, const Profile& p,
                                              const Ada& ada) {
  if (attribute == "gender") return std::string(ToString(p.gender));
  if (attribute == "personal_status") return std::string(ToString(p.personal_status));
  if (attribute == "has_children") return p.num_children > 0 ? "true" : "false";
  if (attribute == "participants") {
    if (!ada.participants) return std::nullopt;
    return std::string(ToString(*ada.participants));
  }
  if (attribute == "day_class") {
    if (!ada.day) return std::nullopt;
    return std::string(ToString(ClassOf(*ada.day)));
  }
  if (attribute == "part_of_day") {
    if (!ada.part_of_day) return std::nullopt;
    return std::string(ToString(*ada.part_of_day));
  }
  if (attribute == "object_type") return ada.object_type;
  if (attribute == "location") return ada.location;
  throw Error("planner", "unknown condition attribute '" + attribute + "'");
}

// An unknown value fails an eq condition and passes a ne condition.
inline bool ConditionHolds(const Condition& c, const Profile& p, const Ada& ada) {
  auto v = AttributeOf(c.attribute, p, ada);
  bool eq = v && NormalizeToken(*v) == NormalizeToken(c.value);
  return c.equal ? eq : !eq;
}

inline bool TagMatches(const Description& d, const Ada& ada) {
  if (d.tags.empty()) return true;
  if (!ada.object_type) return false;
  for (const auto& t : d.tags) {
    if (NormalizeToken(t) == NormalizeToken(*ada.object_type)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Planning

inline Plan MakePlan(const PlotGraph& g, const Profile& p, const Ada& ada, PlanMode mode,
                     std::uint64_t seed) {
  ValidatePlotGraph(g);
  bool constrained = mode == PlanMode::kConstrained;
  Rng rng = MakeRng(seed, constrained ? "planner.constrained" : "planner.random");

  // Eligible description indices per action; an action with none is off.
  std::vector<std::vector<std::size_t>> eligible(g.actions.size());
  for (std::size_t i = 0; i < g.actions.size(); ++i) {
    const auto& a = g.actions[i];
    bool enabled = true;
    if (constrained) {
      for (const auto& c : a.conditions) enabled = enabled && ConditionHolds(c, p, ada);
    }
    if (!enabled) continue;
    for (std::size_t d = 0; d < a.descriptions.size(); ++d) {
      if (!constrained || TagMatches(a.descriptions[d], ada)) eligible[i].push_back(d);
    }
  }

  std::vector<bool> selected(g.actions.size(), false);
  for (std::size_t i = 0; i < g.actions.size(); ++i) {
    if (!g.GroupOf(g.actions[i].id)) selected[i] = !eligible[i].empty();
  }
  for (const auto& grp : g.choice_groups) {
    std::vector<std::size_t> options;
    for (const auto& a : grp.actions) {
      std::size_t i = g.IndexOf(a);
      if (!eligible[i].empty()) options.push_back(i);
    }
    if (options.empty()) {
      throw GenerationError("planner", "no enabled action in choice group '" + grp.id + "'");
    }
    selected[options[UniformIndex(rng, options.size())]] = true;
  }

  // Seeded Kahn over the transitive order restricted to the selection; the
  // perception action is held back and appended last.
  auto reach = planner_detail::Reachability(g);
  const auto& perception = g.Perception().actions;
  auto is_perception = [&](std::size_t i) {
    return std::find(perception.begin(), perception.end(), g.actions[i].id) != perception.end();
  };
  std::vector<std::size_t> pending;
  std::size_t closing = g.actions.size();
  for (std::size_t i = 0; i < g.actions.size(); ++i) {
    if (!selected[i]) continue;
    if (is_perception(i)) {
      closing = i;
    } else {
      pending.push_back(i);
    }
  }
  Plan plan;
  while (!pending.empty()) {
    std::vector<std::size_t> ready;
    for (std::size_t a : pending) {
      bool blocked = false;
      for (std::size_t b : pending) blocked = blocked || (b != a && reach[b][a]);
      if (!blocked) ready.push_back(a);
    }
    std::size_t pick = ready[UniformIndex(rng, ready.size())];
    pending.erase(std::find(pending.begin(), pending.end(), pick));
    plan.steps.push_back({g.actions[pick].id, 0});
  }
  plan.steps.push_back({g.actions[closing].id, 0});
  for (auto& step : plan.steps) {
    const auto& choices = eligible[g.IndexOf(step.action)];
    step.description = choices[UniformIndex(rng, choices.size())];
  }
  return plan;
}

inline void CheckPlan(const Plan& plan, const PlotGraph& g) {
  if (plan.steps.empty()) throw Error("planner", "empty plan");
  std::vector<std::string> order;
  for (const auto& s : plan.steps) {
    const auto& a = g.actions[g.IndexOf(s.action)];
    if (s.description >= a.descriptions.size()) {
      throw Error("planner", "description index out of range for '" + s.action + "'");
    }
    order.push_back(s.action);
  }
  if (!IsLinearExtension(g, order)) throw Error("planner", "plan violates the partial order");
  const auto& closing = g.Perception().actions;
  if (std::find(closing.begin(), closing.end(), order.back()) == closing.end()) {
    throw Error("planner", "plan does not end in the perception group");
  }
}

// ---------------------------------------------------------------------------
// Realization

inline std::string RealizeDescription(const Description& d, const Ada& ada,
                                      const std::string& action, std::uint64_t seed) {
  Template t{action, ActivityType::kSeeAMovie, d.text};
  if (!TemplateFillable(t, ada)) {
    throw GenerationError("planner", "unfillable marker in description of '" + action + "'");
  }
  Rng rng = MakeRng(seed, "planner.segment." + action);
  return RenderTemplate(t, ada, TimeStyle::kDayAndPart, WithStyle::kEnumerated, rng);
}

// One rendered segment per body step (all steps except the perception).
inline std::vector<std::string> BodySegments(const Plan& plan, const PlotGraph& g,
                                             const Ada& ada, std::uint64_t seed) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i + 1 < plan.steps.size(); ++i) {
    const auto& s = plan.steps[i];
    out.push_back(RealizeDescription(g.actions[g.IndexOf(s.action)].descriptions[s.description],
                                     ada, s.action, seed));
  }
  return out;
}

inline Adp RealizePlan(const Plan& plan, const PlotGraph& g, const Ada& ada, const Profile& p,
                       const std::vector<Template>& templates, std::uint64_t seed) {
  CheckPlan(plan, g);
  Adp adp;
  adp.introduction = RealizeIntroduction(templates, ada, p, seed);
  auto segments = BodySegments(plan, g, ada, seed);
  for (const auto& s : segments) {
    if (!adp.body.empty()) adp.body += ' ';
    adp.body += s;
  }
  const auto& last = plan.steps.back();
  adp.perception = RealizeDescription(g.actions[g.IndexOf(last.action)].descriptions[last.description],
                                      ada, last.action, seed);
  if (auto v = CheckAdp(adp)) throw GenerationError("planner", v->first + ": " + v->second);
  return adp;
}

// ---------------------------------------------------------------------------
// Plot-graph files

inline PlotGraph ParsePlotGraph(const Json& doc, const std::string& file = "") {
  using namespace json_detail;
  Loc top{file, std::nullopt};
  CheckKeys(doc, {"schema_version", "activity_type", "actions", "edges", "choice_groups",
                  "perception_group"},
            top, "");
  CheckSchemaVersion(doc, file);
  PlotGraph g;
  g.activity_type = GetEnum<ActivityType>(doc, "activity_type", top, "");
  const Json& actions = GetArray(doc, "actions", top, "");
  for (std::size_t i = 0; i < actions.size(); ++i) {
    Loc loc{file, i};
    const Json& a = actions[i];
    CheckKeys(a, {"id", "descriptions", "conditions"}, loc, "");
    PlotAction action;
    action.id = GetString(a, "id", loc, "");
    const Json& descs = GetArray(a, "descriptions", loc, "");
    for (std::size_t d = 0; d < descs.size(); ++d) {
      std::string prefix = "descriptions[" + std::to_string(d) + "]";
      Description desc;
      if (descs[d].is_string()) {
        desc.text = descs[d].get<std::string>();
      } else {
        CheckKeys(descs[d], {"text", "tags"}, loc, prefix);
        desc.text = GetString(descs[d], "text", loc, prefix);
        if (descs[d].contains("tags")) {
          desc.tags = GetStringList(descs[d]["tags"], loc, Join(prefix, "tags"));
        }
      }
      try {
        CheckTemplateSyntax(desc.text);
      } catch (const Error& e) {
        Fail(loc, prefix, e.what());
      }
      action.descriptions.push_back(std::move(desc));
    }
    if (a.contains("conditions")) {
      const Json& conds = GetArray(a, "conditions", loc, "");
      for (std::size_t c = 0; c < conds.size(); ++c) {
        std::string prefix = "conditions[" + std::to_string(c) + "]";
        CheckKeys(conds[c], {"attribute", "op", "value"}, loc, prefix);
        Condition cond;
        cond.attribute = GetString(conds[c], "attribute", loc, prefix);
        std::string op = GetString(conds[c], "op", loc, prefix);
        if (op != "eq" && op != "ne") Fail(loc, Join(prefix, "op"), "expected eq or ne");
        cond.equal = op == "eq";
        cond.value = GetString(conds[c], "value", loc, prefix);
        try {
          AttributeOf(cond.attribute, Profile{}, Ada{});
        } catch (const Error& e) {
          Fail(loc, Join(prefix, "attribute"), e.what());
        }
        action.conditions.push_back(std::move(cond));
      }
    }
    g.actions.push_back(std::move(action));
  }
  if (doc.contains("edges")) {
    for (const auto& e : GetArray(doc, "edges", top, "")) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        Fail(top, "edges", "expected [before, after] pairs");
      }
      g.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  const Json& groups = GetArray(doc, "choice_groups", top, "");
  for (std::size_t i = 0; i < groups.size(); ++i) {
    std::string prefix = "choice_groups[" + std::to_string(i) + "]";
    CheckKeys(groups[i], {"id", "actions"}, top, prefix);
    ChoiceGroup grp;
    grp.id = GetString(groups[i], "id", top, prefix);
    grp.actions = GetStringList(Field(groups[i], "actions", top, prefix), top,
                                Join(prefix, "actions"));
    g.choice_groups.push_back(std::move(grp));
  }
  g.perception_group = GetString(doc, "perception_group", top, "");
  try {
    ValidatePlotGraph(g);
    CheckPoolSizes(g);
  } catch (const UnsupportedError&) {
    throw;
  } catch (const Error& e) {
    Fail(top, "", e.what());
  }
  return g;
}

inline PlotGraph LoadPlotGraph(const std::string& path) {
  return ParsePlotGraph(ReadJsonFile(path), path);
}

inline std::string PlotGraphFileName(ActivityType type) {
  return std::string(ToString(type)) + ".json";
}

using PlotGraphSet = std::map<ActivityType, PlotGraph>;

// Loads the graph of every supported type from `dir`.
inline PlotGraphSet LoadPlotGraphs(const std::string& dir) {
  PlotGraphSet out;
  for (ActivityType t : AllValues<ActivityType>()) {
    if (!SupportsPlanner(t)) continue;
    auto path = (std::filesystem::path(dir) / PlotGraphFileName(t)).string();
    PlotGraph g = LoadPlotGraph(path);
    if (g.activity_type != t) {
      throw DatasetError(path, std::nullopt, "activity_type", "does not match the file name");
    }
    out.emplace(t, std::move(g));
  }
  return out;
}

}  // namespace alibi

#endif  // ALIBI_PLANNER_HPP_
