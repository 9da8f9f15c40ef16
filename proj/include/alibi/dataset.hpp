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

// JSON ingestion and serialization for the activities dataset (DS_A), the
// activity-details dataset (DS_D) and scenario files. Loaders validate
// every record against its type invariants and report the first violation
// with file, record index and field. Serializers emit the canonical form:
// fixed key order, two-space indent, trailing newline.

#ifndef ALIBI_DATASET_HPP_
#define ALIBI_DATASET_HPP_

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <string>

#include "alibi/core_model.hpp"
#include "json.hpp"

namespace alibi {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

namespace json_detail {

struct Loc {
  std::string file;
  std::optional<std::size_t> record;
};

[[noreturn]] inline void Fail(const Loc& loc, const std::string& field,
                              const std::string& reason) {
  throw DatasetError(loc.file, loc.record, field, reason);
}

inline std::string Join(const std::string& prefix, std::string_view key) {
  return prefix.empty() ? std::string(key) : prefix + "." + std::string(key);
}

inline void CheckObject(const Json& j, const Loc& loc,
                        const std::string& prefix) {
  if (!j.is_object()) Fail(loc, prefix, "expected an object");
}

inline void CheckKeys(const Json& j, std::initializer_list<std::string_view> allowed,
                      const Loc& loc, const std::string& prefix) {
  CheckObject(j, loc, prefix);
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || a == key;
    if (!known) Fail(loc, Join(prefix, key), "unknown field");
  }
}

inline const Json& Field(const Json& j, std::string_view key, const Loc& loc,
                         const std::string& prefix) {
  auto it = j.find(std::string(key));
  if (it == j.end()) Fail(loc, Join(prefix, key), "missing mandatory field");
  return *it;
}

inline std::string GetString(const Json& j, std::string_view key,
                             const Loc& loc, const std::string& prefix,
                             bool allow_empty = false) {
  const Json& v = Field(j, key, loc, prefix);
  if (!v.is_string()) Fail(loc, Join(prefix, key), "expected a string");
  auto s = v.get<std::string>();
  if (!allow_empty && s.empty()) Fail(loc, Join(prefix, key), "must be non-empty");
  return s;
}

inline int GetInt(const Json& j, std::string_view key, const Loc& loc,
                  const std::string& prefix) {
  const Json& v = Field(j, key, loc, prefix);
  if (!v.is_number_integer()) Fail(loc, Join(prefix, key), "expected an integer");
  return v.get<int>();
}

template <typename E>
E EnumFrom(const Json& v, const Loc& loc, const std::string& field) {
  if (!v.is_string()) Fail(loc, field, "expected a string token");
  auto token = v.get<std::string>();
  auto parsed = ParseEnum<E>(token);
  if (!parsed) {
    std::string domain;
    for (auto n : EnumNames<E>::kNames) {
      domain += (domain.empty() ? "" : ", ") + std::string(n);
    }
    Fail(loc, field, "value '" + token + "' out of range {" + domain + "}");
  }
  return *parsed;
}

template <typename E>
E GetEnum(const Json& j, std::string_view key, const Loc& loc,
          const std::string& prefix) {
  return EnumFrom<E>(Field(j, key, loc, prefix), loc, Join(prefix, key));
}

inline std::vector<std::string> GetStringList(const Json& v, const Loc& loc,
                                              const std::string& field) {
  if (!v.is_array()) Fail(loc, field, "expected an array");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string() || e.get<std::string>().empty()) {
      Fail(loc, field, "expected non-empty strings");
    }
    out.push_back(e.get<std::string>());
  }
  return out;
}

inline const Json& GetArray(const Json& j, std::string_view key, const Loc& loc,
                            const std::string& prefix) {
  const Json& v = Field(j, key, loc, prefix);
  if (!v.is_array()) Fail(loc, Join(prefix, key), "expected an array");
  return v;
}

}  // namespace json_detail

// ---------------------------------------------------------------------------
// Parsing

inline Profile ParseProfile(const Json& j, const json_detail::Loc& loc,
                            const std::string& prefix = "profile") {
  using namespace json_detail;
  CheckKeys(j, {"gender", "age", "personal_status", "num_children"}, loc, prefix);
  Profile p;
  p.gender = GetEnum<Gender>(j, "gender", loc, prefix);
  p.age = GetInt(j, "age", loc, prefix);
  p.personal_status = GetEnum<PersonalStatus>(j, "personal_status", loc, prefix);
  p.num_children = GetInt(j, "num_children", loc, prefix);
  if (auto v = CheckProfile(p)) Fail(loc, Join(prefix, v->first), v->second);
  return p;
}

inline ActivityInstance ParseInstance(const Json& j, const json_detail::Loc& loc,
                                      const std::string& prefix) {
  using namespace json_detail;
  CheckKeys(j, {"name", "day", "start_hour", "end_hour", "location", "participants"},
            loc, prefix);
  ActivityInstance ai;
  ai.name = GetString(j, "name", loc, prefix);
  ai.day = GetEnum<Day>(j, "day", loc, prefix);
  ai.start_hour = GetInt(j, "start_hour", loc, prefix);
  ai.end_hour = GetInt(j, "end_hour", loc, prefix);
  ai.location = GetString(j, "location", loc, prefix);
  ai.participants = GetEnum<Participants>(j, "participants", loc, prefix);
  if (auto v = CheckInstance(ai)) Fail(loc, Join(prefix, v->first), v->second);
  return ai;
}

inline ActivityRecord ParseActivityRecord(const Json& j, const json_detail::Loc& loc) {
  using namespace json_detail;
  CheckKeys(j, {"id", "profile", "name", "day_class", "part_of_day", "duration",
                "location", "participants", "frequency"},
            loc, "");
  ActivityRecord r;
  r.id = GetString(j, "id", loc, "");
  r.profile = ParseProfile(Field(j, "profile", loc, ""), loc);
  r.name = GetString(j, "name", loc, "");
  r.day_class = GetEnum<DayClass>(j, "day_class", loc, "");
  r.part_of_day = GetEnum<PartOfDay>(j, "part_of_day", loc, "");
  r.duration = GetEnum<Duration>(j, "duration", loc, "");
  r.location = GetString(j, "location", loc, "");
  r.participants = GetEnum<Participants>(j, "participants", loc, "");
  r.frequency = GetEnum<Frequency>(j, "frequency", loc, "");
  return r;
}

inline DayValue ParseDayValue(const Json& v, const json_detail::Loc& loc,
                              const std::string& field) {
  if (v.is_string()) {
    auto token = v.get<std::string>();
    if (auto d = ParseEnum<Day>(token)) return *d;
    if (auto c = ParseEnum<DayClass>(token)) return *c;
  }
  json_detail::Fail(loc, field, "expected a day or day class token");
}

inline Ada ParseAda(const Json& j, const json_detail::Loc& loc,
                    const std::string& prefix = "ada") {
  using namespace json_detail;
  CheckKeys(j, {"day", "part_of_day", "object_name", "venue", "object_type",
                "location", "participants", "companions"},
            loc, prefix);
  Ada a;
  if (j.contains("day")) a.day = ParseDayValue(j["day"], loc, Join(prefix, "day"));
  if (j.contains("part_of_day")) a.part_of_day = GetEnum<PartOfDay>(j, "part_of_day", loc, prefix);
  if (j.contains("object_name")) a.object_name = GetString(j, "object_name", loc, prefix);
  if (j.contains("venue")) a.venue = GetString(j, "venue", loc, prefix);
  if (j.contains("object_type")) a.object_type = GetString(j, "object_type", loc, prefix);
  if (j.contains("location")) a.location = GetString(j, "location", loc, prefix);
  if (j.contains("participants")) {
    a.participants = GetEnum<Participants>(j, "participants", loc, prefix);
  }
  if (j.contains("companions")) {
    a.companions = GetStringList(j["companions"], loc, Join(prefix, "companions"));
  }
  if (!a.any_bound()) Fail(loc, prefix, "at least one attribute must be bound");
  return a;
}

inline Adp ParseAdp(const Json& j, const json_detail::Loc& loc,
                    const std::string& prefix = "adp") {
  using namespace json_detail;
  CheckKeys(j, {"introduction", "body", "perception"}, loc, prefix);
  Adp adp;
  adp.introduction = GetString(j, "introduction", loc, prefix, true);
  adp.body = GetString(j, "body", loc, prefix, true);
  adp.perception = GetString(j, "perception", loc, prefix, true);
  if (auto v = CheckAdp(adp)) Fail(loc, Join(prefix, v->first), v->second);
  return adp;
}

inline ImportanceLevelVector ParseIlv(const Json& v, const json_detail::Loc& loc,
                                      const std::string& field = "ilv") {
  if (!v.is_array()) json_detail::Fail(loc, field, "expected an array");
  if (v.size() != kSnacsAttributeCount) {
    json_detail::Fail(loc, field,
                      "expected exactly 7 entries, got " + std::to_string(v.size()));
  }
  ImportanceLevelVector ilv{};
  for (std::size_t i = 0; i < ilv.size(); ++i) {
    ilv[i] = json_detail::EnumFrom<SimilarityValue>(v[i], loc,
                                                    field + "[" + std::to_string(i) + "]");
  }
  return ilv;
}

inline Adr ParseAdr(const Json& j, const json_detail::Loc& loc,
                    bool require_complete = true, const std::string& prefix = "") {
  using namespace json_detail;
  CheckKeys(j, {"id", "activity_type", "profile", "ada", "adp", "ilv", "provenance"},
            loc, prefix);
  Adr r;
  r.id = GetString(j, "id", loc, prefix);
  // Later failures cite the id as well as the index.
  Loc idloc{loc.file.empty() ? r.id : loc.file + " [" + r.id + "]", loc.record};
  r.activity_type = GetEnum<ActivityType>(j, "activity_type", idloc, prefix);
  r.profile = ParseProfile(Field(j, "profile", idloc, prefix), idloc, Join(prefix, "profile"));
  r.ada = ParseAda(Field(j, "ada", idloc, prefix), idloc, Join(prefix, "ada"));
  if (require_complete) {
    if (!r.ada.complete()) Fail(idloc, Join(prefix, "ada"), "stored records need a complete ada");
    if (r.activity_type == ActivityType::kSeeAMovie && !r.ada.venue) {
      Fail(idloc, Join(prefix, "ada.venue"), "movie records need a venue");
    }
  }
  r.adp = ParseAdp(Field(j, "adp", idloc, prefix), idloc, Join(prefix, "adp"));
  if (j.contains("ilv")) r.ilv = ParseIlv(j["ilv"], idloc, Join(prefix, "ilv"));
  if (j.contains("provenance")) {
    const Json& pj = j["provenance"];
    std::string pp = Join(prefix, "provenance");
    CheckKeys(pj, {"base_record_id", "variant", "seed"}, idloc, pp);
    Provenance prov;
    prov.base_record_id = GetString(pj, "base_record_id", idloc, pp);
    prov.variant = GetString(pj, "variant", idloc, pp);
    const Json& s = Field(pj, "seed", idloc, pp);
    if (!s.is_number_unsigned() && !s.is_number_integer()) {
      Fail(idloc, Join(pp, "seed"), "expected an unsigned integer");
    }
    prov.seed = s.get<std::uint64_t>();
    r.provenance = prov;
  }
  return r;
}

inline Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DatasetError(path, std::nullopt, "", "cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DatasetError(path, std::nullopt, "", std::string("invalid JSON: ") + e.what());
  }
}

inline void CheckSchemaVersion(const Json& doc, const std::string& file) {
  json_detail::Loc loc{file, std::nullopt};
  int v = json_detail::GetInt(doc, "schema_version", loc, "");
  if (v != kSchemaVersion) {
    json_detail::Fail(loc, "schema_version", "unsupported version " + std::to_string(v));
  }
}

inline std::vector<std::vector<std::string>> ParseGroups(const Json& doc, std::string_view key,
                                                         const std::string& file) {
  json_detail::Loc loc{file, std::nullopt};
  std::vector<std::vector<std::string>> groups;
  if (!doc.contains(std::string(key))) return groups;
  const Json& arr = json_detail::GetArray(doc, key, loc, "");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    groups.push_back(json_detail::GetStringList(
        arr[i], loc, std::string(key) + "[" + std::to_string(i) + "]"));
  }
  return groups;
}

inline DatasetA ParseDatasetA(const Json& doc, const std::string& file = "") {
  using namespace json_detail;
  Loc top{file, std::nullopt};
  CheckKeys(doc, {"schema_version", "activity_vocabulary", "detail_types",
                  "location_groups", "schedule_records", "activity_records"},
            top, "");
  CheckSchemaVersion(doc, file);
  DatasetA ds;
  if (doc.contains("activity_vocabulary")) {
    ds.activity_vocabulary =
        GetStringList(doc["activity_vocabulary"], top, "activity_vocabulary");
  }
  std::set<std::string> vocab;
  for (const auto& name : ds.activity_vocabulary) {
    if (name == kPlaceholder) Fail(top, "activity_vocabulary", "PH is reserved");
    if (!vocab.insert(name).second) {
      Fail(top, "activity_vocabulary", "duplicate token '" + name + "'");
    }
  }
  auto check_name = [&](const std::string& name, const Loc& loc, const std::string& field) {
    if (name == kPlaceholder) Fail(loc, field, "PH is reserved");
    if (!vocab.empty() && !vocab.count(name)) {
      Fail(loc, field, "activity '" + name + "' not in vocabulary");
    }
  };
  if (doc.contains("detail_types")) {
    const Json& dt = doc["detail_types"];
    CheckObject(dt, top, "detail_types");
    for (const auto& [name, type] : dt.items()) {
      check_name(name, top, "detail_types." + name);
      ds.detail_types[name] = EnumFrom<ActivityType>(type, top, "detail_types." + name);
    }
  }
  ds.location_groups = ParseGroups(doc, "location_groups", file);

  std::set<std::string> ids;
  const Json& schedules = GetArray(doc, "schedule_records", top, "");
  for (std::size_t i = 0; i < schedules.size(); ++i) {
    Loc loc{file.empty() ? "schedule_records" : file + " schedule_records", i};
    const Json& j = schedules[i];
    CheckKeys(j, {"id", "profile", "schedule"}, loc, "");
    ScheduleRecord sr;
    sr.id = GetString(j, "id", loc, "");
    if (!ids.insert(sr.id).second) Fail(loc, "id", "duplicate id '" + sr.id + "'");
    sr.profile = ParseProfile(Field(j, "profile", loc, ""), loc);
    const Json& sch = GetArray(j, "schedule", loc, "");
    std::vector<const ActivityInstance*> view;
    for (std::size_t k = 0; k < sch.size(); ++k) {
      std::string prefix = "schedule[" + std::to_string(k) + "]";
      sr.schedule.push_back(ParseInstance(sch[k], loc, prefix));
      check_name(sr.schedule.back().name, loc, prefix + ".name");
    }
    for (const auto& ai : sr.schedule) view.push_back(&ai);
    if (auto bad = CheckSchedule(view)) {
      Fail(loc, "schedule[" + std::to_string(bad->first) + "]", bad->second);
    }
    ds.schedule_records.push_back(std::move(sr));
  }
  const Json& records = GetArray(doc, "activity_records", top, "");
  for (std::size_t i = 0; i < records.size(); ++i) {
    Loc loc{file.empty() ? "activity_records" : file + " activity_records", i};
    ActivityRecord r = ParseActivityRecord(records[i], loc);
    if (!ids.insert(r.id).second) Fail(loc, "id", "duplicate id '" + r.id + "'");
    check_name(r.name, loc, "name");
    ds.activity_records.push_back(std::move(r));
  }
  return ds;
}

inline DatasetA LoadDatasetA(const std::string& path) {
  return ParseDatasetA(ReadJsonFile(path), path);
}

inline DatasetD ParseDatasetD(const Json& doc, const std::string& file = "") {
  using namespace json_detail;
  Loc top{file, std::nullopt};
  CheckKeys(doc, {"schema_version", "type_groups", "name_pools", "detail_records"}, top, "");
  CheckSchemaVersion(doc, file);
  DatasetD ds;
  ds.type_groups = ParseGroups(doc, "type_groups", file);
  if (doc.contains("name_pools")) {
    const Json& pools = doc["name_pools"];
    CheckObject(pools, top, "name_pools");
    for (const auto& [type_token, pj] : pools.items()) {
      std::string prefix = "name_pools." + type_token;
      auto type = EnumFrom<ActivityType>(Json(type_token), top, prefix);
      CheckKeys(pj, {"objects", "venues"}, top, prefix);
      NamePool pool;
      const Json& objects = GetArray(pj, "objects", top, prefix);
      for (std::size_t k = 0; k < objects.size(); ++k) {
        std::string op = prefix + ".objects[" + std::to_string(k) + "]";
        CheckKeys(objects[k], {"name", "type"}, top, op);
        pool.objects.push_back({GetString(objects[k], "name", top, op),
                                GetString(objects[k], "type", top, op)});
      }
      if (pj.contains("venues")) {
        pool.venues = GetStringList(pj["venues"], top, prefix + ".venues");
      }
      ds.name_pools[type] = std::move(pool);
    }
  }
  std::set<std::string> ids;
  const Json& records = GetArray(doc, "detail_records", top, "");
  for (std::size_t i = 0; i < records.size(); ++i) {
    Loc loc{file.empty() ? "detail_records" : file + " detail_records", i};
    Adr r = ParseAdr(records[i], loc);
    if (!ids.insert(r.id).second) Fail(loc, "id", "duplicate id '" + r.id + "'");
    ds.detail_records.push_back(std::move(r));
  }
  return ds;
}

inline DatasetD LoadDatasetD(const std::string& path) {
  return ParseDatasetD(ReadJsonFile(path), path);
}

// Scenario files are accepted in any order-consistent state: overlapping
// instances are a repairable inconsistency, so only per-instance typing and
// chronological order are enforced here.
inline Scenario ParseScenario(const Json& doc, const std::string& file = "") {
  using namespace json_detail;
  Loc top{file, std::nullopt};
  CheckKeys(doc, {"schema_version", "subject", "entries"}, top, "");
  CheckSchemaVersion(doc, file);
  Scenario s;
  s.subject = ParseProfile(Field(doc, "subject", top, ""), top, "subject");
  const Json& entries = GetArray(doc, "entries", top, "");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    Loc loc{file.empty() ? "entries" : file + " entries", i};
    CheckKeys(entries[i], {"instance", "details"}, loc, "");
    ScenarioEntry e;
    e.instance = ParseInstance(Field(entries[i], "instance", loc, ""), loc, "instance");
    if (entries[i].contains("details")) {
      e.details = ParseAdr(entries[i]["details"], loc, true, "details");
    }
    if (!s.entries.empty() &&
        ChronologicallyBefore(e.instance, s.entries.back().instance)) {
      Fail(loc, "instance", "entries not sorted by (day, start_hour)");
    }
    s.entries.push_back(std::move(e));
  }
  return s;
}

inline Scenario LoadScenario(const std::string& path) {
  return ParseScenario(ReadJsonFile(path), path);
}

// ---------------------------------------------------------------------------
// Serialization

inline OrderedJson ToJson(const Profile& p) {
  OrderedJson j;
  j["gender"] = ToString(p.gender);
  j["age"] = p.age;
  j["personal_status"] = ToString(p.personal_status);
  j["num_children"] = p.num_children;
  return j;
}

inline OrderedJson ToJson(const ActivityInstance& ai) {
  OrderedJson j;
  j["name"] = ai.name;
  j["day"] = ToString(ai.day);
  j["start_hour"] = ai.start_hour;
  j["end_hour"] = ai.end_hour;
  j["location"] = ai.location;
  j["participants"] = ToString(ai.participants);
  return j;
}

inline OrderedJson ToJson(const ActivityRecord& r) {
  OrderedJson j;
  j["id"] = r.id;
  j["profile"] = ToJson(r.profile);
  j["name"] = r.name;
  j["day_class"] = ToString(r.day_class);
  j["part_of_day"] = ToString(r.part_of_day);
  j["duration"] = ToString(r.duration);
  j["location"] = r.location;
  j["participants"] = ToString(r.participants);
  j["frequency"] = ToString(r.frequency);
  return j;
}

inline OrderedJson ToJson(const ScheduleRecord& r) {
  OrderedJson j;
  j["id"] = r.id;
  j["profile"] = ToJson(r.profile);
  j["schedule"] = OrderedJson::array();
  for (const auto& ai : r.schedule) j["schedule"].push_back(ToJson(ai));
  return j;
}

inline OrderedJson ToJson(const Ada& a) {
  OrderedJson j = OrderedJson::object();
  if (a.day) j["day"] = ToString(*a.day);
  if (a.part_of_day) j["part_of_day"] = ToString(*a.part_of_day);
  if (a.object_name) j["object_name"] = *a.object_name;
  if (a.venue) j["venue"] = *a.venue;
  if (a.object_type) j["object_type"] = *a.object_type;
  if (a.location) j["location"] = *a.location;
  if (a.participants) j["participants"] = ToString(*a.participants);
  if (!a.companions.empty()) j["companions"] = a.companions;
  return j;
}

inline OrderedJson ToJson(const Adr& r) {
  OrderedJson j;
  j["id"] = r.id;
  j["activity_type"] = ToString(r.activity_type);
  j["profile"] = ToJson(r.profile);
  j["ada"] = ToJson(r.ada);
  j["adp"]["introduction"] = r.adp.introduction;
  j["adp"]["body"] = r.adp.body;
  j["adp"]["perception"] = r.adp.perception;
  if (r.ilv) {
    j["ilv"] = OrderedJson::array();
    for (auto v : *r.ilv) j["ilv"].push_back(ToString(v));
  }
  if (r.provenance) {
    j["provenance"]["base_record_id"] = r.provenance->base_record_id;
    j["provenance"]["variant"] = r.provenance->variant;
    j["provenance"]["seed"] = r.provenance->seed;
  }
  return j;
}

inline std::string Dump(const OrderedJson& j) { return j.dump(2) + "\n"; }

inline OrderedJson ToJson(const DatasetA& ds) {
  OrderedJson j;
  j["schema_version"] = ds.schema_version;
  j["activity_vocabulary"] = ds.activity_vocabulary;
  j["detail_types"] = OrderedJson::object();
  for (const auto& [name, type] : ds.detail_types) j["detail_types"][name] = ToString(type);
  j["location_groups"] = ds.location_groups;
  j["schedule_records"] = OrderedJson::array();
  for (const auto& r : ds.schedule_records) j["schedule_records"].push_back(ToJson(r));
  j["activity_records"] = OrderedJson::array();
  for (const auto& r : ds.activity_records) j["activity_records"].push_back(ToJson(r));
  return j;
}

inline OrderedJson ToJson(const DatasetD& ds) {
  OrderedJson j;
  j["schema_version"] = ds.schema_version;
  j["type_groups"] = ds.type_groups;
  j["name_pools"] = OrderedJson::object();
  for (const auto& [type, pool] : ds.name_pools) {
    OrderedJson pj;
    pj["objects"] = OrderedJson::array();
    for (const auto& o : pool.objects) {
      OrderedJson oj;
      oj["name"] = o.name;
      oj["type"] = o.type;
      pj["objects"].push_back(oj);
    }
    pj["venues"] = pool.venues;
    j["name_pools"][std::string(ToString(type))] = pj;
  }
  j["detail_records"] = OrderedJson::array();
  for (const auto& r : ds.detail_records) j["detail_records"].push_back(ToJson(r));
  return j;
}

inline OrderedJson ToJson(const Scenario& s) {
  OrderedJson j;
  j["schema_version"] = kSchemaVersion;
  j["subject"] = ToJson(s.subject);
  j["entries"] = OrderedJson::array();
  for (const auto& e : s.entries) {
    OrderedJson ej;
    ej["instance"] = ToJson(e.instance);
    if (e.details) ej["details"] = ToJson(*e.details);
    j["entries"].push_back(ej);
  }
  return j;
}

inline std::string SerializeDatasetA(const DatasetA& ds) { return Dump(ToJson(ds)); }
inline std::string SerializeDatasetD(const DatasetD& ds) { return Dump(ToJson(ds)); }
inline std::string SerializeScenario(const Scenario& s) { return Dump(ToJson(s)); }

inline std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DatasetError(path, std::nullopt, "", "cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void WriteTextFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("core-model", "cannot write file: " + path);
  out << content;
}

}  // namespace alibi

#endif  // ALIBI_DATASET_HPP_
