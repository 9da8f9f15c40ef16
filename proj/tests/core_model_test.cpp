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

#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "alibi/core_model.hpp"
#include "alibi/dataset.hpp"
#include "test_support.hpp"

namespace alibi {
namespace {

using testing::DataPath;

TEST(PartOfDay, Table) {
  EXPECT_EQ(PartOfDayAt(22), PartOfDay::kNight);
  EXPECT_EQ(PartOfDayAt(12), PartOfDay::kNoon);
  EXPECT_EQ(PartOfDayAt(7), PartOfDay::kMorning);
  EXPECT_EQ(PartOfDayAt(0), PartOfDay::kNight);
  EXPECT_EQ(PartOfDayAt(4), PartOfDay::kNight);
  EXPECT_EQ(PartOfDayAt(5), PartOfDay::kMorning);
  EXPECT_EQ(PartOfDayAt(11), PartOfDay::kNoon);
  EXPECT_EQ(PartOfDayAt(14), PartOfDay::kAfternoon);
  EXPECT_EQ(PartOfDayAt(17), PartOfDay::kEvening);
  EXPECT_EQ(PartOfDayAt(21), PartOfDay::kNight);
  EXPECT_EQ(PartOfDayAt(24), PartOfDay::kNight);
}

TEST(PartOfDay, TotalAndPartitioned) {
  // Preimages, written out independently of the implementation.
  std::map<PartOfDay, std::set<int>> expected = {
      {PartOfDay::kMorning, {5, 6, 7, 8, 9, 10}},
      {PartOfDay::kNoon, {11, 12, 13}},
      {PartOfDay::kAfternoon, {14, 15, 16}},
      {PartOfDay::kEvening, {17, 18, 19, 20}},
      {PartOfDay::kNight, {0, 1, 2, 3, 4, 21, 22, 23, 24}},
  };
  std::map<PartOfDay, std::set<int>> seen;
  for (int h = 0; h <= 24; ++h) seen[PartOfDayAt(h)].insert(h);
  EXPECT_EQ(seen, expected);
}

TEST(PartOfDay, OutOfRange) {
  EXPECT_THROW(PartOfDayAt(-1), Error);
  EXPECT_THROW(PartOfDayAt(25), Error);
}

TEST(DayClass, Weekends) {
  EXPECT_EQ(ClassOfDay(Day::kSun), DayClass::kWeekend);
  EXPECT_EQ(ClassOfDay(Day::kSat), DayClass::kWeekend);
  EXPECT_EQ(ClassOfDay(Day::kTue), DayClass::kWeekday);
  for (auto d : {Day::kMon, Day::kTue, Day::kWed, Day::kThu, Day::kFri}) {
    EXPECT_EQ(ClassOfDay(d), DayClass::kWeekday);
  }
}

TEST(Duration, FromHours) {
  EXPECT_EQ(DurationOfHours(1), Duration::kOneHour);
  EXPECT_EQ(DurationOfHours(3), Duration::kThreeHours);
  EXPECT_THROW(DurationOfHours(0), Error);
  EXPECT_THROW(DurationOfHours(4), Error);
}

TEST(Enums, RoundTripTokens) {
  for (auto v : AllValues<Frequency>()) EXPECT_EQ(ParseEnum<Frequency>(ToString(v)), v);
  for (auto v : AllValues<ActivityType>()) EXPECT_EQ(ParseEnum<ActivityType>(ToString(v)), v);
  EXPECT_FALSE(ParseEnum<Duration>("five-hours"));
}

TEST(Instance, Invariants) {
  ActivityInstance ok{"work", Day::kMon, 9, 12, "downtown", Participants::kColleagues};
  EXPECT_FALSE(CheckInstance(ok));
  auto bad = ok;
  bad.end_hour = 13;
  EXPECT_EQ(CheckInstance(bad)->first, "end_hour");
  bad = ok;
  bad.end_hour = 9;
  EXPECT_TRUE(CheckInstance(bad));
  bad = ok;
  bad.location.clear();
  EXPECT_EQ(CheckInstance(bad)->first, "location");
}

TEST(Schedule, OrderAndOverlap) {
  ActivityInstance a{"work", Day::kMon, 9, 12, "downtown", Participants::kAlone};
  ActivityInstance b{"eat-lunch", Day::kMon, 11, 13, "downtown", Participants::kAlone};
  ActivityInstance c{"sleep", Day::kSun, 1, 3, "home", Participants::kAlone};
  EXPECT_EQ(CheckSchedule({&a, &b})->first, 1u);
  EXPECT_EQ(CheckSchedule({&c, &a})->first, 1u);
  b.start_hour = 12;
  EXPECT_FALSE(CheckSchedule({&a, &b}));
}

TEST(LoadDatasetA, ShippedCounts) {
  auto ds = LoadDatasetA(DataPath("ds_a.json"));
  EXPECT_EQ(ds.schedule_records.size(), 8u);
  EXPECT_EQ(ds.activity_records.size(), 30u);
}

TEST(LoadDatasetA, EmptyIsValid) {
  auto ds = ParseDatasetA(Json::parse(
      R"({"schema_version":1,"schedule_records":[],"activity_records":[]})"));
  EXPECT_TRUE(ds.schedule_records.empty());
  EXPECT_TRUE(ds.activity_records.empty());
}

TEST(LoadDatasetA, BadDurationNamesField) {
  Json doc = ReadJsonFile(DataPath("ds_a.json"));
  doc["activity_records"][3]["duration"] = "five-hours";
  try {
    ParseDatasetA(doc, "ds_a.json");
    FAIL() << "accepted an out-of-range duration";
  } catch (const DatasetError& e) {
    EXPECT_EQ(e.field(), "duration");
    EXPECT_EQ(e.record(), 3u);
    EXPECT_NE(std::string(e.what()).find("five-hours"), std::string::npos);
  }
}

TEST(LoadDatasetA, DuplicateId) {
  Json doc = ReadJsonFile(DataPath("ds_a.json"));
  doc["activity_records"][1]["id"] = doc["activity_records"][0]["id"];
  EXPECT_THROW(ParseDatasetA(doc), DatasetError);
}

TEST(LoadDatasetD, ShippedCounts) {
  auto ds = LoadDatasetD(DataPath("ds_d.json"));
  EXPECT_EQ(ds.detail_records.size(), 40u);
  std::map<ActivityType, int> per_type;
  for (const auto& r : ds.detail_records) ++per_type[r.activity_type];
  for (auto t : AllValues<ActivityType>()) EXPECT_GE(per_type[t], 10) << ToString(t);
}

TEST(LoadDatasetD, MissingPerceptionCitesId) {
  Json doc = ReadJsonFile(DataPath("ds_d.json"));
  doc["detail_records"][2]["adp"]["perception"] = "";
  std::string id = doc["detail_records"][2]["id"];
  try {
    ParseDatasetD(doc, "ds_d.json");
    FAIL() << "accepted an empty perception";
  } catch (const DatasetError& e) {
    EXPECT_NE(std::string(e.what()).find(id), std::string::npos) << e.what();
    EXPECT_EQ(e.field(), "adp.perception");
  }
}

TEST(LoadDatasetD, ShortIlv) {
  Json doc = ReadJsonFile(DataPath("ds_d.json"));
  doc["detail_records"][0]["ilv"] = {"same", "same", "same", "same", "same"};
  try {
    ParseDatasetD(doc);
    FAIL();
  } catch (const DatasetError& e) {
    EXPECT_EQ(e.field(), "ilv");
  }
}

TEST(RoundTrip, CanonicalFilesAreByteIdentical) {
  auto a = DataPath("ds_a.json");
  auto d = DataPath("ds_d.json");
  auto s = DataPath("scenario_john.json");
  EXPECT_EQ(SerializeDatasetA(LoadDatasetA(a)), ReadTextFile(a));
  EXPECT_EQ(SerializeDatasetD(LoadDatasetD(d)), ReadTextFile(d));
  EXPECT_EQ(SerializeScenario(LoadScenario(s)), ReadTextFile(s));
}

TEST(RoundTrip, ParseOfSerializedEqualsOriginal) {
  auto ds = LoadDatasetD(DataPath("ds_d.json"));
  EXPECT_EQ(ParseDatasetD(Json::parse(SerializeDatasetD(ds))), ds);
}

// Each mutation breaks exactly one invariant of activity record i.
struct Mutation {
  const char* name;
  const char* field;
  std::function<void(Json&)> apply;
};

TEST(Property, SingleMutationsRejectedWithLocation) {
  const Json base = ReadJsonFile(DataPath("ds_a.json"));
  const std::vector<Mutation> mutations = {
      {"age below 13", "profile.age", [](Json& r) { r["profile"]["age"] = 12; }},
      {"negative children", "profile.num_children",
       [](Json& r) { r["profile"]["num_children"] = -1; }},
      {"unknown gender", "profile.gender", [](Json& r) { r["profile"]["gender"] = "other"; }},
      {"unknown status", "profile.personal_status",
       [](Json& r) { r["profile"]["personal_status"] = "engaged"; }},
      {"unknown day class", "day_class", [](Json& r) { r["day_class"] = "holiday"; }},
      {"unknown part of day", "part_of_day", [](Json& r) { r["part_of_day"] = "dusk"; }},
      {"unknown duration", "duration", [](Json& r) { r["duration"] = "five-hours"; }},
      {"unknown participants", "participants", [](Json& r) { r["participants"] = "pets"; }},
      {"unknown frequency", "frequency", [](Json& r) { r["frequency"] = "hourly"; }},
      {"empty location", "location", [](Json& r) { r["location"] = ""; }},
      {"missing name", "name", [](Json& r) { r.erase("name"); }},
      {"name not in vocabulary", "name", [](Json& r) { r["name"] = "juggle"; }},
      {"placeholder name", "name", [](Json& r) { r["name"] = "PH"; }},
      {"unknown field", "colour", [](Json& r) { r["colour"] = "red"; }},
      {"age not an integer", "profile.age", [](Json& r) { r["profile"]["age"] = "old"; }},
  };
  std::mt19937_64 rng(20260101);
  const std::size_t n = base["activity_records"].size();
  for (int trial = 0; trial < 200; ++trial) {
    const auto& m = mutations[rng() % mutations.size()];
    std::size_t i = rng() % n;
    Json doc = base;
    m.apply(doc["activity_records"][i]);
    try {
      ParseDatasetA(doc, "ds_a.json");
      ADD_FAILURE() << m.name << " accepted at record " << i;
    } catch (const DatasetError& e) {
      EXPECT_EQ(e.record(), i) << m.name;
      EXPECT_EQ(e.field(), m.field) << m.name;
    }
  }
}

TEST(Property, ScheduleMutationsRejected) {
  const Json base = ReadJsonFile(DataPath("ds_a.json"));
  Json doc = base;
  auto& sch = doc["schedule_records"][0]["schedule"];
  sch[0]["end_hour"] = sch[0]["start_hour"].get<int>() + 4;
  EXPECT_THROW(ParseDatasetA(doc), DatasetError);
  doc = base;
  auto& s2 = doc["schedule_records"][0]["schedule"];
  std::swap(s2[0], s2[1]);
  EXPECT_THROW(ParseDatasetA(doc), DatasetError);
}

TEST(Ada, CompleteAndBound) {
  Ada a;
  EXPECT_FALSE(a.any_bound());
  a.location = "downtown";
  EXPECT_TRUE(a.any_bound());
  EXPECT_FALSE(a.complete());
  EXPECT_THROW(ParseAda(Json::object(), json_detail::Loc{}), DatasetError);
}

}  // namespace
}  // namespace alibi
