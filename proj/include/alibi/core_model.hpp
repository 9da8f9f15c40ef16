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

// Domain types for everyday-activity scenarios: profiles, timed activity
// instances, crowd activity records and activity-details records.

#ifndef ALIBI_CORE_MODEL_HPP_
#define ALIBI_CORE_MODEL_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "alibi/error.hpp"

namespace alibi {

enum class Gender { kMale, kFemale };
enum class PersonalStatus { kSingle, kMarried, kDivorced, kWidowed, kPartnered };
enum class Day { kMon, kTue, kWed, kThu, kFri, kSat, kSun };
enum class DayClass { kWeekday, kWeekend };
enum class PartOfDay { kMorning, kNoon, kAfternoon, kEvening, kNight };
enum class Duration { kHalfHour, kOneHour, kTwoHours, kThreeHours };
enum class Participants { kAlone, kSpouse, kFamily, kFriends, kColleagues, kOther };
enum class Frequency {
  kDaily,
  kSeveralTimesAWeek,
  kOnceAWeek,
  kOnceAMonth,
  kRarely
};
enum class ActivityType {
  kSeeAMovie,
  kEatAtARestaurant,
  kBuyingGroceries,
  kDryCleaning
};

// Canonical lowercase token for each enumerator, in declaration order.
template <typename E>
struct EnumNames;

template <>
struct EnumNames<Gender> {
  static constexpr std::string_view kLabel = "gender";
  static constexpr std::array<std::string_view, 2> kNames = {"male", "female"};
};
template <>
struct EnumNames<PersonalStatus> {
  static constexpr std::string_view kLabel = "personal_status";
  static constexpr std::array<std::string_view, 5> kNames = {
      "single", "married", "divorced", "widowed", "partnered"};
};
template <>
struct EnumNames<Day> {
  static constexpr std::string_view kLabel = "day";
  static constexpr std::array<std::string_view, 7> kNames = {
      "monday", "tuesday",  "wednesday", "thursday",
      "friday", "saturday", "sunday"};
};
template <>
struct EnumNames<DayClass> {
  static constexpr std::string_view kLabel = "day_class";
  static constexpr std::array<std::string_view, 2> kNames = {"weekday",
                                                             "weekend"};
};
template <>
struct EnumNames<PartOfDay> {
  static constexpr std::string_view kLabel = "part_of_day";
  static constexpr std::array<std::string_view, 5> kNames = {
      "morning", "noon", "afternoon", "evening", "night"};
};
template <>
struct EnumNames<Duration> {
  static constexpr std::string_view kLabel = "duration";
  static constexpr std::array<std::string_view, 4> kNames = {
      "half-hour", "one-hour", "two-hours", "three-hours"};
};
template <>
struct EnumNames<Participants> {
  static constexpr std::string_view kLabel = "participants";
  static constexpr std::array<std::string_view, 6> kNames = {
      "alone", "spouse", "family", "friends", "colleagues", "other"};
};
template <>
struct EnumNames<Frequency> {
  static constexpr std::string_view kLabel = "frequency";
  static constexpr std::array<std::string_view, 5> kNames = {
      "daily", "several-times-a-week", "once-a-week", "once-a-month",
      "rarely"};
};
template <>
struct EnumNames<ActivityType> {
  static constexpr std::string_view kLabel = "activity_type";
  static constexpr std::array<std::string_view, 4> kNames = {
      "see-a-movie", "eat-at-a-restaurant", "buying-groceries",
      "dry-cleaning"};
};

template <typename E>
constexpr std::size_t EnumCount() {
  return EnumNames<E>::kNames.size();
}

template <typename E>
constexpr std::string_view ToString(E value) {
  return EnumNames<E>::kNames[static_cast<std::size_t>(value)];
}

template <typename E>
constexpr std::optional<E> ParseEnum(std::string_view token) {
  const auto& names = EnumNames<E>::kNames;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == token) return static_cast<E>(i);
  }
  return std::nullopt;
}

template <typename E>
constexpr std::array<E, EnumNames<E>::kNames.size()> AllValues() {
  std::array<E, EnumNames<E>::kNames.size()> out{};
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<E>(i);
  return out;
}

// ---------------------------------------------------------------------------
// Derived attributes

inline DayClass ClassOfDay(Day day) {
  return (day == Day::kSat || day == Day::kSun) ? DayClass::kWeekend
                                                : DayClass::kWeekday;
}

// morning [5,11), noon [11,14), afternoon [14,17), evening [17,21),
// night [21,24] and [0,5).
inline PartOfDay PartOfDayAt(int hour) {
  if (hour < 0 || hour > 24) {
    throw Error("core-model",
                "hour out of range [0,24]: " + std::to_string(hour));
  }
  if (hour >= 5 && hour < 11) return PartOfDay::kMorning;
  if (hour >= 11 && hour < 14) return PartOfDay::kNoon;
  if (hour >= 14 && hour < 17) return PartOfDay::kAfternoon;
  if (hour >= 17 && hour < 21) return PartOfDay::kEvening;
  return PartOfDay::kNight;
}

// Hour difference to the duration scale; anything over three hours is
// rejected by ActivityInstance validation before it reaches here.
inline Duration DurationOfHours(int hours) {
  if (hours <= 0 || hours > 3) {
    throw Error("core-model",
                "duration out of range (0,3] hours: " + std::to_string(hours));
  }
  return hours == 1 ? Duration::kOneHour
                    : (hours == 2 ? Duration::kTwoHours : Duration::kThreeHours);
}

// ---------------------------------------------------------------------------
// Domain types

struct Profile {
  Gender gender = Gender::kMale;
  int age = 13;
  PersonalStatus personal_status = PersonalStatus::kSingle;
  int num_children = 0;

  bool operator==(const Profile&) const = default;
};

inline constexpr std::string_view kPlaceholder = "PH";

struct ActivityInstance {
  std::string name;
  Day day = Day::kMon;
  int start_hour = 0;
  int end_hour = 1;
  std::string location;
  Participants participants = Participants::kAlone;

  bool is_placeholder() const { return name == kPlaceholder; }
  PartOfDay part_of_day() const { return PartOfDayAt(start_hour); }
  bool operator==(const ActivityInstance&) const = default;
};

inline bool Overlaps(const ActivityInstance& a, const ActivityInstance& b) {
  return a.day == b.day && a.start_hour < b.end_hour &&
         b.start_hour < a.end_hour;
}

struct ScheduleRecord {
  std::string id;
  Profile profile;
  std::vector<ActivityInstance> schedule;

  bool operator==(const ScheduleRecord&) const = default;
};

struct ActivityRecord {
  std::string id;
  Profile profile;
  std::string name;
  DayClass day_class = DayClass::kWeekday;
  PartOfDay part_of_day = PartOfDay::kMorning;
  Duration duration = Duration::kOneHour;
  std::string location;
  Participants participants = Participants::kAlone;
  Frequency frequency = Frequency::kDaily;

  bool operator==(const ActivityRecord&) const = default;
};

// A day attribute is either a concrete day or only its class.
using DayValue = std::variant<Day, DayClass>;

inline DayClass ClassOf(const DayValue& value) {
  if (const auto* d = std::get_if<Day>(&value)) return ClassOfDay(*d);
  return std::get<DayClass>(value);
}

inline std::string_view ToString(const DayValue& value) {
  if (const auto* d = std::get_if<Day>(&value)) return ToString(*d);
  return ToString(std::get<DayClass>(value));
}

// Activity-details attribute vector. Partial when used as a query; complete
// when stored. `venue` names the place hosting a named object (the theater
// showing a movie) and `companions` lists the kinship/role tokens behind
// the participants value ("wife", "son").
struct ActivityDetailsAttributes {
  std::optional<DayValue> day;
  std::optional<PartOfDay> part_of_day;
  std::optional<std::string> object_name;
  std::optional<std::string> venue;
  std::optional<std::string> object_type;
  std::optional<std::string> location;
  std::optional<Participants> participants;
  std::vector<std::string> companions;

  bool any_bound() const {
    return day || part_of_day || object_name || venue || object_type ||
           location || participants;
  }
  bool complete() const {
    return day && part_of_day && object_name && object_type && location &&
           participants;
  }
  bool operator==(const ActivityDetailsAttributes&) const = default;
};

using Ada = ActivityDetailsAttributes;

struct ActivityPresentation {
  std::string introduction;
  std::string body;
  std::string perception;

  bool well_formed() const {
    return !introduction.empty() && !body.empty() && !perception.empty();
  }
  bool operator==(const ActivityPresentation&) const = default;
};

using Adp = ActivityPresentation;

enum class SimilarityValue { kSame, kSimilar, kOther };

template <>
struct EnumNames<SimilarityValue> {
  static constexpr std::string_view kLabel = "similarity";
  static constexpr std::array<std::string_view, 3> kNames = {"same", "similar",
                                                             "other"};
};

inline constexpr std::size_t kSnacsAttributeCount = 7;

// Importance of each SNACS attribute, indexed by SnacsAttribute.
using ImportanceLevelVector = std::array<SimilarityValue, kSnacsAttributeCount>;

// Where a generated record came from.
struct Provenance {
  std::string base_record_id;
  std::string variant;
  std::uint64_t seed = 0;

  bool operator==(const Provenance&) const = default;
};

struct ActivityDetailsRecord {
  std::string id;
  ActivityType activity_type = ActivityType::kSeeAMovie;
  Profile profile;
  Ada ada;
  Adp adp;
  std::optional<ImportanceLevelVector> ilv;
  std::optional<Provenance> provenance;

  bool operator==(const ActivityDetailsRecord&) const = default;
};

using Adr = ActivityDetailsRecord;

struct ScenarioEntry {
  ActivityInstance instance;
  std::optional<Adr> details;

  bool operator==(const ScenarioEntry&) const = default;
};

struct Scenario {
  Profile subject;
  std::vector<ScenarioEntry> entries;

  bool operator==(const Scenario&) const = default;
};

// One entry in a per-activity-type name pool.
struct NamedObject {
  std::string name;
  std::string type;

  bool operator==(const NamedObject&) const = default;
};

struct NamePool {
  std::vector<NamedObject> objects;
  std::vector<std::string> venues;

  bool operator==(const NamePool&) const = default;
};

struct DatasetA {
  int schema_version = 1;
  std::vector<std::string> activity_vocabulary;
  // Activity name -> details type, for activities SNACS can describe.
  std::map<std::string, ActivityType> detail_types;
  std::vector<std::vector<std::string>> location_groups;
  std::vector<ScheduleRecord> schedule_records;
  std::vector<ActivityRecord> activity_records;

  bool operator==(const DatasetA&) const = default;
};

struct DatasetD {
  int schema_version = 1;
  std::vector<std::vector<std::string>> type_groups;
  std::map<ActivityType, NamePool> name_pools;
  std::vector<Adr> detail_records;

  bool operator==(const DatasetD&) const = default;
};

// ---------------------------------------------------------------------------
// Invariant checks. Each returns the first violation as (field, reason), or
// nullopt when the value is valid.

using Violation = std::optional<std::pair<std::string, std::string>>;

inline Violation CheckProfile(const Profile& p) {
  if (p.age < 13) return {{"age", "must be >= 13"}};
  if (p.num_children < 0) return {{"num_children", "must be >= 0"}};
  return std::nullopt;
}

inline Violation CheckInstance(const ActivityInstance& ai) {
  if (ai.name.empty()) return {{"name", "must be non-empty"}};
  if (ai.start_hour < 0 || ai.start_hour > 24) {
    return {{"start_hour", "must be within [0,24]"}};
  }
  if (ai.end_hour < 0 || ai.end_hour > 24) {
    return {{"end_hour", "must be within [0,24]"}};
  }
  if (ai.start_hour >= ai.end_hour) {
    return {{"end_hour", "must be greater than start_hour"}};
  }
  if (ai.end_hour - ai.start_hour > 3) {
    return {{"end_hour", "activity longer than 3 hours"}};
  }
  if (ai.location.empty()) return {{"location", "must be non-empty"}};
  return std::nullopt;
}

inline bool ChronologicallyBefore(const ActivityInstance& a,
                                  const ActivityInstance& b) {
  return std::tuple(a.day, a.start_hour) < std::tuple(b.day, b.start_hour);
}

// Ordering and same-day non-overlap over a schedule. Returns the index of
// the first offending instance.
inline std::optional<std::pair<std::size_t, std::string>> CheckSchedule(
    const std::vector<const ActivityInstance*>& schedule) {
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    const auto& prev = *schedule[i - 1];
    const auto& cur = *schedule[i];
    if (ChronologicallyBefore(cur, prev)) {
      return {{i, "not sorted by (day, start_hour)"}};
    }
    if (Overlaps(prev, cur)) {
      return {{i, "overlaps the previous instance"}};
    }
  }
  return std::nullopt;
}

inline Violation CheckAdp(const Adp& adp) {
  if (adp.introduction.empty()) return {{"introduction", "must be non-empty"}};
  if (adp.body.empty()) return {{"body", "must be non-empty"}};
  if (adp.perception.empty()) return {{"perception", "must be non-empty"}};
  return std::nullopt;
}

}  // namespace alibi

#endif  // ALIBI_CORE_MODEL_HPP_
