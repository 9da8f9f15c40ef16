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

// Three-valued attribute comparison (same / similar / other), the KAR and
// SNACS similarity vectors, and the table-driven compatibility scores.
//
// A missing operand always compares as Similar: the generators are
// expected to fill that attribute with a fitting value later.

#ifndef ALIBI_SIMILARITY_HPP_
#define ALIBI_SIMILARITY_HPP_

#include <array>
#include <cstdlib>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "alibi/core_model.hpp"
#include "alibi/dataset.hpp"
#include "alibi/text.hpp"

namespace alibi {

enum class KarAttribute {
  kGender,
  kAge,
  kNumChildren,
  kPersonalStatus,
  kDay,
  kPartOfDay,
  kDuration,
  kLocation,
  kParticipants,
  kFrequency
};

enum class SnacsAttribute {
  kGender,
  kAge,
  kNumChildren,
  kPersonalStatus,
  kParticipants,
  kObjectType,
  kPartOfDay
};

template <>
struct EnumNames<KarAttribute> {
  static constexpr std::string_view kLabel = "kar_attribute";
  static constexpr std::array<std::string_view, 10> kNames = {
      "gender",    "age",      "num_children", "personal_status", "day",
      "part_of_day", "duration", "location",   "participants",    "frequency"};
};

template <>
struct EnumNames<SnacsAttribute> {
  static constexpr std::string_view kLabel = "snacs_attribute";
  static constexpr std::array<std::string_view, 7> kNames = {
      "gender",       "age",         "num_children", "personal_status",
      "participants", "object_type", "part_of_day"};
};

inline constexpr std::size_t kKarAttributeCount = 10;
static_assert(EnumCount<SnacsAttribute>() == kSnacsAttributeCount);

using KarVector = std::array<SimilarityValue, kKarAttributeCount>;
using SnacsVector = std::array<SimilarityValue, kSnacsAttributeCount>;

// Fixed ILV used by SNACS-Bst: gender must match, everything else should.
inline constexpr ImportanceLevelVector kBstIlv = {
    SimilarityValue::kSame,    SimilarityValue::kSimilar,
    SimilarityValue::kSimilar, SimilarityValue::kSimilar,
    SimilarityValue::kSimilar, SimilarityValue::kSimilar,
    SimilarityValue::kSimilar};

// Union of both attribute sets; the generic Compare entry point takes this.
enum class Attribute {
  kGender,
  kAge,
  kNumChildren,
  kPersonalStatus,
  kDay,
  kPartOfDay,
  kDuration,
  kLocation,
  kParticipants,
  kFrequency,
  kObjectType
};

inline Attribute ToAttribute(KarAttribute a) {
  return static_cast<Attribute>(static_cast<int>(a));
}

inline Attribute ToAttribute(SnacsAttribute a) {
  switch (a) {
    case SnacsAttribute::kGender: return Attribute::kGender;
    case SnacsAttribute::kAge: return Attribute::kAge;
    case SnacsAttribute::kNumChildren: return Attribute::kNumChildren;
    case SnacsAttribute::kPersonalStatus: return Attribute::kPersonalStatus;
    case SnacsAttribute::kParticipants: return Attribute::kParticipants;
    case SnacsAttribute::kObjectType: return Attribute::kObjectType;
    case SnacsAttribute::kPartOfDay: return Attribute::kPartOfDay;
  }
  return Attribute::kGender;
}

using AttributeValue =
    std::variant<std::monostate, Gender, int, PersonalStatus, Day, DayClass,
                 PartOfDay, Duration, std::string, Participants, Frequency>;

struct Thresholds {
  int age_same = 0;
  int age_similar = 0;
  int children_same = 0;
  int children_similar = 0;

  bool operator==(const Thresholds&) const = default;
};

namespace compare_detail {

inline SimilarityValue ByDistance(int distance, int same_max, int similar_max) {
  if (distance <= same_max) return SimilarityValue::kSame;
  if (distance <= similar_max) return SimilarityValue::kSimilar;
  return SimilarityValue::kOther;
}

// Distance on a linear enum scale; equal → Same, adjacent → Similar.
template <typename E>
SimilarityValue OnScale(E a, E b) {
  return ByDistance(std::abs(static_cast<int>(a) - static_cast<int>(b)), 0, 1);
}

inline bool InSameGroup(const std::vector<std::vector<std::string>>& groups,
                        const std::string& a, const std::string& b) {
  for (const auto& group : groups) {
    bool has_a = false, has_b = false;
    for (const auto& token : group) {
      auto n = NormalizeToken(token);
      has_a = has_a || n == a;
      has_b = has_b || n == b;
    }
    if (has_a && has_b) return true;
  }
  return false;
}

}  // namespace compare_detail

// Attribute comparison functions. Thresholds and the location / object-type
// group maps come from configuration and the dataset headers.
class Comparator {
 public:
  Comparator() = default;
  Comparator(Thresholds thresholds,
             std::vector<std::vector<std::string>> location_groups,
             std::vector<std::vector<std::string>> type_groups)
      : thresholds_(thresholds),
        location_groups_(std::move(location_groups)),
        type_groups_(std::move(type_groups)) {}

  const Thresholds& thresholds() const { return thresholds_; }

  static SimilarityValue Gender(std::optional<alibi::Gender> a,
                                std::optional<alibi::Gender> b) {
    if (!a || !b) return SimilarityValue::kSimilar;
    return *a == *b ? SimilarityValue::kSame : SimilarityValue::kOther;
  }

  SimilarityValue Age(std::optional<int> a, std::optional<int> b) const {
    if (!a || !b) return SimilarityValue::kSimilar;
    return compare_detail::ByDistance(std::abs(*a - *b), thresholds_.age_same,
                                      thresholds_.age_similar);
  }

  // Having children versus not is decisive before the distance tiers.
  SimilarityValue NumChildren(std::optional<int> a, std::optional<int> b) const {
    if (!a || !b) return SimilarityValue::kSimilar;
    if ((*a == 0) != (*b == 0)) return SimilarityValue::kOther;
    return compare_detail::ByDistance(std::abs(*a - *b), thresholds_.children_same,
                                      thresholds_.children_similar);
  }

  static SimilarityValue Status(std::optional<PersonalStatus> a,
                                std::optional<PersonalStatus> b) {
    if (!a || !b) return SimilarityValue::kSimilar;
    if (*a == *b) return SimilarityValue::kSame;
    auto pair_of = [&](PersonalStatus x, PersonalStatus y) {
      return (*a == x && *b == y) || (*a == y && *b == x);
    };
    if (pair_of(PersonalStatus::kMarried, PersonalStatus::kPartnered) ||
        pair_of(PersonalStatus::kDivorced, PersonalStatus::kWidowed)) {
      return SimilarityValue::kSimilar;
    }
    return SimilarityValue::kOther;
  }

  // A concrete day against a class matches (Same) when it falls in it.
  static SimilarityValue DayOf(const std::optional<DayValue>& a,
                               const std::optional<DayValue>& b) {
    if (!a || !b) return SimilarityValue::kSimilar;
    const auto* da = std::get_if<Day>(&*a);
    const auto* db = std::get_if<Day>(&*b);
    if (da && db) {
      if (*da == *db) return SimilarityValue::kSame;
      return ClassOfDay(*da) == ClassOfDay(*db) ? SimilarityValue::kSimilar
                                                : SimilarityValue::kOther;
    }
    return ClassOf(*a) == ClassOf(*b) ? SimilarityValue::kSame
                                      : SimilarityValue::kOther;
  }

  // Cyclic: night is adjacent to morning.
  static SimilarityValue PartOfDayOf(std::optional<PartOfDay> a,
                                     std::optional<PartOfDay> b) {
    if (!a || !b) return SimilarityValue::kSimilar;
    constexpr int n = static_cast<int>(EnumCount<alibi::PartOfDay>());
    int d = std::abs(static_cast<int>(*a) - static_cast<int>(*b));
    d = std::min(d, n - d);
    return compare_detail::ByDistance(d, 0, 1);
  }

  static SimilarityValue DurationOf(std::optional<Duration> a,
                                    std::optional<Duration> b) {
    if (!a || !b) return SimilarityValue::kSimilar;
    return compare_detail::OnScale(*a, *b);
  }

  static SimilarityValue FrequencyOf(std::optional<Frequency> a,
                                     std::optional<Frequency> b) {
    if (!a || !b) return SimilarityValue::kSimilar;
    return compare_detail::OnScale(*a, *b);
  }

  static SimilarityValue ParticipantsOf(std::optional<alibi::Participants> a,
                                        std::optional<alibi::Participants> b) {
    if (!a || !b) return SimilarityValue::kSimilar;
    if (*a == *b) return SimilarityValue::kSame;
    if (*a != Participants::kAlone && *b != Participants::kAlone) {
      return SimilarityValue::kSimilar;
    }
    return SimilarityValue::kOther;
  }

  SimilarityValue Location(const std::optional<std::string>& a,
                           const std::optional<std::string>& b) const {
    return Grouped(location_groups_, a, b);
  }

  SimilarityValue ObjectType(const std::optional<std::string>& a,
                             const std::optional<std::string>& b) const {
    return Grouped(type_groups_, a, b);
  }

  // Generic entry point over tagged values. A value whose alternative does
  // not belong to the attribute's domain is a domain mismatch.
  SimilarityValue Compare(Attribute attr, const AttributeValue& a,
                          const AttributeValue& b) const {
    switch (attr) {
      case Attribute::kGender:
        return Gender(Get<alibi::Gender>(attr, a), Get<alibi::Gender>(attr, b));
      case Attribute::kAge:
        return Age(GetInt(attr, a, 0), GetInt(attr, b, 0));
      case Attribute::kNumChildren:
        return NumChildren(GetInt(attr, a, 0), GetInt(attr, b, 0));
      case Attribute::kPersonalStatus:
        return Status(Get<PersonalStatus>(attr, a), Get<PersonalStatus>(attr, b));
      case Attribute::kDay:
        return DayOf(GetDay(a), GetDay(b));
      case Attribute::kPartOfDay:
        return PartOfDayOf(Get<alibi::PartOfDay>(attr, a), Get<alibi::PartOfDay>(attr, b));
      case Attribute::kDuration:
        return DurationOf(Get<alibi::Duration>(attr, a), Get<alibi::Duration>(attr, b));
      case Attribute::kLocation:
        return Location(Get<std::string>(attr, a), Get<std::string>(attr, b));
      case Attribute::kParticipants:
        return ParticipantsOf(Get<alibi::Participants>(attr, a),
                              Get<alibi::Participants>(attr, b));
      case Attribute::kFrequency:
        return FrequencyOf(Get<alibi::Frequency>(attr, a), Get<alibi::Frequency>(attr, b));
      case Attribute::kObjectType:
        return ObjectType(Get<std::string>(attr, a), Get<std::string>(attr, b));
    }
    return SimilarityValue::kOther;
  }

  SimilarityValue Compare(KarAttribute attr, const AttributeValue& a,
                          const AttributeValue& b) const {
    return Compare(ToAttribute(attr), a, b);
  }

  SimilarityValue Compare(SnacsAttribute attr, const AttributeValue& a,
                          const AttributeValue& b) const {
    return Compare(ToAttribute(attr), a, b);
  }

 private:
  SimilarityValue Grouped(const std::vector<std::vector<std::string>>& groups,
                          const std::optional<std::string>& a,
                          const std::optional<std::string>& b) const {
    if (!a || !b) return SimilarityValue::kSimilar;
    auto na = NormalizeToken(*a), nb = NormalizeToken(*b);
    if (na == nb) return SimilarityValue::kSame;
    return compare_detail::InSameGroup(groups, na, nb) ? SimilarityValue::kSimilar
                                                       : SimilarityValue::kOther;
  }

  [[noreturn]] static void Mismatch(Attribute attr) {
    throw Error("similarity", "domain mismatch for attribute #" +
                                  std::to_string(static_cast<int>(attr)));
  }

  template <typename T>
  static std::optional<T> Get(Attribute attr, const AttributeValue& v) {
    if (std::holds_alternative<std::monostate>(v)) return std::nullopt;
    if (const auto* p = std::get_if<T>(&v)) return *p;
    Mismatch(attr);
  }

  static std::optional<int> GetInt(Attribute attr, const AttributeValue& v, int min) {
    auto x = Get<int>(attr, v);
    if (x && *x < min) Mismatch(attr);
    return x;
  }

  static std::optional<DayValue> GetDay(const AttributeValue& v) {
    if (std::holds_alternative<std::monostate>(v)) return std::nullopt;
    if (const auto* d = std::get_if<alibi::Day>(&v)) return DayValue(*d);
    if (const auto* c = std::get_if<DayClass>(&v)) return DayValue(*c);
    Mismatch(Attribute::kDay);
  }

  Thresholds thresholds_;
  std::vector<std::vector<std::string>> location_groups_;
  std::vector<std::vector<std::string>> type_groups_;
};

// ---------------------------------------------------------------------------
// Similarity vectors

// The slot side of a KAR comparison. Built from an activity instance, the
// duration and frequency stay unknown.
struct SlotQuery {
  std::optional<DayValue> day;
  std::optional<PartOfDay> part_of_day;
  std::optional<Duration> duration;
  std::optional<std::string> location;
  std::optional<Participants> participants;
  std::optional<Frequency> frequency;
};

inline SlotQuery QueryOf(const ActivityInstance& slot) {
  SlotQuery q;
  q.day = slot.day;
  q.part_of_day = slot.part_of_day();
  q.location = slot.location;
  q.participants = slot.participants;
  return q;
}

inline KarVector KarSimilarityVector(const Comparator& cmp, const Profile& p,
                                     const SlotQuery& slot,
                                     const ActivityRecord& ar) {
  KarVector v{};
  auto set = [&](KarAttribute a, SimilarityValue s) { v[static_cast<std::size_t>(a)] = s; };
  set(KarAttribute::kGender, Comparator::Gender(p.gender, ar.profile.gender));
  set(KarAttribute::kAge, cmp.Age(p.age, ar.profile.age));
  set(KarAttribute::kNumChildren, cmp.NumChildren(p.num_children, ar.profile.num_children));
  set(KarAttribute::kPersonalStatus,
      Comparator::Status(p.personal_status, ar.profile.personal_status));
  set(KarAttribute::kDay, Comparator::DayOf(slot.day, DayValue(ar.day_class)));
  set(KarAttribute::kPartOfDay, Comparator::PartOfDayOf(slot.part_of_day, ar.part_of_day));
  set(KarAttribute::kDuration, Comparator::DurationOf(slot.duration, ar.duration));
  set(KarAttribute::kLocation, cmp.Location(slot.location, ar.location));
  set(KarAttribute::kParticipants,
      Comparator::ParticipantsOf(slot.participants, ar.participants));
  set(KarAttribute::kFrequency, Comparator::FrequencyOf(slot.frequency, ar.frequency));
  return v;
}

inline KarVector KarSimilarityVector(const Comparator& cmp, const Profile& p,
                                     const ActivityInstance& slot,
                                     const ActivityRecord& ar) {
  return KarSimilarityVector(cmp, p, QueryOf(slot), ar);
}

// Only participants, object type and part of day take part from the ADA.
inline SnacsVector SnacsSimilarityVector(const Comparator& cmp, const Profile& p,
                                         const Ada& partial, const Adr& adr) {
  SnacsVector v{};
  auto set = [&](SnacsAttribute a, SimilarityValue s) { v[static_cast<std::size_t>(a)] = s; };
  set(SnacsAttribute::kGender, Comparator::Gender(p.gender, adr.profile.gender));
  set(SnacsAttribute::kAge, cmp.Age(p.age, adr.profile.age));
  set(SnacsAttribute::kNumChildren, cmp.NumChildren(p.num_children, adr.profile.num_children));
  set(SnacsAttribute::kPersonalStatus,
      Comparator::Status(p.personal_status, adr.profile.personal_status));
  set(SnacsAttribute::kParticipants,
      Comparator::ParticipantsOf(partial.participants, adr.ada.participants));
  set(SnacsAttribute::kObjectType, cmp.ObjectType(partial.object_type, adr.ada.object_type));
  set(SnacsAttribute::kPartOfDay,
      Comparator::PartOfDayOf(partial.part_of_day, adr.ada.part_of_day));
  return v;
}

// ---------------------------------------------------------------------------
// Score tables

inline constexpr int kMinScore = -15;
inline constexpr int kMaxScore = 15;

struct ScoreTables {
  // [attribute][observed similarity]
  std::array<std::array<int, 3>, kKarAttributeCount> kar{};
  // [attribute][importance][observed similarity]
  std::array<std::array<std::array<int, 3>, 3>, kSnacsAttributeCount> snacs{};

  int Kar(KarAttribute a, SimilarityValue s) const {
    return kar[static_cast<std::size_t>(a)][static_cast<std::size_t>(s)];
  }
  int Snacs(SnacsAttribute a, SimilarityValue observed, SimilarityValue importance) const {
    return snacs[static_cast<std::size_t>(a)][static_cast<std::size_t>(importance)]
                [static_cast<std::size_t>(observed)];
  }

  ScoreTables Scaled(int factor) const {
    ScoreTables t = *this;
    for (auto& row : t.kar) for (auto& x : row) x *= factor;
    for (auto& a : t.snacs) for (auto& row : a) for (auto& x : row) x *= factor;
    return t;
  }
};

struct ScoreConfig {
  Thresholds thresholds;
  ScoreTables tables;
};

// Entries must lie in [-15,15] and never increase from Same to Similar to
// Other. Throws ConfigError naming the first offending entry.
inline void CheckTables(const ScoreTables& t) {
  auto check_row = [](const std::array<int, 3>& row, const std::string& where) {
    for (int x : row) {
      if (x < kMinScore || x > kMaxScore) {
        throw ConfigError(where + ": score " + std::to_string(x) + " outside [-15,15]");
      }
    }
    if (!(row[0] >= row[1] && row[1] >= row[2])) {
      throw ConfigError(where + ": scores not monotone (same >= similar >= other)");
    }
  };
  for (auto a : AllValues<KarAttribute>()) {
    check_row(t.kar[static_cast<std::size_t>(a)], "kar." + std::string(ToString(a)));
  }
  for (auto a : AllValues<SnacsAttribute>()) {
    for (auto imp : AllValues<SimilarityValue>()) {
      check_row(t.snacs[static_cast<std::size_t>(a)][static_cast<std::size_t>(imp)],
                "snacs." + std::string(ToString(a)) + "." + std::string(ToString(imp)));
    }
  }
}

inline ScoreConfig ParseScoreConfig(const Json& doc, const std::string& file = "") {
  auto need = [&](const Json& j, const std::string& key, const std::string& where) -> const Json& {
    if (!j.is_object() || !j.contains(key)) {
      throw ConfigError(file + ": missing entry " + where + key);
    }
    return j[key];
  };
  auto need_int = [&](const Json& j, const std::string& key, const std::string& where) {
    const Json& v = need(j, key, where);
    if (!v.is_number_integer()) throw ConfigError(file + ": " + where + key + " must be an integer");
    return v.get<int>();
  };
  ScoreConfig cfg;
  const Json& th = need(doc, "thresholds", "");
  cfg.thresholds.age_same = need_int(th, "age_same", "thresholds.");
  cfg.thresholds.age_similar = need_int(th, "age_similar", "thresholds.");
  cfg.thresholds.children_same = need_int(th, "children_same", "thresholds.");
  cfg.thresholds.children_similar = need_int(th, "children_similar", "thresholds.");
  if (cfg.thresholds.age_same < 0 || cfg.thresholds.age_similar < cfg.thresholds.age_same ||
      cfg.thresholds.children_same < 0 ||
      cfg.thresholds.children_similar < cfg.thresholds.children_same) {
    throw ConfigError(file + ": thresholds must be non-negative and non-decreasing");
  }
  const Json& kar = need(doc, "kar", "");
  for (auto a : AllValues<KarAttribute>()) {
    std::string name(ToString(a));
    const Json& row = need(kar, name, "kar.");
    for (auto s : AllValues<SimilarityValue>()) {
      cfg.tables.kar[static_cast<std::size_t>(a)][static_cast<std::size_t>(s)] =
          need_int(row, std::string(ToString(s)), "kar." + name + ".");
    }
  }
  const Json& snacs = need(doc, "snacs", "");
  for (auto a : AllValues<SnacsAttribute>()) {
    std::string name(ToString(a));
    const Json& by_importance = need(snacs, name, "snacs.");
    for (auto imp : AllValues<SimilarityValue>()) {
      std::string iname(ToString(imp));
      const Json& row = need(by_importance, iname, "snacs." + name + ".");
      for (auto s : AllValues<SimilarityValue>()) {
        cfg.tables.snacs[static_cast<std::size_t>(a)][static_cast<std::size_t>(imp)]
                        [static_cast<std::size_t>(s)] =
            need_int(row, std::string(ToString(s)), "snacs." + name + "." + iname + ".");
      }
    }
  }
  CheckTables(cfg.tables);
  return cfg;
}

inline ScoreConfig LoadScoreConfig(const std::string& path) {
  Json doc;
  try {
    doc = ReadJsonFile(path);
  } catch (const DatasetError& e) {
    throw ConfigError(e.what());
  }
  return ParseScoreConfig(doc, path);
}

inline int KarCompatibility(const KarVector& vec, const ScoreTables& table) {
  int sum = 0;
  for (auto a : AllValues<KarAttribute>()) sum += table.Kar(a, vec[static_cast<std::size_t>(a)]);
  return sum;
}

inline int SnacsCompatibility(const SnacsVector& vec, const ImportanceLevelVector& ilv,
                              const ScoreTables& table) {
  int sum = 0;
  for (auto a : AllValues<SnacsAttribute>()) {
    auto i = static_cast<std::size_t>(a);
    sum += table.Snacs(a, vec[i], ilv[i]);
  }
  return sum;
}

}  // namespace alibi

#endif  // ALIBI_SIMILARITY_HPP_
