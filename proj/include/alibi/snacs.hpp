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

// Activity-details generation by narrative adaptation (SNACS).
//
// A base record is picked from DS_D (uniformly for Any, by compatibility
// with a fixed or per-record importance vector for Bst / Tag). Its
// attributes are refilled for the new profile and slot in a fixed order
// (participants, then object names and location, then time frame), a new
// introduction is realized from templates, and the body and perception
// have every old attribute surface value swapped for the new one.

#ifndef ALIBI_SNACS_HPP_
#define ALIBI_SNACS_HPP_

#include <algorithm>
#include <cstdio>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "alibi/consistency.hpp"
#include "alibi/core_model.hpp"
#include "alibi/realizer.hpp"
#include "alibi/similarity.hpp"
#include "alibi/text.hpp"

namespace alibi {

enum class SnacsVariant { kAny, kBst, kTag, kRandom };

template <>
struct EnumNames<SnacsVariant> {
  static constexpr std::string_view kLabel = "snacs";
  static constexpr std::array<std::string_view, 4> kNames = {"any", "bst", "tag", "random"};
};

struct GenerationRequest {
  Profile profile;
  ActivityInstance slot;
  ActivityType activity_type = ActivityType::kSeeAMovie;
  SnacsVariant variant = SnacsVariant::kBst;
  std::uint64_t seed = 0;
};

// ---------------------------------------------------------------------------
// Kinship table

// Companion token adjusted to the profile: children become nieces/nephews
// for the childless, spouses become partners or friends for the unmarried,
// "family" becomes "friends" for the single and childless.
inline std::string RemapCompanion(const std::string& token, const Profile& p) {
  bool married = p.personal_status == PersonalStatus::kMarried;
  bool partnered = p.personal_status == PersonalStatus::kPartnered;
  if (p.num_children == 0) {
    if (token == "son") return "nephew";
    if (token == "daughter") return "niece";
    if (token == "kids" || token == "children") return "niece and nephew";
  }
  if (IsSpouseToken(token) && !married) return partnered ? "partner" : "friend";
  if ((token == "partner" || token == "boyfriend" || token == "girlfriend") && married) {
    return p.gender == Gender::kMale ? "wife" : "husband";
  }
  if (token == "family" && p.num_children == 0 && !married && !partnered) return "friends";
  return token;
}

inline bool CompanionConflicts(const std::string& token, const Profile& p) {
  return RemapCompanion(token, p) != token;
}

inline std::vector<std::string> DefaultCompanions(Participants who, const Profile& p) {
  std::string spouse = p.gender == Gender::kMale ? "wife" : "husband";
  switch (who) {
    case Participants::kAlone:
      return {};
    case Participants::kSpouse:
      return {RemapCompanion(spouse, p)};
    case Participants::kFamily: {
      std::vector<std::string> out;
      if (p.personal_status == PersonalStatus::kMarried) out.push_back(spouse);
      if (p.num_children > 0) out.push_back("kids");
      if (out.empty()) out.push_back(RemapCompanion("family", p));
      return out;
    }
    case Participants::kFriends:
      return {"friends"};
    case Participants::kColleagues:
      return {"colleagues"};
    case Participants::kOther:
      return {"neighbor"};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Base selection

inline Ada PartialAdaOf(const ActivityInstance& slot) {
  Ada a;
  a.day = slot.day;
  a.part_of_day = slot.part_of_day();
  a.location = slot.location;
  a.participants = slot.participants;
  return a;
}

inline std::vector<const Adr*> RecordsOfType(const DatasetD& ds, ActivityType type) {
  std::vector<const Adr*> out;
  for (const auto& r : ds.detail_records) {
    if (r.activity_type == type) out.push_back(&r);
  }
  std::sort(out.begin(), out.end(), [](const Adr* a, const Adr* b) { return a->id < b->id; });
  return out;
}

inline int BaseCompatibility(const Comparator& cmp, const GenerationRequest& req,
                             const Adr& record, const ImportanceLevelVector& ilv,
                             const ScoreTables& table) {
  return SnacsCompatibility(
      SnacsSimilarityVector(cmp, req.profile, PartialAdaOf(req.slot), record), ilv, table);
}

inline const Adr& SelectBase(const Comparator& cmp, const GenerationRequest& req,
                             const DatasetD& ds, const ScoreTables& table) {
  auto candidates = RecordsOfType(ds, req.activity_type);
  if (candidates.empty()) {
    throw GenerationError("snacs", "no detail record of type " +
                                       std::string(ToString(req.activity_type)));
  }
  if (req.variant == SnacsVariant::kAny || req.variant == SnacsVariant::kRandom) {
    Rng rng = MakeRng(req.seed, "snacs.base");
    return *candidates[UniformIndex(rng, candidates.size())];
  }
  const Adr* best = nullptr;
  int best_score = 0;
  for (const Adr* r : candidates) {
    const ImportanceLevelVector* ilv = &kBstIlv;
    if (req.variant == SnacsVariant::kTag) {
      if (!r->ilv) {
        throw GenerationError("snacs", "tag variant needs an ilv on record '" + r->id + "'");
      }
      ilv = &*r->ilv;
    }
    int score = BaseCompatibility(cmp, req, *r, *ilv, table);
    // Candidates are id-sorted, so strict improvement keeps the lower id.
    if (!best || score > best_score) {
      best = r;
      best_score = score;
    }
  }
  return *best;
}

// ---------------------------------------------------------------------------
// Attribute refill

// Whether the named object is itself the place (restaurant, store) rather
// than something shown at a venue (a movie).
inline bool ObjectIsPlace(ActivityType type) { return type != ActivityType::kSeeAMovie; }

namespace snacs_detail {

inline const NamePool& PoolFor(const DatasetD& ds, ActivityType type) {
  static const NamePool kEmpty;
  auto it = ds.name_pools.find(type);
  return it == ds.name_pools.end() ? kEmpty : it->second;
}

inline void Dedupe(std::vector<std::string>& v) {
  std::vector<std::string> out;
  for (auto& s : v) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  }
  v = std::move(out);
}

}  // namespace snacs_detail

// Completes the attribute vector for the request. Participants come from
// the slot and are remapped through the kinship table; object names are
// kept unless the knowledge base forbids them or the place lies elsewhere,
// in which case a seeded draw from the name pool (same type preferred, old
// name excluded) replaces them; day and part of day come from the slot.
inline Ada FillAttributes(const GenerationRequest& req, const Adr& base, const DatasetD& ds,
                          const KnowledgeBase& kb) {
  if (!base.ada.complete()) throw GenerationError("snacs", "base record ada is incomplete");
  const Profile& p = req.profile;
  const auto& slot = req.slot;
  Ada ada;

  // (1) participants
  ada.participants = slot.participants;
  ada.companions = base.ada.participants == slot.participants
                       ? base.ada.companions
                       : DefaultCompanions(slot.participants, p);
  if (slot.participants != Participants::kAlone && ada.companions.empty()) {
    ada.companions = DefaultCompanions(slot.participants, p);
  }
  if (slot.participants == Participants::kAlone) ada.companions.clear();
  for (auto& c : ada.companions) c = RemapCompanion(c, p);
  snacs_detail::Dedupe(ada.companions);

  // (2) object names and location
  ada.location = slot.location;
  ada.object_type = base.ada.object_type;
  ada.object_name = base.ada.object_name;
  ada.venue = base.ada.venue;
  bool moved = NormalizeToken(*base.ada.location) != NormalizeToken(slot.location);
  const NamePool& pool = snacs_detail::PoolFor(ds, req.activity_type);
  Rng rng = MakeRng(req.seed, "snacs.fill");

  bool replace_object = ObjectForbidden(kb, *base.ada.object_name, slot) ||
                        (moved && ObjectIsPlace(req.activity_type));
  if (replace_object) {
    auto usable = [&](const NamedObject& o) {
      return NormalizeToken(o.name) != NormalizeToken(*base.ada.object_name) &&
             !ObjectForbidden(kb, o.name, slot);
    };
    std::vector<const NamedObject*> same_type, any;
    for (const auto& o : pool.objects) {
      if (!usable(o)) continue;
      any.push_back(&o);
      if (NormalizeToken(o.type) == NormalizeToken(*base.ada.object_type)) same_type.push_back(&o);
    }
    const auto& from = same_type.empty() ? any : same_type;
    if (from.empty()) {
      throw GenerationError("snacs", "empty name pool: no replacement for '" +
                                         *base.ada.object_name + "'");
    }
    const NamedObject& pick = *from[UniformIndex(rng, from.size())];
    ada.object_name = pick.name;
    if (same_type.empty()) ada.object_type = pick.type;
  }
  if (base.ada.venue) {
    bool replace_venue = ObjectForbidden(kb, *base.ada.venue, slot) ||
                         (moved && !ObjectIsPlace(req.activity_type));
    if (replace_venue) {
      std::vector<const std::string*> venues;
      for (const auto& v : pool.venues) {
        if (NormalizeToken(v) != NormalizeToken(*base.ada.venue) && !ObjectForbidden(kb, v, slot)) {
          venues.push_back(&v);
        }
      }
      if (venues.empty()) {
        throw GenerationError("snacs", "empty name pool: no venue to replace '" +
                                           *base.ada.venue + "'");
      }
      ada.venue = *venues[UniformIndex(rng, venues.size())];
    }
  }

  // (3) time frame
  ada.day = slot.day;
  ada.part_of_day = slot.part_of_day();
  return ada;
}

// Rnd-SNACS refill: names drawn uniformly from the whole pool, companions
// carried over without the kinship rules.
inline Ada FillAttributesRandom(const GenerationRequest& req, const Adr& base,
                                const DatasetD& ds) {
  const NamePool& pool = snacs_detail::PoolFor(ds, req.activity_type);
  Rng rng = MakeRng(req.seed, "snacs.random-fill");
  Ada ada = base.ada;
  ada.participants = req.slot.participants;
  if (base.ada.participants != req.slot.participants) {
    ada.companions = DefaultCompanions(req.slot.participants, req.profile);
  }
  if (req.slot.participants == Participants::kAlone) ada.companions.clear();
  if (!pool.objects.empty()) {
    const NamedObject& pick = pool.objects[UniformIndex(rng, pool.objects.size())];
    ada.object_name = pick.name;
    ada.object_type = pick.type;
  }
  if (ada.venue && !pool.venues.empty()) ada.venue = pool.venues[UniformIndex(rng, pool.venues.size())];
  ada.location = req.slot.location;
  ada.day = req.slot.day;
  ada.part_of_day = req.slot.part_of_day();
  return ada;
}

// ---------------------------------------------------------------------------
// Body and perception adjustment

using Substitution = std::pair<std::string, std::string>;

// Old surface value -> new surface value for every attribute that changed.
inline std::vector<Substitution> SubstitutionPairs(const Ada& from, const Ada& to) {
  std::vector<Substitution> pairs;
  auto add = [&](const std::string& a, const std::string& b) {
    if (a.empty() || a == b) return;
    for (const auto& [k, v] : pairs) {
      if (k == a) return;
    }
    pairs.emplace_back(a, b);
  };
  if (from.object_name && to.object_name) add(*from.object_name, *to.object_name);
  if (from.venue && to.venue) add(*from.venue, *to.venue);
  if (from.location && to.location &&
      NormalizeToken(*from.location) != NormalizeToken(*to.location)) {
    add(*from.location, *to.location);
  }
  if (from.day && to.day) {
    add(DayWord(*from.day), DayWord(*to.day));
    if (ClassOf(*from.day) != ClassOf(*to.day)) {
      add(ClassOf(*from.day) == DayClass::kWeekend ? "weekend" : "weekday",
          ClassOf(*to.day) == DayClass::kWeekend ? "weekend" : "weekday");
    }
  }
  if (from.part_of_day && to.part_of_day && *from.part_of_day != *to.part_of_day) {
    const auto& old_words = PartOfDayWords(*from.part_of_day);
    const auto& new_words = PartOfDayWords(*to.part_of_day);
    for (std::size_t i = 0; i < old_words.size(); ++i) {
      add(old_words[i], new_words[std::min(i, new_words.size() - 1)]);
    }
  }
  for (std::size_t i = 0; i < from.companions.size(); ++i) {
    const auto& old_token = from.companions[i];
    if (std::find(to.companions.begin(), to.companions.end(), old_token) != to.companions.end()) {
      continue;
    }
    std::string replacement;
    if (i < to.companions.size()) {
      replacement = to.companions[i];
    } else {
      replacement = to.companions.empty() ? "friend" : to.companions.back();
    }
    add(old_token, replacement);
  }
  return pairs;
}

inline bool MatchesAt(std::string_view text, std::string_view key, std::size_t i) {
  if (key.empty() || i + key.size() > text.size()) return false;
  return FindToken(text.substr(0, i + key.size() < text.size() ? i + key.size() + 1 : text.size()),
                   key, i) == i;
}

// Single left-to-right pass; at each position the longest matching key
// wins. A lowercase key matched at a capital (sentence start) yields a
// capitalized replacement; otherwise the replacement is used verbatim.
inline std::string ApplySubstitutions(const std::string& text,
                                      const std::vector<Substitution>& pairs) {
  auto sorted = pairs;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Substitution& a, const Substitution& b) {
    return a.first.size() > b.first.size();
  });
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    bool replaced = false;
    for (const auto& [key, value] : sorted) {
      if (MatchesAt(text, key, i)) {
        std::string v = value;
        if (std::isupper(static_cast<unsigned char>(text[i])) &&
            !std::isupper(static_cast<unsigned char>(key[0]))) {
          v = Capitalize(v);
        }
        out += v;
        i += key.size();
        replaced = true;
        break;
      }
    }
    if (!replaced) out.push_back(text[i++]);
  }
  return out;
}

// Current object and venue names; they shield themselves from shorter
// keys ("night" inside the title "Night Shift").
inline std::vector<std::string> ProtectedNames(const Ada& ada) {
  std::vector<std::string> out;
  for (const auto* name : {&ada.object_name, &ada.venue}) {
    if (*name && !(*name)->empty()) out.push_back(**name);
  }
  return out;
}

inline std::pair<std::string, std::string> AdjustBodyPerception(const Adr& base,
                                                                const Ada& new_ada) {
  auto pairs = SubstitutionPairs(base.ada, new_ada);
  for (const auto& name : ProtectedNames(new_ada)) pairs.emplace_back(name, name);
  return {ApplySubstitutions(base.adp.body, pairs),
          ApplySubstitutions(base.adp.perception, pairs)};
}

// ---------------------------------------------------------------------------
// Leakage

// Surface forms in the generated presentation that betray the base record:
// old attribute values that should have been replaced, and companion
// mentions ("my son") contradicting the new profile.
inline std::vector<std::string> FindLeaks(const Ada& base_ada, const Adr& generated) {
  std::vector<std::string> leaks;
  const Adp& adp = generated.adp;
  auto mentions = [&](const std::string& needle) {
    return ContainsToken(adp.introduction, needle) || ContainsToken(adp.body, needle) ||
           ContainsToken(adp.perception, needle);
  };
  for (const auto& [old_value, new_value] : SubstitutionPairs(base_ada, generated.ada)) {
    // A replaced value that is (part of) a current value is not a leak:
    // "lunch" survives inside "late lunch".
    if (NormalizeToken(old_value) == NormalizeToken(new_value)) continue;
    std::vector<std::string> current_values = ProtectedNames(generated.ada);
    for (const auto& [o, n] : SubstitutionPairs(base_ada, generated.ada)) {
      current_values.push_back(n);
    }
    bool current = false;
    for (const auto& n : current_values) {
      current = current || NormalizeToken(n) == NormalizeToken(old_value) ||
                ContainsToken(n, old_value);
    }
    if (!current && mentions(old_value)) leaks.push_back(old_value);
  }
  static const std::array<const char*, 12> kKin = {
      "son", "daughter", "kids", "children", "wife", "husband",
      "partner", "boyfriend", "girlfriend", "family", "sons", "daughters"};
  for (const char* kin : kKin) {
    std::string token(kin);
    if (CompanionConflicts(token, generated.profile) && mentions("my " + token)) {
      leaks.push_back("my " + token);
    }
  }
  return leaks;
}

// ---------------------------------------------------------------------------
// Full pipeline

inline std::string GeneratedId(const std::string& base_id, SnacsVariant variant,
                               std::uint64_t seed) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(seed));
  return "gen-" + base_id + "-" + std::string(ToString(variant)) + "-" + buf;
}

inline Adr GenerateDetails(const Comparator& cmp, const GenerationRequest& req,
                           const DatasetD& ds, const TemplateSet& templates,
                           const ScoreTables& table, const KnowledgeBase& kb) {
  if (req.slot.is_placeholder()) throw GenerationError("snacs", "slot is still a placeholder");
  const Adr& base = SelectBase(cmp, req, ds, table);
  Ada ada = req.variant == SnacsVariant::kRandom ? FillAttributesRandom(req, base, ds)
                                                 : FillAttributes(req, base, ds, kb);
  auto it = templates.find(req.activity_type);
  if (it == templates.end() || it->second.empty()) {
    throw GenerationError("snacs", "no templates for " + std::string(ToString(req.activity_type)));
  }
  Adr out;
  out.id = GeneratedId(base.id, req.variant, req.seed);
  out.activity_type = req.activity_type;
  out.profile = req.profile;
  out.adp.introduction = RealizeIntroduction(it->second, ada, req.profile, req.seed);
  std::tie(out.adp.body, out.adp.perception) = AdjustBodyPerception(base, ada);
  out.ada = std::move(ada);
  out.provenance = Provenance{base.id, std::string(ToString(req.variant)), req.seed};
  return out;
}

}  // namespace alibi

#endif  // ALIBI_SNACS_HPP_
