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

// K-nearest-neighbour activity replacement (KAR): ranks the crowd activity
// records against a profile and a placeholder slot, then picks the
// replacement name by argmax (K=1) or by the most frequent name among the
// top eleven (K=11).

#ifndef ALIBI_KAR_HPP_
#define ALIBI_KAR_HPP_

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "alibi/core_model.hpp"
#include "alibi/similarity.hpp"
#include "alibi/text.hpp"

namespace alibi {

enum class KarVariant { kK1, kK11, kRandom };

template <>
struct EnumNames<KarVariant> {
  static constexpr std::string_view kLabel = "kar";
  static constexpr std::array<std::string_view, 3> kNames = {"k1", "k11", "random"};
};

inline constexpr std::size_t kK11Neighbours = 11;

struct RankedRecord {
  const ActivityRecord* record = nullptr;
  int compatibility = 0;
  std::size_t rank = 0;
};

using Ranking = std::vector<RankedRecord>;

// Scores every record (minus excluded names) and sorts by compatibility
// descending, ties by id ascending.
inline Ranking RankRecords(const Comparator& cmp, const Profile& p,
                           const ActivityInstance& slot, const DatasetA& ds,
                           const ScoreTables& table,
                           const std::set<std::string>& excluded = {}) {
  if (!slot.is_placeholder()) {
    throw Error("kar", "slot '" + slot.name + "' is not a placeholder");
  }
  SlotQuery query = QueryOf(slot);
  Ranking ranking;
  for (const auto& ar : ds.activity_records) {
    if (excluded.count(ar.name)) continue;
    ranking.push_back({&ar, KarCompatibility(KarSimilarityVector(cmp, p, query, ar), table), 0});
  }
  if (ranking.empty()) throw Error("kar", "no activity records to rank");
  std::sort(ranking.begin(), ranking.end(), [](const RankedRecord& a, const RankedRecord& b) {
    if (a.compatibility != b.compatibility) return a.compatibility > b.compatibility;
    return a.record->id < b.record->id;
  });
  for (std::size_t i = 0; i < ranking.size(); ++i) ranking[i].rank = i;
  return ranking;
}

inline const ActivityRecord& SelectK1(const Ranking& ranking) {
  if (ranking.empty()) throw Error("kar", "empty ranking");
  return *ranking.front().record;
}

// Mode of the activity names among the top min(11, n) records. Frequency
// ties go to the higher best compatibility, then to the smaller name. The
// returned record is the best-ranked one bearing the winning name.
inline const ActivityRecord& SelectK11(const Ranking& ranking, std::uint64_t /*seed*/ = 0) {
  if (ranking.empty()) throw Error("kar", "empty ranking");
  std::size_t k = std::min(kK11Neighbours, ranking.size());
  struct Tally {
    std::size_t count = 0;
    int best = 0;
    std::size_t first = 0;
  };
  std::map<std::string, Tally> tally;
  for (std::size_t i = 0; i < k; ++i) {
    auto [it, fresh] = tally.try_emplace(ranking[i].record->name);
    if (fresh) {
      it->second.best = ranking[i].compatibility;
      it->second.first = i;
    }
    ++it->second.count;
  }
  auto winner = tally.begin();
  for (auto it = std::next(tally.begin()); it != tally.end(); ++it) {
    const Tally& a = it->second;
    const Tally& w = winner->second;
    if (a.count > w.count || (a.count == w.count && a.best > w.best)) winner = it;
  }
  return *ranking[winner->second.first].record;
}

// Replaces the placeholder at `index` by a named activity. The slot (day,
// hours, location, participants) is kept; only the name changes.
inline Scenario ReplaceActivity(const Comparator& cmp, const Scenario& s, std::size_t index,
                                KarVariant variant, const DatasetA& ds,
                                const ScoreTables& table, std::uint64_t seed,
                                const std::set<std::string>& excluded = {}) {
  if (index >= s.entries.size() || !s.entries[index].instance.is_placeholder()) {
    throw Error("kar", "entry " + std::to_string(index) + " is not a placeholder");
  }
  Scenario out = s;
  auto& slot = out.entries[index].instance;
  switch (variant) {
    case KarVariant::kK1:
      slot.name = SelectK1(RankRecords(cmp, s.subject, slot, ds, table, excluded)).name;
      break;
    case KarVariant::kK11:
      slot.name = SelectK11(RankRecords(cmp, s.subject, slot, ds, table, excluded), seed).name;
      break;
    case KarVariant::kRandom: {
      std::vector<std::string> pool;
      for (const auto& name : ds.activity_vocabulary) {
        if (!excluded.count(name)) pool.push_back(name);
      }
      if (pool.empty()) throw Error("kar", "activity vocabulary is empty");
      Rng rng = MakeRng(seed, "kar.random." + std::to_string(index));
      slot.name = pool[UniformIndex(rng, pool.size())];
      break;
    }
  }
  out.entries[index].details.reset();
  return out;
}

}  // namespace alibi

#endif  // ALIBI_KAR_HPP_
