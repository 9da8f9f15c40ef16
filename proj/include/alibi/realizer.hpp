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

// Template-based surface realization of activity introductions.
//
// Template syntax:
//   <marker>     slot filled from the attribute vector; a capitalized marker
//                name (<We>) capitalizes its fill
//   {a|b|c}      alternation, one branch chosen by the seed
//   [ ... ]      optional segment, dropped when any marker inside it has no
//                value (e.g. <with> for someone who went alone)
//
// Markers: time, day, day_part, meal, with, we, movie, restaurant, store,
// object, theater, venue, type, location.

#ifndef ALIBI_REALIZER_HPP_
#define ALIBI_REALIZER_HPP_

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "alibi/core_model.hpp"
#include "alibi/dataset.hpp"
#include "alibi/text.hpp"

namespace alibi {

// Surface words for each part of day; index 0 is the plain name, index 1
// the matching meal.
inline const std::vector<std::string>& PartOfDayWords(PartOfDay pod) {
  static const std::array<std::vector<std::string>, 5> kWords = {{
      {"morning", "breakfast"},
      {"noon", "lunch"},
      {"afternoon", "late lunch"},
      {"evening", "dinner"},
      {"night", "dinner"},
  }};
  return kWords[static_cast<std::size_t>(pod)];
}

inline std::string DayWord(const DayValue& day) {
  if (const auto* d = std::get_if<Day>(&day)) return Capitalize(std::string(ToString(*d)));
  return std::get<DayClass>(day) == DayClass::kWeekend ? "weekend" : "week";
}

enum class TimeStyle { kDayClass, kDayAndPart };
enum class WithStyle { kCollapsed, kEnumerated };

inline bool IsChildToken(const std::string& t) {
  return t == "son" || t == "daughter" || t == "kids" || t == "children";
}

inline bool IsSpouseToken(const std::string& t) { return t == "wife" || t == "husband"; }

// "wife and my son"; rendered after a literal "my" in templates.
inline std::string EnumerateCompanions(const std::vector<std::string>& companions) {
  std::string out;
  for (std::size_t i = 0; i < companions.size(); ++i) {
    if (i > 0) out += (i + 1 == companions.size()) ? " and my " : ", my ";
    out += companions[i];
  }
  return out;
}

inline std::string CompanionPhrase(const std::vector<std::string>& companions, WithStyle style) {
  if (style == WithStyle::kCollapsed) {
    bool spouse = false, child = false;
    for (const auto& c : companions) {
      spouse = spouse || IsSpouseToken(c) || c == "partner";
      child = child || IsChildToken(c);
      if (c == "family") return "family";
    }
    if (child && (spouse || companions.size() > 1)) return "family";
  }
  return EnumerateCompanions(companions);
}

inline std::string TimePhrase(const DayValue& day, PartOfDay pod, TimeStyle style) {
  const auto* d = std::get_if<Day>(&day);
  if (style == TimeStyle::kDayClass || !d) {
    if (ClassOf(day) == DayClass::kWeekend) return "weekend";
    return d ? DayWord(day) : "week";
  }
  if (pod == PartOfDay::kNoon) return DayWord(day) + " at noon";
  return DayWord(day) + " " + PartOfDayWords(pod)[0];
}

struct Template {
  std::string id;
  ActivityType activity_type = ActivityType::kSeeAMovie;
  std::string text;
};

// Values a template marker can take for one realization.
struct MarkerContext {
  const Ada* ada = nullptr;
  TimeStyle time_style = TimeStyle::kDayAndPart;
  WithStyle with_style = WithStyle::kEnumerated;

  // nullopt: marker has no value in this context. Throws on unknown names.
  std::optional<std::string> Fill(const std::string& raw) const {
    std::string name = raw;
    bool capitalize = !name.empty() && std::isupper(static_cast<unsigned char>(name[0]));
    name[0] = ToLower(name[0]);
    auto v = FillLower(name);
    if (v && capitalize) *v = Capitalize(*v);
    return v;
  }

  static bool Known(const std::string& raw) {
    static const std::set<std::string> kNames = {
        "time", "day",   "day_part", "meal",   "with", "we",   "movie",
        "restaurant", "store", "object", "theater", "venue", "type", "location"};
    std::string name = raw;
    if (!name.empty()) name[0] = ToLower(name[0]);
    return kNames.count(name) > 0;
  }

 private:
  std::optional<std::string> FillLower(const std::string& name) const {
    const Ada& a = *ada;
    if (name == "time") {
      if (!a.day || !a.part_of_day) return std::nullopt;
      return TimePhrase(*a.day, *a.part_of_day, time_style);
    }
    if (name == "day") {
      if (!a.day) return std::nullopt;
      return DayWord(*a.day);
    }
    if (name == "day_part") {
      if (!a.part_of_day) return std::nullopt;
      return PartOfDayWords(*a.part_of_day)[0];
    }
    if (name == "meal") {
      if (!a.part_of_day) return std::nullopt;
      return PartOfDayWords(*a.part_of_day)[1];
    }
    if (name == "with") {
      if (a.companions.empty()) return std::nullopt;
      return CompanionPhrase(a.companions, with_style);
    }
    if (name == "we") return a.companions.empty() ? "I" : "we";
    if (name == "movie" || name == "restaurant" || name == "store" || name == "object") {
      return a.object_name;
    }
    if (name == "theater" || name == "venue") return a.venue;
    if (name == "type") return a.object_type;
    if (name == "location") return a.location;
    throw GenerationError("snacs", "unknown template marker <" + name + ">");
  }
};

namespace realizer_detail {

// Parsed template tree.
struct Node {
  enum Kind { kText, kMarker, kAlternation, kOptional } kind = kText;
  std::string text;                       // literal or marker name
  std::vector<std::vector<Node>> branches;  // alternation branches / optional body
};

using Seq = std::vector<Node>;

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Seq Parse() {
    Seq seq = ParseSeq('\0');
    if (pos_ != s_.size()) Fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return seq;
  }

 private:
  [[noreturn]] void Fail(const std::string& why) const {
    throw GenerationError("snacs", "template syntax at offset " + std::to_string(pos_) + ": " + why);
  }

  // Reads until one of the closing characters for the enclosing construct.
  Seq ParseSeq(char closer) {
    Seq seq;
    std::string lit;
    auto flush = [&] {
      if (!lit.empty()) seq.push_back({Node::kText, lit, {}});
      lit.clear();
    };
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == closer || (closer == '}' && c == '|')) break;
      if (c == ']' || c == '}' || c == '|') Fail("unbalanced '" + std::string(1, c) + "'");
      if (c == '<') {
        flush();
        auto end = s_.find('>', pos_);
        if (end == std::string::npos) Fail("unterminated marker");
        std::string name = s_.substr(pos_ + 1, end - pos_ - 1);
        if (!MarkerContext::Known(name)) Fail("unknown marker <" + name + ">");
        seq.push_back({Node::kMarker, name, {}});
        pos_ = end + 1;
      } else if (c == '{') {
        flush();
        ++pos_;
        Node alt{Node::kAlternation, "", {}};
        while (true) {
          alt.branches.push_back(ParseSeq('}'));
          if (pos_ >= s_.size()) Fail("unterminated alternation");
          if (s_[pos_++] == '}') break;
        }
        seq.push_back(std::move(alt));
      } else if (c == '[') {
        flush();
        ++pos_;
        Node opt{Node::kOptional, "", {ParseSeq(']')}};
        if (pos_ >= s_.size()) Fail("unterminated optional segment");
        ++pos_;
        seq.push_back(std::move(opt));
      } else {
        lit.push_back(c);
        ++pos_;
      }
    }
    flush();
    return seq;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

// Whether every marker outside optional segments has a value. Alternation
// branches are checked individually; at least one must be fillable.
inline bool Fillable(const Seq& seq, const MarkerContext& ctx) {
  for (const auto& n : seq) {
    if (n.kind == Node::kMarker && !ctx.Fill(n.text)) return false;
    if (n.kind == Node::kAlternation) {
      bool any = false;
      for (const auto& b : n.branches) any = any || Fillable(b, ctx);
      if (!any) return false;
    }
  }
  return true;
}

inline void Render(const Seq& seq, const MarkerContext& ctx, Rng& rng, std::string& out) {
  for (const auto& n : seq) {
    switch (n.kind) {
      case Node::kText:
        out += n.text;
        break;
      case Node::kMarker: {
        auto v = ctx.Fill(n.text);
        if (!v) throw GenerationError("snacs", "unfillable slot marker <" + n.text + ">");
        out += *v;
        break;
      }
      case Node::kAlternation: {
        std::vector<const Seq*> ok;
        for (const auto& b : n.branches) {
          if (Fillable(b, ctx)) ok.push_back(&b);
        }
        if (ok.empty()) throw GenerationError("snacs", "no fillable alternation branch");
        Render(*ok[UniformIndex(rng, ok.size())], ctx, rng, out);
        break;
      }
      case Node::kOptional:
        if (Fillable(n.branches[0], ctx)) Render(n.branches[0], ctx, rng, out);
        break;
    }
  }
}

}  // namespace realizer_detail

inline void CheckTemplateSyntax(const std::string& text) {
  realizer_detail::Parser(text).Parse();
}

// Renders one template with explicit style choices. Alternations draw from
// `rng`. Throws GenerationError when a mandatory marker has no value.
inline std::string RenderTemplate(const Template& t, const Ada& ada, TimeStyle time,
                                  WithStyle with, Rng& rng) {
  auto seq = realizer_detail::Parser(t.text).Parse();
  MarkerContext ctx{&ada, time, with};
  std::string out;
  realizer_detail::Render(seq, ctx, rng, out);
  return out;
}

inline std::string RenderTemplate(const Template& t, const Ada& ada, TimeStyle time,
                                  WithStyle with) {
  Rng rng(0);
  return RenderTemplate(t, ada, time, with, rng);
}

inline bool TemplateFillable(const Template& t, const Ada& ada) {
  auto seq = realizer_detail::Parser(t.text).Parse();
  return realizer_detail::Fillable(seq, MarkerContext{&ada});
}

// Seeded choice of template, time style, companion style and alternations.
inline std::string RealizeIntroduction(const std::vector<Template>& templates, const Ada& ada,
                                       const Profile& /*profile*/, std::uint64_t seed) {
  std::vector<const Template*> eligible;
  for (const auto& t : templates) {
    if (TemplateFillable(t, ada)) eligible.push_back(&t);
  }
  if (eligible.empty()) {
    throw GenerationError("snacs", "unfillable slot marker: no template fits the attributes");
  }
  Rng rng = MakeRng(seed, "snacs.introduction");
  const Template& t = *eligible[UniformIndex(rng, eligible.size())];
  auto time = UniformIndex(rng, 2) == 0 ? TimeStyle::kDayClass : TimeStyle::kDayAndPart;
  auto with = UniformIndex(rng, 2) == 0 ? WithStyle::kCollapsed : WithStyle::kEnumerated;
  return RenderTemplate(t, ada, time, with, rng);
}

// ---------------------------------------------------------------------------
// Template files: one per activity type, named "<activity-type>.txt", one
// "<id>: <text>" record per line; '#' starts a comment line.

using TemplateSet = std::map<ActivityType, std::vector<Template>>;

inline constexpr std::size_t kMinTemplatesPerType = 3;

inline std::vector<Template> ParseTemplateFile(const std::string& content, ActivityType type,
                                               const std::string& file = "") {
  std::vector<Template> out;
  std::set<std::string> ids;
  std::istringstream in(content);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(": ");
    if (colon == std::string::npos || colon == 0) {
      throw DatasetError(file, lineno, "", "expected '<id>: <template>'");
    }
    Template t{line.substr(0, colon), type, line.substr(colon + 2)};
    if (!ids.insert(t.id).second) {
      throw DatasetError(file, lineno, "id", "duplicate template id '" + t.id + "'");
    }
    try {
      CheckTemplateSyntax(t.text);
    } catch (const GenerationError& e) {
      throw DatasetError(file, lineno, "text", e.what());
    }
    out.push_back(std::move(t));
  }
  if (out.size() < kMinTemplatesPerType) {
    throw DatasetError(file, std::nullopt, "", "need at least 3 templates, found " +
                                                   std::to_string(out.size()));
  }
  return out;
}

inline std::string TemplateFileName(ActivityType type) {
  return std::string(ToString(type)) + ".txt";
}

inline TemplateSet LoadTemplates(const std::string& dir) {
  TemplateSet set;
  for (auto type : AllValues<ActivityType>()) {
    auto path = (std::filesystem::path(dir) / TemplateFileName(type)).string();
    set[type] = ParseTemplateFile(ReadTextFile(path), type, path);
  }
  return set;
}

}  // namespace alibi

#endif  // ALIBI_REALIZER_HPP_
