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

// Small string helpers shared by the comparison and text-adjustment code.

#ifndef ALIBI_TEXT_HPP_
#define ALIBI_TEXT_HPP_

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace alibi {

inline bool IsWordChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

inline char ToLower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

// Lowercase, trimmed, inner whitespace collapsed to one space.
inline std::string NormalizeToken(std::string_view s) {
  std::string out;
  bool pending_space = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(ToLower(c));
  }
  return out;
}

inline std::string Capitalize(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

// Whole-word search. The first character matches case-insensitively, the
// rest exactly; neighbours of the match must not be alphanumeric.
inline std::size_t FindToken(std::string_view text, std::string_view needle,
                             std::size_t from = 0) {
  if (needle.empty()) return std::string_view::npos;
  for (std::size_t i = from; i + needle.size() <= text.size(); ++i) {
    if (ToLower(text[i]) != ToLower(needle[0])) continue;
    if (text.substr(i + 1, needle.size() - 1) != needle.substr(1)) continue;
    if (i > 0 && IsWordChar(text[i - 1]) && IsWordChar(needle.front())) continue;
    std::size_t end = i + needle.size();
    if (end < text.size() && IsWordChar(text[end]) && IsWordChar(needle.back())) continue;
    return i;
  }
  return std::string_view::npos;
}

inline bool ContainsToken(std::string_view text, std::string_view needle) {
  return FindToken(text, needle) != std::string_view::npos;
}

inline std::vector<std::string> SplitWords(std::string_view text) {
  std::vector<std::string> words;
  std::string cur;
  for (char c : text) {
    if (IsWordChar(c) || c == '\'') {
      cur.push_back(ToLower(c));
    } else if (!cur.empty()) {
      words.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  return words;
}

// ---------------------------------------------------------------------------
// Seeded randomness. Every generator derives its stream from a 64-bit seed
// and a stage label so independent stages never share draws.

using Rng = std::mt19937_64;

inline std::uint64_t MixSeed(std::uint64_t seed, std::string_view stage) {
  // FNV-1a over the stage label, folded through splitmix64.
  std::uint64_t h = 1469598103934665603ull;
  for (char c : stage) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::uint64_t z = seed ^ h;
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline Rng MakeRng(std::uint64_t seed, std::string_view stage) {
  return Rng(MixSeed(seed, stage));
}

inline std::size_t UniformIndex(Rng& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> dist(0, n - 1);
  return dist(rng);
}

}  // namespace alibi

#endif  // ALIBI_TEXT_HPP_
