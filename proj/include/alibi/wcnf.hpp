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

// Weighted partial MaxSat: problem representation, DIMACS WCNF text I/O and
// a deterministic branch-and-bound solver for desk-scale instances.

#ifndef ALIBI_WCNF_HPP_
#define ALIBI_WCNF_HPP_

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "alibi/error.hpp"

namespace alibi {

// DIMACS literal: +v / -v for variable v in [1, num_vars].
using Literal = int;
using Clause = std::vector<Literal>;

struct SoftClause {
  std::uint64_t weight = 1;
  Clause literals;

  bool operator==(const SoftClause&) const = default;
};

struct WcnfProblem {
  int num_vars = 0;
  std::vector<Clause> hard_clauses;
  std::vector<SoftClause> soft_clauses;

  std::uint64_t TotalSoftWeight() const {
    std::uint64_t total = 0;
    for (const auto& s : soft_clauses) total += s.weight;
    return total;
  }

  // Literals must reference declared variables; weights must be positive.
  void Validate() const {
    auto check = [&](const Clause& c) {
      for (Literal l : c) {
        if (l == 0 || std::abs(l) > num_vars) {
          throw Error("consistency", "literal " + std::to_string(l) +
                                         " references an undeclared variable");
        }
      }
    };
    for (const auto& c : hard_clauses) check(c);
    for (const auto& s : soft_clauses) {
      if (s.weight == 0) throw Error("consistency", "soft clause weight must be >= 1");
      check(s.literals);
    }
  }

  bool operator==(const WcnfProblem&) const = default;
};

struct Assignment {
  // values[v] for v in [1, num_vars]; index 0 unused.
  std::vector<bool> values;
  std::uint64_t cost = 0;

  bool Value(int var) const { return values[static_cast<std::size_t>(var)]; }
};

inline bool LiteralTrue(const std::vector<bool>& values, Literal l) {
  bool v = values[static_cast<std::size_t>(std::abs(l))];
  return l > 0 ? v : !v;
}

inline bool ClauseSatisfied(const std::vector<bool>& values, const Clause& c) {
  for (Literal l : c) {
    if (LiteralTrue(values, l)) return true;
  }
  return false;
}

inline bool SatisfiesHard(const WcnfProblem& p, const std::vector<bool>& values) {
  for (const auto& c : p.hard_clauses) {
    if (!ClauseSatisfied(values, c)) return false;
  }
  return true;
}

inline std::uint64_t CostOf(const WcnfProblem& p, const std::vector<bool>& values) {
  std::uint64_t cost = 0;
  for (const auto& s : p.soft_clauses) {
    if (!ClauseSatisfied(values, s.literals)) cost += s.weight;
  }
  return cost;
}

namespace wcnf_detail {

// Depth-first branch and bound. Variables are branched in ascending index
// order, true before false; hard clauses drive unit propagation and the
// weight of already-falsified soft clauses is the lower bound. Only a
// strictly cheaper model replaces the incumbent, so among optima the first
// one met (the lexicographically greatest under true > false) wins.
class BranchAndBound {
 public:
  explicit BranchAndBound(const WcnfProblem& p, bool use_soft = true)
      : p_(p), use_soft_(use_soft), value_(static_cast<std::size_t>(p.num_vars) + 1, kUnset) {}

  bool Run() {
    if (Propagate()) Search(1);
    return found_;
  }

  const std::vector<bool>& best() const { return best_values_; }
  std::uint64_t best_cost() const { return best_cost_; }

 private:
  static constexpr signed char kUnset = -1;

  // 1 satisfied, 0 falsified, -1 undecided.
  int LiteralState(Literal l) const {
    signed char v = value_[static_cast<std::size_t>(std::abs(l))];
    if (v == kUnset) return -1;
    return (l > 0) == (v == 1) ? 1 : 0;
  }

  void Assign(int var, bool value) {
    value_[static_cast<std::size_t>(var)] = value ? 1 : 0;
    trail_.push_back(var);
  }

  void Undo(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[static_cast<std::size_t>(trail_.back())] = kUnset;
      trail_.pop_back();
    }
  }

  // Returns false on conflict.
  bool Propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& c : p_.hard_clauses) {
        int undecided = 0;
        Literal unit = 0;
        bool sat = false;
        for (Literal l : c) {
          int s = LiteralState(l);
          if (s == 1) {
            sat = true;
            break;
          }
          if (s == -1) {
            ++undecided;
            unit = l;
          }
        }
        if (sat) continue;
        if (undecided == 0) return false;
        if (undecided == 1) {
          Assign(std::abs(unit), unit > 0);
          changed = true;
        }
      }
    }
    return true;
  }

  std::uint64_t LowerBound() const {
    if (!use_soft_) return 0;
    std::uint64_t lb = 0;
    for (const auto& s : p_.soft_clauses) {
      bool falsified = true;
      for (Literal l : s.literals) {
        if (LiteralState(l) != 0) {
          falsified = false;
          break;
        }
      }
      if (falsified) lb += s.weight;
    }
    return lb;
  }

  void Search(int from) {
    if (found_ && (!use_soft_ || LowerBound() >= best_cost_)) return;
    int var = from;
    while (var <= p_.num_vars && value_[static_cast<std::size_t>(var)] != kUnset) ++var;
    if (var > p_.num_vars) {
      std::uint64_t cost = LowerBound();
      if (!found_ || cost < best_cost_) {
        found_ = true;
        best_cost_ = cost;
        best_values_.assign(value_.size(), false);
        for (std::size_t v = 1; v < value_.size(); ++v) best_values_[v] = value_[v] == 1;
      }
      return;
    }
    for (bool value : {true, false}) {
      std::size_t mark = trail_.size();
      Assign(var, value);
      if (Propagate()) Search(var + 1);
      Undo(mark);
      if (found_ && !use_soft_) return;
    }
  }

  const WcnfProblem& p_;
  bool use_soft_;
  std::vector<signed char> value_;
  std::vector<int> trail_;
  bool found_ = false;
  std::uint64_t best_cost_ = std::numeric_limits<std::uint64_t>::max();
  std::vector<bool> best_values_;
};

inline bool HardSatisfiable(int num_vars, const std::vector<Clause>& clauses) {
  WcnfProblem q;
  q.num_vars = num_vars;
  q.hard_clauses = clauses;
  return BranchAndBound(q, false).Run();
}

}  // namespace wcnf_detail

// Deletion-based shrinking of the full hard set to a minimal unsatisfiable
// subset. Indices refer to p.hard_clauses.
inline std::vector<std::size_t> UnsatCore(const WcnfProblem& p) {
  std::vector<std::size_t> core;
  for (std::size_t i = 0; i < p.hard_clauses.size(); ++i) core.push_back(i);
  for (std::size_t k = 0; k < core.size();) {
    std::vector<Clause> trial;
    for (std::size_t j = 0; j < core.size(); ++j) {
      if (j != k) trial.push_back(p.hard_clauses[core[j]]);
    }
    if (!wcnf_detail::HardSatisfiable(p.num_vars, trial)) {
      core.erase(core.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      ++k;
    }
  }
  return core;
}

// Minimum-cost model of the hard clauses. Throws UnsatError when none exists.
inline Assignment Solve(const WcnfProblem& p) {
  p.Validate();
  wcnf_detail::BranchAndBound bb(p);
  if (!bb.Run()) throw UnsatError(UnsatCore(p));
  Assignment a;
  a.values = bb.best();
  a.cost = bb.best_cost();
  return a;
}

// ---------------------------------------------------------------------------
// DIMACS WCNF: "p wcnf <vars> <clauses> <top>", hard clauses carry weight top.

inline std::string ToDimacs(const WcnfProblem& p) {
  std::uint64_t top = p.TotalSoftWeight() + 1;
  std::ostringstream os;
  os << "p wcnf " << p.num_vars << ' ' << p.hard_clauses.size() + p.soft_clauses.size()
     << ' ' << top << '\n';
  for (const auto& c : p.hard_clauses) {
    os << top;
    for (Literal l : c) os << ' ' << l;
    os << " 0\n";
  }
  for (const auto& s : p.soft_clauses) {
    os << s.weight;
    for (Literal l : s.literals) os << ' ' << l;
    os << " 0\n";
  }
  return os.str();
}

inline WcnfProblem ParseDimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  WcnfProblem p;
  bool header = false;
  std::uint64_t top = 0;
  std::size_t declared = 0;
  std::string pending;
  auto fail = [](const std::string& why) -> void {
    throw Error("consistency", "malformed WCNF: " + why);
  };
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      std::istringstream hs(line);
      std::string p_tok, fmt;
      hs >> p_tok >> fmt >> p.num_vars >> declared >> top;
      if (!hs && !hs.eof()) fail("bad header '" + line + "'");
      if (fmt != "wcnf") fail("bad header '" + line + "'");
      if (top == 0) top = std::numeric_limits<std::uint64_t>::max();
      header = true;
      continue;
    }
    if (!header) fail("clause before header");
    pending += line + ' ';
  }
  if (!header) fail("missing 'p wcnf' header");
  std::istringstream cs(pending);
  std::string tok;
  while (cs >> tok) {
    bool hard = false;
    std::uint64_t weight = 0;
    if (tok == "h") {
      hard = true;
    } else {
      weight = std::stoull(tok);
      hard = weight >= top;
    }
    Clause c;
    long long lit = 0;
    bool closed = false;
    while (cs >> lit) {
      if (lit == 0) {
        closed = true;
        break;
      }
      c.push_back(static_cast<Literal>(lit));
    }
    if (!closed) fail("unterminated clause");
    if (hard) {
      p.hard_clauses.push_back(std::move(c));
    } else {
      p.soft_clauses.push_back({weight, std::move(c)});
    }
  }
  if (p.hard_clauses.size() + p.soft_clauses.size() != declared) {
    fail("clause count does not match header");
  }
  p.Validate();
  return p;
}

}  // namespace alibi

#endif  // ALIBI_WCNF_HPP_
