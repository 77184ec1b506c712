// Copyright 2026 The gamesem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gamesem/play.hpp"

#include <algorithm>
#include <set>

#include "gamesem/error.hpp"

namespace gamesem {

namespace {

constexpr std::string_view kDot = "\xC2\xB7";  // U+00B7 MIDDLE DOT

void check_move(const Arena& arena, MoveId m) {
  if (m >= arena.size()) {
    throw UnknownMove("move id " + std::to_string(m) + " is not in arena " + arena.describe());
  }
}

}  // namespace

Play extend(const Arena& arena, const Play& p, Step step) {
  Play out = p;
  Occurrence o{step.move, step.justifier, std::nullopt};
  if (arena.is_question(step.move)) o.binder = Name{static_cast<std::uint32_t>(p.size() + 1)};
  out.push_back(o);
  return out;
}

bool is_justified_sequence(const JustifiedSequence& s) {
  std::set<Name> used;
  for (const auto& o : s) {
    if (o.binder) {
      if (o.binder->is_root() || used.count(*o.binder)) return false;
    }
    if (!o.justifier.is_root()) used.insert(o.justifier);
    if (o.binder) used.insert(*o.binder);
  }
  return true;
}

bool is_play(const Arena& arena, const JustifiedSequence& s) {
  for (const auto& o : s) check_move(arena, o.move);
  if (!is_justified_sequence(s)) return false;
  std::map<Name, MoveId> bound;  // binder -> question that introduced it
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& o = s[i];
    if (o.binder.has_value() != arena.is_question(o.move)) return false;
    if (i == 0) {
      if (!arena.is_initial(o.move) || !o.justifier.is_root()) return false;
    } else {
      auto it = bound.find(o.justifier);
      if (it == bound.end() || !arena.enables(it->second, o.move)) return false;
    }
    if (o.binder) bound[*o.binder] = o.move;
  }
  return true;
}

std::vector<Step> legal_steps(const Arena& arena, const Play& p) {
  std::vector<Step> out;
  if (p.empty()) {
    for (auto m : arena.initial_moves()) out.push_back({m, kRoot});
    return out;
  }
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (!p[j].binder) continue;
    for (auto n : arena.enabled_by(p[j].move)) out.push_back({n, *p[j].binder});
  }
  return out;
}

Deletion delete_moves(const JustifiedSequence& s, const MovePredicate& removed) {
  Deletion d;
  for (const auto& o : s) {
    const Name target = d.resolve(o.justifier);
    if (!removed(o.move)) {
      d.sequence.push_back({o.move, target, o.binder});
    } else if (o.binder) {
      d.chain[*o.binder] = target;
    }
  }
  return d;
}

JustifiedSequence thread(const JustifiedSequence& s, std::size_t index) {
  if (index >= s.size()) throw NotAQuestion("thread seed is out of range");
  if (!s[index].binder) throw NotAQuestion("thread seed binds no name");
  std::set<Name> selected{*s[index].binder};
  JustifiedSequence out{s[index]};
  for (std::size_t i = index + 1; i < s.size(); ++i) {
    if (selected.count(s[i].justifier)) {
      out.push_back(s[i]);
      if (s[i].binder) selected.insert(*s[i].binder);
    }
  }
  return out;
}

JustifiedSequence rebase_root(JustifiedSequence s) {
  if (!s.empty()) s.front().justifier = kRoot;
  return s;
}

std::vector<JustifiedSequence> interleavings(const JustifiedSequence& p,
                                             const JustifiedSequence& q) {
  const auto pn = names_of(p);
  const auto qn = names_of(q);
  for (const auto& o : p) {
    if (o.binder && qn.count(*o.binder)) throw NameClash("binder " + to_string(*o.binder) + " clashes");
  }
  for (const auto& o : q) {
    if (o.binder && pn.count(*o.binder)) throw NameClash("binder " + to_string(*o.binder) + " clashes");
  }
  std::vector<JustifiedSequence> out;
  JustifiedSequence cur;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) {
    if (i == p.size() && j == q.size()) {
      out.push_back(cur);
      return;
    }
    if (i < p.size()) {
      cur.push_back(p[i]);
      go(i + 1, j);
      cur.pop_back();
    }
    if (j < q.size()) {
      cur.push_back(q[j]);
      go(i, j + 1);
      cur.pop_back();
    }
  };
  go(0, 0);
  return out;
}

std::string to_text(const Arena& arena, const JustifiedSequence& s) {
  if (s.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += kDot;
    check_move(arena, s[i].move);
    out += arena.label(s[i].move);
    out += '(';
    out += to_string(s[i].justifier);
    if (s[i].binder) {
      out += '>';
      out += to_string(*s[i].binder);
    }
    out += ')';
  }
  return out;
}

JustifiedSequence parse_sequence(const Arena& arena, std::string_view text) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t' || v.front() == '\n')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t' || v.back() == '\n' || v.back() == '\r')) v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  JustifiedSequence out;
  if (text.empty() || text == "ε") return out;
  auto parse_name = [](std::string_view v) -> Name {
    if (v == "*") return kRoot;
    if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw ParseError("bad name '" + std::string(v) + "'");
    }
    auto n = std::stoul(std::string(v));
    if (n == 0) throw ParseError("name 0 is reserved");
    return Name{static_cast<std::uint32_t>(n)};
  };
  while (!text.empty()) {
    auto cut = text.find(kDot);
    auto item = trim(text.substr(0, cut));
    text = cut == std::string_view::npos ? std::string_view{} : text.substr(cut + kDot.size());
    auto hash = item.rfind('#');
    auto open = item.rfind('(');
    if (hash == std::string_view::npos || open == std::string_view::npos || open < hash ||
        item.back() != ')') {
      throw ParseError("bad occurrence '" + std::string(item) + "'");
    }
    auto base = item.substr(0, hash);
    auto tag = item.substr(hash + 1, open - hash - 1);
    auto inner = item.substr(open + 1, item.size() - open - 2);
    Occurrence o;
    o.move = arena.at(base, tag);
    auto gt = inner.find('>');
    if (gt == std::string_view::npos) {
      o.justifier = parse_name(inner);
    } else {
      o.justifier = parse_name(inner.substr(0, gt));
      o.binder = parse_name(inner.substr(gt + 1));
    }
    out.push_back(o);
  }
  return out;
}

std::vector<Play> sorted_by_text(const Arena& arena, std::vector<Play> plays) {
  std::vector<std::pair<std::string, Play>> keyed;
  keyed.reserve(plays.size());
  for (auto& p : plays) keyed.emplace_back(to_text(arena, p), std::move(p));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
    return a.first < b.first;
  });
  std::vector<Play> out;
  out.reserve(keyed.size());
  for (auto& [_, p] : keyed) out.push_back(std::move(p));
  return out;
}

}  // namespace gamesem
