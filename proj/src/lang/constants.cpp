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


#include "gamesem/lang/constants.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <optional>
#include <set>

#include "gamesem/category.hpp"
#include "gamesem/error.hpp"

namespace gamesem::lang {
namespace {

ArenaPtr nat(int k) { return base_arena(BaseKind::kNat, k); }
ArenaPtr boolean() { return base_arena(BaseKind::kBool); }
ArenaPtr com() { return base_arena(BaseKind::kCom); }

std::optional<int> apply(std::string_view op, int m, int n) {
  if (op == "+") return m + n;
  if (op == "-") return m >= n ? std::optional<int>(m - n) : std::nullopt;
  if (op == "*" || op == "&&") return m * n;
  if (op == "/") return n != 0 ? std::optional<int>(m / n) : std::nullopt;
  return std::nullopt;
}

// q·q₁·m₁·q₂·n₂·(m⊛n), restricted to results ≤ k; lazy × skips q₂ on 0.
Strategy arith(std::string_view op, int k) {
  auto a = arrow(nat(k), arrow(nat(k), nat(k)));
  std::vector<JustifiedSequence> gens;
  for (int m = 0; m <= k; ++m) {
    if (op == "&&" && m == 0) {
      gens.push_back(PlayBuilder(a).add("q", "RR", 0).add("q", "L", 1).add("0", "L", 2).add("0", "RR", 1).play());
      continue;
    }
    for (int n = 0; n <= k; ++n) {
      auto p = apply(op, m, n);
      if (!p || *p > k) continue;
      gens.push_back(PlayBuilder(a)
                         .add("q", "RR", 0)
                         .add("q", "L", 1)
                         .add(std::to_string(m), "L", 2)
                         .add("q", "RL", 1)
                         .add(std::to_string(n), "RL", 4)
                         .add(std::to_string(*p), "RR", 1)
                         .play());
    }
  }
  return strat(a, gens, std::string("σ[") + std::string(op) + "]");
}

Strategy choice(const ArenaPtr& ground, std::string name) {
  std::vector<JustifiedSequence> gens;
  for (const auto& v : answers(*ground)) gens.push_back(PlayBuilder(ground).add("q", "", 0).add(v, "", 1).play());
  return strat(ground, gens, std::move(name));
}

Strategy par() {
  auto a = arrow(com(), arrow(com(), com()));
  std::vector<JustifiedSequence> gens;
  // Positions 2..5 hold the two threads; bit i of mask marks slot i as the first thread's.
  for (int mask = 0; mask < 16; ++mask) {
    if (__builtin_popcount(mask) != 2) continue;
    PlayBuilder b(a);
    b.add("q", "RR", 0);
    std::size_t q_pos[2] = {0, 0};
    bool asked[2] = {false, false};
    for (int slot = 0; slot < 4; ++slot) {
      int t = (mask >> slot) & 1;
      const char* tag = t ? "L" : "RL";
      if (!asked[t]) {
        b.add("q", tag, 1);
        q_pos[t] = b.size();
        asked[t] = true;
      } else {
        b.add("a", tag, q_pos[t]);
      }
    }
    b.add("a", "RR", 1);
    gens.push_back(b.play());
  }
  return strat(a, gens, "σ[par]");
}

Strategy run() {
  auto a = arrow(com(), com());
  return strat(a, {PlayBuilder(a).add("q", "R", 0).add("q", "L", 1).add("a", "R", 1).add("a", "L", 2).play()},
               "σ[run]");
}

Strategy catcher(int k) {
  auto a = arrow(arrow(com(), nat(k)), base_arena(BaseKind::kOptNat, k));
  std::vector<JustifiedSequence> gens;
  for (int n = 0; n <= k; ++n) {
    auto v = std::to_string(n);
    gens.push_back(PlayBuilder(a).add("q", "R", 0).add("q", "LR", 1).add(v, "LR", 2).add(v, "R", 1).play());
  }
  gens.push_back(PlayBuilder(a).add("q", "R", 0).add("q", "LR", 1).add("q", "LL", 2).add("⦶", "R", 1).play());
  return strat(a, gens, "σ[catch]");
}

Strategy angel() {
  auto a = arrow(product(com(), com()), com());
  return strat(a,
               {PlayBuilder(a).add("q", "R", 0).add("q", "LL", 1).add("a", "LL", 2).add("a", "R", 1).play(),
                PlayBuilder(a).add("q", "R", 0).add("q", "LR", 1).add("a", "LR", 2).add("a", "R", 1).play()},
               "σ[pi]");
}

// q′·q·(q₁a₁q₂a₂)*·a·a′ on (sem ⇒ com) ⇒ com, as a next-move function that
// stalls as soon as O leaves the pattern.
Strategy semaphore() {
  auto a = arrow(arrow(base_arena(BaseKind::kSem), com()), com());
  const MoveId q_res = a->at("q", "R"), a_res = a->at("a", "R");
  const MoveId q_body = a->at("q", "LR"), a_body = a->at("a", "LR");
  const MoveId q_grab = a->at("q", "LLL"), a_grab = a->at("a", "LLL");
  const MoveId q_rel = a->at("q", "LLR"), a_rel = a->at("a", "LLR");
  NextMove next = [=](const Play& p) -> std::vector<Step> {
    if (p.empty() || p[0].move != q_res) return {};
    if (p.size() == 1) return {{q_body, Name{1}}};
    if (p[1].move != q_body) return {};
    enum { kIdle, kGrabbing, kHeld, kReleasing, kDone, kOver } state = kIdle;
    for (std::size_t i = 2; i < p.size(); ++i) {
      const auto& o = p[i];
      bool from_body = o.justifier == Name{2};
      if (state == kIdle && o.move == q_grab && from_body) {
        state = kGrabbing;
      } else if (state == kGrabbing && o.move == a_grab) {
        state = kHeld;
      } else if (state == kHeld && o.move == q_rel && from_body) {
        state = kReleasing;
      } else if (state == kReleasing && o.move == a_rel) {
        state = kIdle;
      } else if (state == kIdle && o.move == a_body) {
        state = kDone;
      } else if (state == kDone && o.move == a_res) {
        state = kOver;
      } else {
        return {};
      }
    }
    Name last{static_cast<std::uint32_t>(p.size())};
    switch (state) {
      case kGrabbing: return {{a_grab, last}};
      case kReleasing: return {{a_rel, last}};
      case kDone: return {{a_res, Name{1}}};
      default: return {};
    }
  };
  return strat_from_next(a, next, "σ[sem]");
}

}  // namespace

PlayBuilder& PlayBuilder::add(std::string_view base, std::string_view tag, std::size_t justifier) {
  MoveId m = arena_->at(base, tag);
  Occurrence o;
  o.move = m;
  o.justifier = Name{static_cast<std::uint32_t>(justifier)};
  if (arena_->is_question(m)) o.binder = Name{static_cast<std::uint32_t>(play_.size() + 1)};
  play_.push_back(o);
  return *this;
}

std::vector<std::string> answers(const Arena& ground) {
  std::vector<std::string> out;
  for (MoveId m = 0; m < ground.size(); ++m) {
    if (!ground.is_question(m)) out.push_back(ground.move(m).base);
  }
  return out;
}

Strategy value_strategy(const ArenaPtr& ground, std::string_view answer) {
  return strat(ground, {PlayBuilder(ground).add("q", "", 0).add(answer, "", 1).play()},
               "σ[" + std::string(answer) + "]");
}

Strategy seq_strategy(const ArenaPtr& first, const ArenaPtr& second) {
  auto a = arrow(first, arrow(second, second));
  std::vector<JustifiedSequence> gens;
  for (const auto& m : answers(*first)) {
    for (const auto& n : answers(*second)) {
      gens.push_back(PlayBuilder(a)
                         .add("q", "RR", 0)
                         .add("q", "L", 1)
                         .add(m, "L", 2)
                         .add("q", "RL", 1)
                         .add(n, "RL", 4)
                         .add(n, "RR", 1)
                         .play());
    }
  }
  return strat(a, gens, "σ[seq]");
}

Strategy if_strategy(const ArenaPtr& branch) {
  auto a = arrow(boolean(), arrow(branch, arrow(branch, branch)));
  std::vector<JustifiedSequence> gens;
  for (const auto& n : answers(*branch)) {
    gens.push_back(PlayBuilder(a)
                       .add("q", "RRR", 0)
                       .add("q", "L", 1)
                       .add("tt", "L", 2)
                       .add("q", "RL", 1)
                       .add(n, "RL", 4)
                       .add(n, "RRR", 1)
                       .play());
    gens.push_back(PlayBuilder(a)
                       .add("q", "RRR", 0)
                       .add("q", "L", 1)
                       .add("ff", "L", 2)
                       .add("q", "RRL", 1)
                       .add(n, "RRL", 4)
                       .add(n, "RRR", 1)
                       .play());
  }
  return strat(a, gens, "σ[if]");
}

Strategy cell_strategy(int k, const ArenaPtr& result) {
  ArenaPtr t = result ? result : com();
  auto a = arrow(arrow(base_arena(BaseKind::kVar, k), t), t);
  auto cc = partner_copycat(a, {{"LR", "R"}}, "cc");
  const MoveId rd = a->range("LLL").first;
  const MoveId arg = a->range("LLRL").first;
  const MoveId asg = a->range("LLRR").first;
  const MoveId top = static_cast<MoveId>(k);
  NextMove next = [=](const Play& p) -> std::vector<Step> {
    std::vector<Step> out = cc.p_moves(p);
    std::set<std::size_t> reads, writes_asked;
    std::deque<std::pair<std::size_t, int>> writes;  // (asg position, value)
    std::vector<std::size_t> asked_by(p.size() + 1, 0);
    int value = 0;
    for (std::size_t i = 1; i <= p.size(); ++i) {
      MoveId m = p[i - 1].move;
      std::size_t j = p[i - 1].justifier.value;
      if (m == rd) {
        reads.insert(i);
      } else if (m > rd && m <= rd + 1 + top) {
        reads.erase(j);
        value = static_cast<int>(m - rd - 1);
      } else if (m == asg) {
        writes_asked.insert(i);
      } else if (m == arg) {
        writes_asked.erase(j);
        asked_by[i] = j;
      } else if (m > arg && m <= arg + 1 + top) {
        writes.emplace_back(asked_by[j], static_cast<int>(m - arg - 1));
      } else if (m > asg && m <= asg + 1 + top) {
        auto it = std::find_if(writes.begin(), writes.end(), [&](const auto& w) { return w.first == j; });
        if (it != writes.end()) writes.erase(it);
        value = static_cast<int>(m - asg - 1);
      }
    }
    auto name = [](std::size_t i) { return Name{static_cast<std::uint32_t>(i)}; };
    for (auto r : reads) out.push_back({static_cast<MoveId>(rd + 1 + value), name(r)});
    for (auto g : writes_asked) out.push_back({arg, name(g)});
    for (const auto& [g, v] : writes) out.push_back({static_cast<MoveId>(asg + 1 + v), name(g)});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  return strat_from_next(a, next, "σ[new]");
}

Strategy uncurry(const Strategy& s, int arity) {
  Strategy out = s;
  for (int i = 1; i < arity; ++i) out = untranspose_strategy(out);
  return out;
}

std::vector<std::string> constant_names() {
  return {"+",    "-",   "*",   "/",      "&&",     "seq",  "if",   "chooseb", "flip",    "choosen", "omega",
          "skip", "tt",  "ff",  "par",    "run",    "catch", "new", "newsem",  "asg",     "der",     "grab",
          "release", "pi"};
}

Strategy constant_strategy(std::string_view name, int k) {
  if (k < 0) throw UnknownConstant("negative natural-number bound");
  if (name == "+" || name == "-" || name == "*" || name == "/" || name == "&&") return arith(name, k);
  if (name == "seq") return seq_strategy(nat(k), nat(k));
  if (name == "if") return if_strategy(nat(k));
  if (name == "chooseb" || name == "flip") return choice(boolean(), "σ[" + std::string(name) + "]");
  if (name == "choosen") return choice(nat(k), "σ[choosen]");
  if (name == "omega") return strat(com(), {PlayBuilder(com()).add("q", "", 0).play()}, "σ[omega]");
  if (name == "skip") return value_strategy(com(), "a");
  if (name == "tt" || name == "ff") return value_strategy(boolean(), name);
  if (!name.empty() && std::all_of(name.begin(), name.end(), [](char c) { return std::isdigit(c); })) {
    if (name.size() > 9 || std::stoi(std::string(name)) > k) {
      throw UnknownConstant("numeral " + std::string(name) + " exceeds the bound " + std::to_string(k));
    }
    return value_strategy(nat(k), name);
  }
  if (name == "par") return par();
  if (name == "run") return run();
  if (name == "catch") return catcher(k);
  if (name == "new") return cell_strategy(k);
  if (name == "newsem") return semaphore();
  if (name == "asg") {
    auto a = arrow(base_arena(BaseKind::kVar, k), arrow(nat(k), nat(k)));
    return partner_copycat(a, {{"LRR", "RR"}, {"LRL", "RL"}}, "σ[asg]");
  }
  if (name == "der") {
    return partner_copycat(arrow(base_arena(BaseKind::kVar, k), nat(k)), {{"LL", "R"}}, "σ[der]");
  }
  if (name == "grab" || name == "release") {
    return partner_copycat(arrow(base_arena(BaseKind::kSem), com()), {{name == "grab" ? "LL" : "LR", "R"}},
                           "σ[" + std::string(name) + "]");
  }
  if (name == "pi") return angel();
  throw UnknownConstant("unknown constant '" + std::string(name) + "'");
}

}  // namespace gamesem::lang
