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

#include "gamesem/strategy.hpp"

#include <algorithm>

#include "gamesem/error.hpp"
#include "json.hpp"

namespace gamesem {

std::vector<Step> TableKernel::p_moves(const Play& p) const {
  auto it = table_.find(p);
  return it == table_.end() ? std::vector<Step>{} : it->second;
}

std::vector<Step> MemoKernel::p_moves(const Play& p) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(p);
    if (it != memo_.end()) return it->second;
  }
  auto steps = inner_->p_moves(p);
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.emplace(p, std::move(steps)).first->second;
}

Strategy::Strategy(ArenaPtr arena, KernelPtr kernel)
    : arena_(std::move(arena)), kernel_(std::move(kernel)), cache_(std::make_shared<Cache>()) {}

std::vector<Step> Strategy::p_moves(const Play& p) const {
  auto steps = kernel_->p_moves(p);
  for (const auto& s : steps) {
    bool ok = s.move < arena_->size() && !arena_->is_opponent(s.move);
    if (ok) {
      if (p.empty()) {
        ok = false;
      } else {
        auto j = s.justifier.value;
        ok = j >= 1 && j <= p.size() && p[j - 1].binder && arena_->enables(p[j - 1].move, s.move);
      }
    }
    if (!ok) {
      throw IllegalNextMove(describe() + ": illegal next move " +
                            (s.move < arena_->size() ? arena_->label(s.move) : std::string("?")) +
                            "(" + to_string(s.justifier) + ") after " + to_text(*arena_, p));
    }
  }
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
  return steps;
}

const PlaySet& Strategy::enumerate(std::size_t depth) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (auto it = cache_->by_depth.find(depth); it != cache_->by_depth.end()) return *it->second;
  auto& c = *cache_;
  if (!c.started) {
    c.all.insert(Play{});
    c.started = true;
    c.depth = 0;
  }
  while (c.depth < depth) {
    std::vector<Play> frontier;
    for (const auto& p : c.all) {
      if (p.size() == c.depth) frontier.push_back(p);
    }
    for (const auto& p : frontier) {
      for (auto s : o_extensions(*arena_, p)) c.all.insert(extend(*arena_, p, s));
      for (auto s : p_moves(p)) c.all.insert(extend(*arena_, p, s));
    }
    ++c.depth;
  }
  auto snapshot = std::make_unique<PlaySet>();
  for (const auto& p : c.all) {
    if (p.size() <= depth) snapshot->insert(p);
  }
  return *c.by_depth.emplace(depth, std::move(snapshot)).first->second;
}

bool Strategy::accepts(const JustifiedSequence& raw) const {
  if (!is_play(*arena_, raw)) return false;
  const Play p = canonicalize(raw);
  Play prefix;
  for (const auto& o : p) {
    const Step step{o.move, o.justifier};
    if (!arena_->is_opponent(o.move)) {
      auto steps = p_moves(prefix);
      if (!std::binary_search(steps.begin(), steps.end(), step)) return false;
    }
    prefix.push_back(o);
  }
  return true;
}

namespace {

Strategy strat_impl(const ArenaPtr& arena, const std::vector<JustifiedSequence>& generators,
                    std::string name) {
  std::unordered_map<Play, std::vector<Step>, SequenceHash> table;
  for (const auto& g : generators) {
    if (!is_play(*arena, g)) throw NotAPlay(name + ": generator " + to_text(*arena, g) + " is not a play");
    const Play p = canonicalize(g);
    Play prefix;
    for (const auto& o : p) {
      if (!arena->is_opponent(o.move)) {
        auto& v = table[prefix];
        Step s{o.move, o.justifier};
        if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(s);
      }
      prefix.push_back(o);
    }
  }
  return Strategy(arena, std::make_shared<TableKernel>(std::move(table), std::move(name)));
}

}  // namespace

Strategy strat(const ArenaPtr& arena, const std::vector<JustifiedSequence>& generators,
               std::string name) {
  return strat_impl(arena, generators, std::move(name));
}

Strategy strat(const ArenaPtr& arena, const std::vector<std::string>& generators, std::string name) {
  std::vector<JustifiedSequence> seqs;
  for (const auto& g : generators) seqs.push_back(parse_sequence(*arena, g));
  return strat_impl(arena, seqs, std::move(name));
}

Strategy strat_from_next(const ArenaPtr& arena, NextMove f, std::string name) {
  return Strategy(arena, std::make_shared<FunctionKernel>(std::move(f), std::move(name)));
}

std::vector<Step> o_extensions(const Arena& arena, const Play& p) {
  auto steps = legal_steps(arena, p);
  std::erase_if(steps, [&](const Step& s) { return !arena.is_opponent(s.move); });
  return steps;
}

namespace {

void require_same_arena(const Strategy& a, const Strategy& b) {
  if (!(*a.arena() == *b.arena())) {
    throw ArenaMismatch("strategies live on different arenas: " + a.arena()->describe() + " vs " +
                        b.arena()->describe());
  }
}

}  // namespace

bool equal_at_depth(const Strategy& a, const Strategy& b, std::size_t depth) {
  require_same_arena(a, b);
  return a.enumerate(depth) == b.enumerate(depth);
}

bool included_at_depth(const Strategy& a, const Strategy& b, std::size_t depth) {
  require_same_arena(a, b);
  const auto& x = a.enumerate(depth);
  const auto& y = b.enumerate(depth);
  return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

std::optional<Play> difference_witness(const Strategy& a, const Strategy& b, std::size_t depth) {
  require_same_arena(a, b);
  const auto& x = a.enumerate(depth);
  const auto& y = b.enumerate(depth);
  std::vector<Play> diff;
  std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(diff));
  if (diff.empty()) return std::nullopt;
  return sorted_by_text(*a.arena(), std::move(diff)).front();
}

std::vector<std::string> closure_violations(const Arena& arena, const PlaySet& plays,
                                            std::size_t depth) {
  std::vector<std::string> out;
  if (!plays.count(Play{})) out.push_back("missing the empty play");
  for (const auto& p : plays) {
    if (!is_play(arena, p)) out.push_back("not a play: " + to_text(arena, p));
    if (!is_canonical(p)) out.push_back("not canonical: " + to_text(arena, p));
    if (!p.empty()) {
      Play prefix(p.begin(), p.end() - 1);
      if (!plays.count(prefix)) out.push_back("prefix missing: " + to_text(arena, prefix));
    }
    if (p.size() < depth) {
      for (auto s : o_extensions(arena, p)) {
        auto q = extend(arena, p, s);
        if (!plays.count(q)) out.push_back("O-extension missing: " + to_text(arena, q));
      }
    }
  }
  return out;
}

std::string to_json(const Arena& arena, const PlaySet& plays, int indent) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& p : sorted_by_text(arena, {plays.begin(), plays.end()})) {
    nlohmann::json jp = nlohmann::json::array();
    for (const auto& o : p) {
      nlohmann::json rec;
      rec["move"] = arena.move(o.move).base;
      rec["tag"] = arena.move(o.move).tag;
      if (o.justifier.is_root()) {
        rec["just"] = "*";
      } else {
        rec["just"] = o.justifier.value;
      }
      rec["bind"] = o.binder ? nlohmann::json(o.binder->value) : nlohmann::json(nullptr);
      jp.push_back(std::move(rec));
    }
    doc.push_back(std::move(jp));
  }
  return doc.dump(indent);
}

}  // namespace gamesem
