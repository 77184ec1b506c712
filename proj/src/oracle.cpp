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

#include "gamesem/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_map>

#include "gamesem/error.hpp"
#include "gamesem/nominal.hpp"
#include "gamesem/play.hpp"

namespace gamesem::oracle {

namespace {

void plays_from(const Arena& arena, const Play& p, std::size_t depth, PlaySet& out) {
  out.insert(p);
  if (p.size() == depth) return;
  for (const auto& s : legal_steps(arena, p)) plays_from(arena, extend(arena, p, s), depth, out);
}

enum class Side { kA, kB, kC };

// The interaction arena (A ⇒ B) ⇒ C described by tag prefixes: A-moves
// start with LL, B-moves with LR, C-moves with R.
struct Setup {
  ArenaPtr arena;
  std::vector<Side> side;
  std::vector<int32_t> to_sigma;
  std::vector<int32_t> to_tau;
  std::vector<int32_t> to_result;
  std::vector<bool> sigma_seed;
  ArenaPtr result;
};

Setup setup(const ArenaPtr& sigma_arena, const ArenaPtr& tau_arena) {
  Setup s;
  s.arena = arrow(sigma_arena, tau_arena->right());
  s.result = arrow(sigma_arena->left(), tau_arena->right());
  for (MoveId x = 0; x < s.arena->size(); ++x) {
    const auto& mv = s.arena->move(x);
    const std::string& t = mv.tag;
    auto lookup = [&](const Arena& a, const std::string& tag) {
      auto m = a.find(mv.base, tag);
      if (!m) throw ArenaMismatch("oracle: no move " + mv.base + "#" + tag);
      return static_cast<int32_t>(*m);
    };
    if (t.rfind("LL", 0) == 0) {
      s.side.push_back(Side::kA);
      s.to_sigma.push_back(lookup(*sigma_arena, "L" + t.substr(2)));
      s.to_tau.push_back(-1);
      s.to_result.push_back(lookup(*s.result, "L" + t.substr(2)));
    } else if (t.rfind("LR", 0) == 0) {
      s.side.push_back(Side::kB);
      s.to_sigma.push_back(lookup(*sigma_arena, "R" + t.substr(2)));
      s.to_tau.push_back(lookup(*tau_arena, "L" + t.substr(2)));
      s.to_result.push_back(-1);
    } else {
      s.side.push_back(Side::kC);
      s.to_sigma.push_back(-1);
      s.to_tau.push_back(lookup(*tau_arena, t));
      s.to_result.push_back(lookup(*s.result, t));
    }
    s.sigma_seed.push_back(s.side.back() == Side::kB &&
                           sigma_arena->is_initial(static_cast<MoveId>(s.to_sigma.back())));
  }
  return s;
}

JustifiedSequence drop_and_map(const JustifiedSequence& p, Side drop,
                               const std::vector<Side>& side, const std::vector<int32_t>& map) {
  auto d = delete_moves(p, [&](MoveId x) { return side[x] == drop; });
  for (auto& o : d.sequence) o.move = static_cast<MoveId>(map[o.move]);
  return d.sequence;
}

// Membership of the projections touched by the last occurrence of g: the
// τ-projection unless it is an A-move, and the σ-thread it belongs to unless
// it is a C-move. The shorter prefixes were checked when they were built.
bool consistent(const Setup& s, const Membership& sigma, const Membership& tau,
                const JustifiedSequence& g) {
  const Side side = s.side[g.back().move];
  if (side != Side::kA && !tau(canonicalize(drop_and_map(g, Side::kA, s.side, s.to_tau)))) {
    return false;
  }
  if (side == Side::kC) return true;
  std::size_t i = g.size() - 1;
  while (!s.sigma_seed[g[i].move]) i = g[i].justifier.value - 1;
  auto th = drop_and_map(thread(g, i), Side::kC, s.side, s.to_sigma);
  th.front().justifier = kRoot;
  return sigma(canonicalize(th));
}

struct KeyHash {
  std::size_t operator()(const std::vector<uint32_t>& k) const {
    std::size_t h = k.size();
    for (auto x : k) h = h * 1000003u ^ x;
    return h;
  }
};

// Two interaction sequences with the same projections, annotated with the
// visible position of each occurrence, have the same consistent extensions
// and hide to the same plays; the search visits each such class once.
std::vector<uint32_t> future_key(const Setup& s, const Play& g) {
  std::vector<uint32_t> visible(g.size());
  uint32_t count = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    visible[i] = s.side[g[i].move] == Side::kB ? 0 : ++count;
  }
  std::vector<uint32_t> key;
  auto add = [&](const std::vector<std::size_t>& positions) {
    JustifiedSequence sub;
    for (auto i : positions) sub.push_back(g[i]);
    sub.front().justifier = kRoot;
    sub = canonicalize(sub);
    key.push_back(static_cast<uint32_t>(positions.size()));
    for (std::size_t k = 0; k < sub.size(); ++k) {
      key.push_back(sub[k].move);
      key.push_back(sub[k].justifier.value);
      key.push_back(visible[positions[k]]);
    }
  };
  std::vector<std::size_t> tau_positions;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (s.side[g[i].move] != Side::kA) tau_positions.push_back(i);
  }
  if (!tau_positions.empty()) add(tau_positions);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!s.sigma_seed[g[i].move]) continue;
    std::set<uint32_t> names{g[i].binder->value};
    std::vector<std::size_t> positions{i};
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!names.count(g[j].justifier.value)) continue;
      positions.push_back(j);
      if (g[j].binder) names.insert(g[j].binder->value);
    }
    add(positions);
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (s.side[g[i].move] == Side::kA) key.push_back(visible[i]);
  }
  return key;
}

struct Search {
  const Setup& s;
  const Membership& sigma;
  const Membership& tau;
  std::size_t depth;
  const CompositionOptions& options;
  PlaySet& out;
  std::unordered_map<std::vector<uint32_t>, std::size_t, KeyHash> seen;

  void explore(const Play& g, std::size_t visible, std::size_t hidden) {
    auto key = future_key(s, g);
    auto [it, fresh] = seen.emplace(std::move(key), hidden);
    if (!fresh) {
      if (it->second <= hidden) return;
      it->second = hidden;
    }
    out.insert(canonicalize(drop_and_map(g, Side::kB, s.side, s.to_result)));
    for (const auto& step : legal_steps(*s.arena, g)) {
      const bool is_hidden = s.side[step.move] == Side::kB;
      if (is_hidden ? !options.admits(visible, hidden + 1) : visible == depth) continue;
      Play next = extend(*s.arena, g, step);
      if (!consistent(s, sigma, tau, next)) continue;
      explore(next, visible + (is_hidden ? 0 : 1), hidden + (is_hidden ? 1 : 0));
    }
  }
};

}  // namespace

PlaySet brute_plays(const Arena& arena, std::size_t depth) {
  PlaySet out;
  plays_from(arena, Play{}, depth, out);
  return out;
}

PlaySet brute_compose(const ArenaPtr& sigma_arena, const Membership& sigma,
                      const ArenaPtr& tau_arena, const Membership& tau, std::size_t depth,
                      const CompositionOptions& options) {
  const Setup s = setup(sigma_arena, tau_arena);
  PlaySet out;
  Search search{s, sigma, tau, depth, options, out, {}};
  search.explore(Play{}, 0, 0);
  return out;
}

PlaySet brute_compose(const Strategy& sigma, const Strategy& tau, std::size_t depth,
                      const CompositionOptions& options) {
  return brute_compose(
      sigma.arena(), [&](const Play& p) { return sigma.accepts(p); }, tau.arena(),
      [&](const Play& p) { return tau.accepts(p); }, depth, options);
}

namespace {

std::vector<Step> sample(std::vector<Step> steps, std::size_t branching, std::mt19937_64& rng) {
  std::shuffle(steps.begin(), steps.end(), rng);
  const std::size_t cap = std::min(branching, steps.size());
  std::size_t keep = 0;
  if (cap > 0 && std::bernoulli_distribution(0.8)(rng)) {
    keep = std::uniform_int_distribution<std::size_t>(1, cap)(rng);
  }
  steps.resize(keep);
  std::sort(steps.begin(), steps.end());
  return steps;
}

}  // namespace

Strategy random_strategy(const RandomStrategySpec& spec) {
  std::mt19937_64 rng(spec.seed);
  const auto& arena = *spec.arena;
  std::unordered_map<Play, std::vector<Step>, SequenceHash> table;
  std::vector<Play> frontier{Play{}};
  for (std::size_t len = 0; len < spec.depth; ++len) {
    std::vector<Play> next;
    for (const auto& p : frontier) {
      std::vector<Step> o_steps;
      std::vector<Step> p_steps;
      for (const auto& s : legal_steps(arena, p)) {
        (arena.is_opponent(s.move) ? o_steps : p_steps).push_back(s);
      }
      auto chosen = sample(std::move(p_steps), spec.branching, rng);
      for (const auto& s : o_steps) next.push_back(extend(arena, p, s));
      for (const auto& s : chosen) next.push_back(extend(arena, p, s));
      if (!chosen.empty()) table.emplace(p, std::move(chosen));
    }
    frontier = std::move(next);
  }
  return Strategy(spec.arena,
                  std::make_shared<TableKernel>(std::move(table),
                                                "random#" + std::to_string(spec.seed)));
}

Strategy random_substrategy(const Strategy& s, std::size_t depth, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::unordered_map<Play, std::vector<Step>, SequenceHash> table;
  std::vector<Play> sorted(s.enumerate(depth).begin(), s.enumerate(depth).end());
  for (const auto& p : sorted) {
    if (p.size() >= depth) continue;
    std::vector<Step> kept;
    for (const auto& st : s.p_moves(p)) {
      if (std::bernoulli_distribution(0.6)(rng)) kept.push_back(st);
    }
    if (!kept.empty()) table.emplace(p, std::move(kept));
  }
  return Strategy(s.arena(), std::make_shared<TableKernel>(std::move(table),
                                                           "sub(" + s.describe() + ")"));
}

}  // namespace gamesem::oracle
