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

#include "gamesem/category.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "gamesem/error.hpp"

namespace gamesem {

Embedding Embedding::from_bijection(const MoveBijection& f) {
  Embedding e{f.source, f.target, {}, std::vector<int32_t>(f.target->size(), -1)};
  for (MoveId m = 0; m < f.source->size(); ++m) {
    e.forward.push_back(static_cast<int32_t>(f(m)));
    e.backward[f(m)] = static_cast<int32_t>(m);
  }
  return e;
}

Embedding Embedding::by_prefix(const ArenaPtr& source, const ArenaPtr& target,
                               const std::vector<std::pair<std::string, std::string>>& rules) {
  Embedding e{source, target, {}, std::vector<int32_t>(target->size(), -1)};
  for (MoveId m = 0; m < source->size(); ++m) {
    const auto& mv = source->move(m);
    std::optional<MoveId> image;
    for (const auto& [from, to] : rules) {
      if (mv.tag.compare(0, from.size(), from) == 0) {
        image = target->find(mv.base, to + mv.tag.substr(from.size()));
        break;
      }
    }
    if (!image) {
      throw ArenaMismatch("no image for " + source->label(m) + " in " + target->describe());
    }
    e.forward.push_back(static_cast<int32_t>(*image));
    e.backward[*image] = static_cast<int32_t>(m);
  }
  return e;
}

namespace {

std::optional<Play> pull_back(const Embedding& e, const Play& p) {
  Play out = p;
  for (auto& o : out) {
    if (e.backward[o.move] < 0) return std::nullopt;
    o.move = static_cast<MoveId>(e.backward[o.move]);
  }
  return out;
}

class EmbeddedUnionKernel : public Kernel {
 public:
  EmbeddedUnionKernel(std::vector<std::pair<Strategy, Embedding>> parts, std::string name)
      : parts_(std::move(parts)), name_(std::move(name)) {}

  std::vector<Step> p_moves(const Play& p) const override {
    std::vector<Step> out;
    for (const auto& [s, e] : parts_) {
      auto q = pull_back(e, p);
      if (!q) continue;
      for (auto st : s.p_moves(*q)) {
        st.move = static_cast<MoveId>(e.forward[st.move]);
        out.push_back(st);
      }
    }
    return out;
  }
  std::string describe() const override { return name_; }

 private:
  std::vector<std::pair<Strategy, Embedding>> parts_;
  std::string name_;
};

// Copy-cat over a partner map on moves. A P-occurrence is a copy of some
// earlier uncopied O-occurrence; when several O-occurrences qualify, every
// pairing is followed.
class CopycatKernel : public Kernel {
 public:
  CopycatKernel(ArenaPtr arena, std::vector<int32_t> partner, std::string name)
      : arena_(std::move(arena)), partner_(std::move(partner)), name_(std::move(name)) {}

  std::vector<Step> p_moves(const Play& p) const override {
    std::vector<Step> out;
    std::vector<int32_t> pair(p.size(), -1);
    search(p, 0, pair, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  std::string describe() const override { return name_; }

 private:
  // The justifier the copy of occurrence j must carry, if already available.
  std::optional<Name> copy_justifier(const Play& p, const std::vector<int32_t>& pair,
                                     std::size_t j) const {
    const Name just = p[j].justifier;
    if (just.is_root()) return Name{static_cast<uint32_t>(j + 1)};
    const int32_t partner = pair[just.value - 1];
    if (partner < 0) return std::nullopt;
    return Name{static_cast<uint32_t>(partner + 1)};
  }

  void search(const Play& p, std::size_t i, std::vector<int32_t>& pair,
              std::vector<Step>& out) const {
    if (i == p.size()) {
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (pair[j] >= 0 || !arena_->is_opponent(p[j].move) || partner_[p[j].move] < 0) continue;
        if (auto just = copy_justifier(p, pair, j)) {
          out.push_back({static_cast<MoveId>(partner_[p[j].move]), *just});
        }
      }
      return;
    }
    // Moves outside the partnered components belong to whatever kernel this
    // copy-cat is combined with.
    if (arena_->is_opponent(p[i].move) || partner_[p[i].move] < 0) {
      search(p, i + 1, pair, out);
      return;
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (pair[j] >= 0 || !arena_->is_opponent(p[j].move)) continue;
      if (partner_[p[j].move] != static_cast<int32_t>(p[i].move)) continue;
      auto just = copy_justifier(p, pair, j);
      if (!just || *just != p[i].justifier) continue;
      pair[i] = static_cast<int32_t>(j);
      pair[j] = static_cast<int32_t>(i);
      search(p, i + 1, pair, out);
      pair[i] = pair[j] = -1;
    }
  }

  ArenaPtr arena_;
  std::vector<int32_t> partner_;
  std::string name_;
};

class RelabelKernel : public Kernel {
 public:
  RelabelKernel(Strategy inner, MoveBijection f)
      : inner_(std::move(inner)), f_(std::move(f)), back_(f_.inverse()) {}

  std::vector<Step> p_moves(const Play& p) const override {
    Play q = p;
    for (auto& o : q) o.move = back_(o.move);
    auto steps = inner_.p_moves(q);
    for (auto& st : steps) st.move = f_(st.move);
    return steps;
  }
  std::string describe() const override { return inner_.describe(); }

 private:
  Strategy inner_;
  MoveBijection f_;
  MoveBijection back_;
};

}  // namespace

Strategy relabel(const Strategy& s, const MoveBijection& f) {
  if (!(*f.source == *s.arena())) {
    throw ArenaMismatch("relabeling expects " + f.source->describe() + ", got " +
                        s.arena()->describe());
  }
  return Strategy(f.target, std::make_shared<RelabelKernel>(s, f));
}

Strategy embedded_union(const ArenaPtr& arena,
                        const std::vector<std::pair<Strategy, Embedding>>& parts,
                        std::string name) {
  return Strategy(arena, std::make_shared<EmbeddedUnionKernel>(parts, std::move(name)));
}

Strategy partner_copycat(const ArenaPtr& arena,
                         const std::vector<std::pair<std::string, std::string>>& components,
                         std::string name) {
  std::vector<int32_t> partner(arena->size(), -1);
  for (const auto& [x, y] : components) {
    const auto [x0, x1] = arena->range(x);
    const auto [y0, y1] = arena->range(y);
    if (x1 - x0 != y1 - y0 || !same_shape(*arena->component(x), *arena->component(y))) {
      throw ArenaMismatch("copy-cat components " + x + " and " + y + " differ in " +
                          arena->describe());
    }
    for (MoveId k = 0; k < x1 - x0; ++k) {
      partner[x0 + k] = static_cast<int32_t>(y0 + k);
      partner[y0 + k] = static_cast<int32_t>(x0 + k);
    }
  }
  return Strategy(arena, std::make_shared<MemoKernel>(
                             std::make_shared<CopycatKernel>(arena, std::move(partner), name)));
}

Strategy copycat(const ArenaPtr& a) {
  return partner_copycat(arrow(a, a), {{"L", "R"}}, "κ[" + a->describe() + "]");
}

Strategy saturate_strategy(const Strategy& s) {
  const auto& arena = s.arena();
  if (arena->shape() != Arena::Shape::kArrow) {
    throw ArenaMismatch("saturation needs an arrow arena, got " + arena->describe());
  }
  return compose(compose(copycat(arena->left()), s), copycat(arena->right()));
}

Morphism saturate(const Strategy& s) {
  auto sat = saturate_strategy(s);
  return {s.arena()->left(), s.arena()->right(), std::move(sat)};
}

Morphism identity(const ArenaPtr& a) { return {a, a, copycat(a)}; }

Morphism compose(const Morphism& f, const Morphism& g) {
  return {f.source, g.target, compose(f.strategy, g.strategy)};
}

namespace {

// Searches for a play u of σ into which the P-moves of `target` (and some of
// its O-moves) embed so that no O-move of u precedes a P-move of `target`
// unless it does so in `target` too. The O-moves left out can be appended
// after u and the extra P-moves of u deferred, so `target` is a prefix of a
// permutation of a play of σ. At most `slack` extra P-moves are tried.
class ClosureSearch {
 public:
  ClosureSearch(const Strategy& s, const Play& target, std::size_t slack)
      : s_(s), arena_(*s.arena()), target_(target), slack_(slack), pos_(target.size(), -1) {
    for (const auto& o : target_) p_left_ += arena_.is_opponent(o.move) ? 0 : 1;
  }

  bool run() { return dfs(Play{}, 0); }

 private:
  std::optional<Name> mapped(Name j) const {
    if (j.is_root()) return kRoot;
    int32_t at = pos_[j.value - 1];
    if (at < 0) return std::nullopt;
    return Name{static_cast<uint32_t>(at + 1)};
  }

  bool dfs(const Play& u, std::size_t extra) {
    if (p_left_ == 0) return true;
    std::size_t first_p = target_.size();
    int64_t last_o = -1;
    for (std::size_t i = 0; i < target_.size(); ++i) {
      bool opp = arena_.is_opponent(target_[i].move);
      if (!opp && pos_[i] < 0) first_p = std::min(first_p, i);
      if (opp && pos_[i] >= 0) last_o = static_cast<int64_t>(i);
    }
    for (std::size_t j = 0; j < first_p; ++j) {
      if (pos_[j] >= 0 || !arena_.is_opponent(target_[j].move)) continue;
      auto just = mapped(target_[j].justifier);
      if (!just) continue;
      pos_[j] = static_cast<int32_t>(u.size());
      bool found = dfs(extend(arena_, u, {target_[j].move, *just}), extra);
      pos_[j] = -1;
      if (found) return true;
    }
    for (const Step& step : s_.p_moves(u)) {
      for (std::size_t i = static_cast<std::size_t>(last_o + 1); i < target_.size(); ++i) {
        if (pos_[i] >= 0 || target_[i].move != step.move) continue;
        if (arena_.is_opponent(target_[i].move)) continue;
        auto just = mapped(target_[i].justifier);
        if (!just || *just != step.justifier) continue;
        pos_[i] = static_cast<int32_t>(u.size());
        --p_left_;
        bool found = dfs(extend(arena_, u, step), extra);
        ++p_left_;
        pos_[i] = -1;
        if (found) return true;
      }
      if (extra < slack_ && dfs(extend(arena_, u, step), extra + 1)) return true;
    }
    return false;
  }

  const Strategy& s_;
  const Arena& arena_;
  const Play& target_;
  std::size_t slack_;
  std::vector<int32_t> pos_;
  std::size_t p_left_ = 0;
};

}  // namespace

bool in_permutation_closure(const Strategy& s, const Play& p, std::size_t slack) {
  return ClosureSearch(s, p, slack).run();
}

PlaySet permutation_closure(const Strategy& s, std::size_t depth, std::size_t slack) {
  const auto& arena = *s.arena();
  PlaySet out{Play{}};
  std::vector<Play> frontier{Play{}};
  for (std::size_t len = 0; len < depth; ++len) {
    std::vector<Play> next;
    for (const auto& p : frontier) {
      for (const Step& step : legal_steps(arena, p)) {
        Play q = extend(arena, p, step);
        if (!arena.is_opponent(step.move) && !in_permutation_closure(s, q, slack)) continue;
        out.insert(q);
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

bool equivalent(const Strategy& a, const Strategy& b, std::size_t depth) {
  return equal_at_depth(saturate_strategy(a), saturate_strategy(b), depth);
}

bool equivalent(const Morphism& a, const Morphism& b, std::size_t depth) {
  return equal_at_depth(a.strategy, b.strategy, depth);
}

Morphism terminal(const ArenaPtr& a) {
  auto i = Arena::empty();
  return {a, i, strat(arrow(a, i), std::vector<JustifiedSequence>{}, "!")};
}

Strategy pair_strategies(const Strategy& s1, const Strategy& s0) {
  const auto& a1 = s1.arena();
  const auto& a0 = s0.arena();
  if (a1->shape() != Arena::Shape::kArrow || a0->shape() != Arena::Shape::kArrow ||
      !(*a1->left() == *a0->left())) {
    throw SourceMismatch("pairing needs a common source: " + a1->describe() + " and " +
                         a0->describe());
  }
  auto arena = arrow(a1->left(), product(a1->right(), a0->right()));
  return embedded_union(arena,
                        {{s1, Embedding::by_prefix(a1, arena, {{"L", "L"}, {"R", "RL"}})},
                         {s0, Embedding::by_prefix(a0, arena, {{"L", "L"}, {"R", "RR"}})}},
                        "<" + s1.describe() + "," + s0.describe() + ">");
}

Morphism pair(const Morphism& f1, const Morphism& f0) {
  auto s = pair_strategies(f1.strategy, f0.strategy);
  return {f1.source, product(f1.target, f0.target), std::move(s)};
}

Strategy proj_strategy(int i, const ArenaPtr& a1, const ArenaPtr& a0) {
  auto target = i == 1 ? a1 : a0;
  auto arena = arrow(product(a1, a0), target);
  return partner_copycat(arena, {{i == 1 ? "LL" : "LR", "R"}}, "π" + std::to_string(i));
}

Morphism proj(int i, const ArenaPtr& a1, const ArenaPtr& a0) {
  return {product(a1, a0), i == 1 ? a1 : a0, proj_strategy(i, a1, a0)};
}

Strategy eval_strategy(const ArenaPtr& a, const ArenaPtr& b) {
  auto arena = arrow(product(arrow(a, b), a), b);
  return partner_copycat(arena, {{"LLL", "LR"}, {"LLR", "R"}}, "ev");
}

Morphism eval_morphism(const ArenaPtr& a, const ArenaPtr& b) {
  return {product(arrow(a, b), a), b, saturate_strategy(eval_strategy(a, b))};
}

namespace {

void require_uncurried(const ArenaPtr& arena) {
  if (arena->shape() != Arena::Shape::kArrow ||
      arena->left()->shape() != Arena::Shape::kProduct) {
    throw ArenaMismatch("transpose needs A × B ⇒ C, got " + arena->describe());
  }
}

void require_curried(const ArenaPtr& arena) {
  if (arena->shape() != Arena::Shape::kArrow ||
      arena->right()->shape() != Arena::Shape::kArrow) {
    throw ArenaMismatch("untranspose needs A ⇒ B ⇒ C, got " + arena->describe());
  }
}

}  // namespace

Strategy transpose_strategy(const Strategy& s) {
  const auto& arena = s.arena();
  require_uncurried(arena);
  return relabel(s, curry_iso(arena->left()->left(), arena->left()->right(), arena->right()));
}

Strategy untranspose_strategy(const Strategy& s) {
  const auto& arena = s.arena();
  require_curried(arena);
  return relabel(
      s, curry_iso(arena->left(), arena->right()->left(), arena->right()->right()).inverse());
}

Morphism transpose(const Morphism& f) {
  auto s = transpose_strategy(f.strategy);
  const auto& src = f.source;
  return {src->left(), arrow(src->right(), f.target), std::move(s)};
}

Morphism untranspose(const Morphism& f) {
  auto s = untranspose_strategy(f.strategy);
  return {product(f.source, f.target->left()), f.target->right(), std::move(s)};
}

}  // namespace gamesem
