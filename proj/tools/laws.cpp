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


#include "laws.hpp"

#include <chrono>
#include <random>
#include <vector>

#include "gamesem/oracle.hpp"

namespace gamesem::tools {

namespace {

Strategy drop_target_answers(const Strategy& s) {
  auto arena = s.arena();
  return strat_from_next(
      arena,
      [s, arena](const Play& p) {
        std::vector<Step> kept;
        for (auto st : s.p_moves(p)) {
          if (arena->is_question(st.move) || arena->move(st.move).tag[0] != 'R') kept.push_back(st);
        }
        return kept;
      },
      s.describe() + "-without-answers");
}

class Runner {
 public:
  Runner(const Kit& kit, const LawConfig& config, std::ostream& out)
      : kit_(kit), cfg_(config), out_(out), rng_(config.seed) {}

  std::optional<LawFailure> all() {
    using Suite = std::optional<LawFailure> (Runner::*)();
    const std::vector<std::pair<const char*, Suite>> suites{
        {"associativity", &Runner::associativity},
        {"monotonicity", &Runner::monotonicity},
        {"idempotence", &Runner::idempotence},
        {"saturation-closure", &Runner::saturation_closure},
        {"pairing-projection", &Runner::pairing},
        {"beta", &Runner::beta},
    };
    for (const auto& [name, suite] : suites) {
      checks_ = 0;
      auto t0 = std::chrono::steady_clock::now();
      auto failure = (this->*suite)();
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      out_ << (failure ? "FAIL " : "ok   ") << name << ": " << checks_ << " checks, " << secs << "s" << std::endl;
      if (failure) {
        failure->suite = name;
        return failure;
      }
    }
    return std::nullopt;
  }

 private:
  ArenaPtr pick(bool with_arrow) {
    static const std::vector<ArenaPtr> pool{base_arena(BaseKind::kUnit), base_arena(BaseKind::kBool),
                                            arrow(base_arena(BaseKind::kUnit), base_arena(BaseKind::kUnit))};
    return pool[rng_() % (with_arrow ? 3 : 2)];
  }

  Strategy random(const ArenaPtr& a, std::size_t depth, std::size_t branching) {
    return oracle::random_strategy({a, depth, rng_(), branching});
  }

  Strategy saturated(const Strategy& s) {
    return compose(compose(kit_.copycat(s.arena()->left()), s), kit_.copycat(s.arena()->right()));
  }

  // Compares two strategies; on a difference returns the separating play.
  std::optional<LawFailure> same(const Strategy& a, const Strategy& b, const std::string& what) {
    ++checks_;
    if (auto w = difference_witness(a, b, cfg_.depth)) {
      return LawFailure{"", what, to_text(*a.arena(), *w)};
    }
    return std::nullopt;
  }

  std::optional<LawFailure> included(const Strategy& a, const Strategy& b, const std::string& what) {
    ++checks_;
    for (const auto& p : a.enumerate(cfg_.depth)) {
      if (!b.accepts(p)) return LawFailure{"", what, to_text(*a.arena(), p)};
    }
    return std::nullopt;
  }

  std::string nth(std::size_t i) const { return "case " + std::to_string(i); }

  std::optional<LawFailure> associativity() {
    for (std::size_t i = 0; i < cfg_.cases; ++i) {
      auto a = pick(true), b = pick(true), c = pick(true), d = pick(true);
      auto s = random(arrow(a, b), 3, 1), t = random(arrow(b, c), 3, 1), u = random(arrow(c, d), 3, 1);
      if (auto f = same(compose(compose(s, t), u), compose(s, compose(t, u)), nth(i))) return f;
    }
    return std::nullopt;
  }

  std::optional<LawFailure> monotonicity() {
    for (std::size_t i = 0; i < cfg_.cases; ++i) {
      auto a = pick(true), b = pick(true), c = pick(true);
      auto big = random(arrow(a, b), 3, 2);
      auto small = oracle::random_substrategy(big, 3, rng_());
      auto t = random(arrow(b, c), 3, 2), u = random(arrow(c, a), 3, 2);
      if (auto f = included(compose(small, t), compose(big, t), nth(i) + ", right context")) return f;
      if (auto f = included(compose(u, small), compose(u, big), nth(i) + ", left context")) return f;
    }
    return std::nullopt;
  }

  std::optional<LawFailure> idempotence() {
    const auto unit = base_arena(BaseKind::kUnit);
    for (auto a : {unit, base_arena(BaseKind::kBool), base_arena(BaseKind::kNat, 2), arrow(unit, unit)}) {
      auto cc = kit_.copycat(a);
      if (auto f = same(compose(cc, cc), cc, "copy-cat on " + a->describe())) return f;
    }
    return std::nullopt;
  }

  std::optional<LawFailure> saturation_closure() {
    for (std::size_t i = 0; i < cfg_.cases; ++i) {
      auto s = random(arrow(pick(false), pick(false)), 3, 2);
      auto sat = saturated(s);
      if (auto f = included(s, sat, nth(i) + ", extensive")) return f;
      if (auto f = same(saturated(sat), sat, nth(i) + ", idempotent")) return f;
    }
    return std::nullopt;
  }

  std::optional<LawFailure> pairing() {
    for (std::size_t i = 0; i < cfg_.cases; ++i) {
      auto c = pick(false), a1 = pick(false), a0 = pick(false);
      auto f1 = saturate(random(arrow(c, a1), 3, 2));
      auto f0 = saturate(random(arrow(c, a0), 3, 2));
      auto both = pair(f1, f0);
      Morphism p1{both.target, a1, kit_.proj(1, a1, a0)};
      Morphism p0{both.target, a0, kit_.proj(0, a1, a0)};
      if (auto f = same(compose(both, p1).strategy, f1.strategy, nth(i) + ", first projection")) return f;
      if (auto f = same(compose(both, p0).strategy, f0.strategy, nth(i) + ", second projection")) return f;
    }
    return std::nullopt;
  }

  std::optional<LawFailure> beta() {
    for (std::size_t i = 0; i < cfg_.cases; ++i) {
      auto c = pick(false), a = pick(false), b = pick(false);
      auto f = saturate(random(arrow(product(c, a), b), 3, 2));
      auto g = saturate(random(arrow(c, a), 3, 2));
      Morphism ev{product(arrow(a, b), a), b, kit_.eval(a, b)};
      Morphism id{c, c, kit_.copycat(c)};
      auto left = compose(pair(transpose(f), g), ev);
      auto right = compose(pair(id, g), f);
      if (auto fl = same(left.strategy, right.strategy, nth(i))) return fl;
    }
    return std::nullopt;
  }

  const Kit& kit_;
  LawConfig cfg_;
  std::ostream& out_;
  std::mt19937_64 rng_;
  std::size_t checks_ = 0;
};

}  // namespace

Kit library_kit() {
  return {[](const ArenaPtr& a) { return copycat(a); },
          [](int i, const ArenaPtr& a1, const ArenaPtr& a0) { return proj_strategy(i, a1, a0); },
          [](const ArenaPtr& a, const ArenaPtr& b) { return eval_strategy(a, b); }};
}

Kit answer_dropping_kit() {
  return {[](const ArenaPtr& a) { return drop_target_answers(copycat(a)); },
          [](int i, const ArenaPtr& a1, const ArenaPtr& a0) { return drop_target_answers(proj_strategy(i, a1, a0)); },
          [](const ArenaPtr& a, const ArenaPtr& b) { return drop_target_answers(eval_strategy(a, b)); }};
}

std::optional<LawFailure> run_laws(const Kit& kit, const LawConfig& config, std::ostream& out) {
  return Runner(kit, config, out).all();
}

}  // namespace gamesem::tools
