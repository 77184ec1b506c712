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


#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "gamesem/category.hpp"
#include "gamesem/error.hpp"
#include "gamesem/oracle.hpp"

using namespace gamesem;
using namespace gamesem::fixtures;

namespace {

Play play(const Strategy& s, const std::string& text) { return parse_sequence(*s.arena(), text); }

const std::vector<ArenaPtr>& small_pool() {
  static const std::vector<ArenaPtr> pool{unit(), boolean()};
  return pool;
}

ArenaPtr pick(std::mt19937_64& rng) { return small_pool()[rng() % small_pool().size()]; }

Strategy random_on(const ArenaPtr& a, std::mt19937_64& rng, std::size_t depth = 3) {
  return oracle::random_strategy({a, depth, rng(), 2});
}

// Plays of κ_A with the moves of one side deleted, relabelled onto A.
PlaySet side(const Strategy& cc, char keep) {
  const auto& arena = *cc.arena();
  const auto& target = keep == 'L' ? arena.left() : arena.right();
  PlaySet out;
  for (const auto& p : cc.enumerate(6)) {
    // A side's plays of length 3 all fit in depth 6.
    auto d = delete_moves(p, [&](MoveId m) { return arena.move(m).tag[0] != keep; }).sequence;
    for (auto& o : d) o.move = target->at(arena.move(o.move).base, arena.move(o.move).tag.substr(1));
    if (d.size() <= 3) out.insert(canonicalize(d));
  }
  return out;
}

}  // namespace

TEST_CASE("copy-cat") {
  auto cu = copycat(unit());
  CHECK(cu.accepts(play(cu, "q#R(*>1)·q#L(1>2)·a#L(2)·a#R(1)")));
  auto cn = copycat(nat(2));
  CHECK(cn.accepts(play(cn, "q#R(*>1)·q#L(1>2)·2#L(2)·2#R(1)")));
  CHECK_FALSE(cn.accepts(play(cn, "q#R(*>1)·q#L(1>2)·2#L(2)·1#R(1)")));
  for (auto a : {unit(), boolean(), arrow(unit(), unit())}) {
    auto cc = copycat(a);
    CHECK(side(cc, 'L') == side(cc, 'R'));
  }
}

TEST_CASE("copy-cat is idempotent but not neutral") {
  for (auto a : {unit(), boolean(), nat(2), arrow(unit(), unit())}) {
    auto cc = copycat(a);
    CHECK(equal_at_depth(compose(cc, cc), cc, 6));
  }
  auto r = rho();
  auto rk = compose(r, copycat(unit()));
  auto swapped = play(r, "q#R(*>1)·q#L(1>2)·a#L(2)·a#R(1)");
  CHECK_FALSE(equal_at_depth(rk, r, 4));
  CHECK(rk.accepts(swapped));
  CHECK_FALSE(r.accepts(swapped));
  auto w = difference_witness(rk, r, 4);
  REQUIRE(w);
  CHECK(to_text(*r.arena(), *w) == "q#R(*>1)·q#L(1>2)·a#L(2)·a#R(1)");
}

TEST_CASE("saturation") {
  auto r = rho();
  auto sr = saturate(r);
  CHECK(sr.strategy.accepts(play(r, "q#R(*>1)·q#L(1>2)·a#L(2)·a#R(1)")));
  for (auto a : {unit(), boolean()}) {
    auto cc = copycat(a);
    CHECK(equal_at_depth(saturate_strategy(cc), cc, 6));
  }
  auto a = arrow(unit(), boolean());
  auto nothing = strat(a, std::vector<std::string>{});
  CHECK(equal_at_depth(saturate_strategy(nothing), nothing, 6));
  CHECK_THROWS_AS(saturate_strategy(strat(unit(), std::vector<std::string>{})), ArenaMismatch);
}

TEST_CASE("saturation is a closure operator") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 6; ++round) {
    auto a = arrow(pick(rng), pick(rng));
    auto big = random_on(a, rng);
    auto small = oracle::random_substrategy(big, 3, rng());
    auto sb = saturate_strategy(big);
    CHECK(included_at_depth(big, sb, 6));
    CHECK(included_at_depth(saturate_strategy(small), sb, 6));
    CHECK(equal_at_depth(saturate_strategy(sb), sb, 5));
  }
}

TEST_CASE("permutation closure") {
  auto r = rho();
  CHECK(in_permutation_closure(r, play(r, "q#R(*>1)·q#L(1>2)·a#L(2)·a#R(1)")));
  CHECK(permutation_closure(r, 6) == saturate_strategy(r).enumerate(6));
  // An O-move followed by the P-move it enables is never swapped.
  auto cu = copycat(unit());
  CHECK_FALSE(in_permutation_closure(cu, play(cu, "q#R(*>1)·q#L(1>2)·a#R(1)·a#L(2)")));
  std::mt19937_64 rng(43);
  for (int round = 0; round < 6; ++round) {
    auto s = random_on(arrow(pick(rng), arrow(unit(), unit())), rng, 4);
    CHECK(permutation_closure(s, 6) == saturate_strategy(s).enumerate(6));
  }
}

TEST_CASE("equivalence") {
  auto r = rho();
  auto r2 = strat(r.arena(), std::vector<std::string>{"q#R(*>1)·q#L(1>2)·a#L(2)·a#R(1)"});
  // Answering after the argument returns is an O·P order, which saturation
  // never undoes; the forking order of ρ is only reachable from ρ itself.
  CHECK(included_at_depth(saturate_strategy(r2), saturate_strategy(r), 6));
  CHECK_FALSE(equivalent(saturate(r), saturate(r2), 6));
  auto a = arrow(Arena::empty(), unit());
  auto omega = strat(a, std::vector<std::string>{});
  auto nop = strat(a, std::vector<std::string>{"q#R(*>1)·a#R(1)"});
  CHECK_FALSE(equivalent(omega, nop, 4));
  CHECK(equivalent(nop, nop, 4));
}

TEST_CASE("terminal object") {
  auto t = terminal(nat(2));
  CHECK(t.strategy.enumerate(5) == PlaySet{Play{}});
  CHECK(terminal(Arena::empty()).strategy.enumerate(5) == PlaySet{Play{}});
  auto f = saturate(doubler(2));
  CHECK(compose(f, terminal(nat(2))).strategy.enumerate(5) == PlaySet{Play{}});
}

TEST_CASE("products") {
  auto a = arrow(Arena::empty(), unit());
  auto omega = saturate(strat(a, std::vector<std::string>{}));
  auto nop = saturate(strat(a, std::vector<std::string>{"q#R(*>1)·a#R(1)"}));
  auto both = pair(omega, nop);
  auto choice = strat(arrow(product(unit(), unit()), unit()),
                      std::vector<std::string>{"q#R(*>1)·q#LL(1>2)·a#LL(2)·a#R(1)",
                                               "q#R(*>1)·q#LR(1>2)·a#LR(2)·a#R(1)"});
  CHECK(equivalent(compose(both, saturate(choice)), nop, 6));

  auto p0 = proj_strategy(0, unit(), unit());
  CHECK(p0.accepts(play(p0, "q#R(*>1)·q#LR(1>2)·a#LR(2)·a#R(1)")));
  for (const auto& p : p0.enumerate(6)) {
    for (const auto& o : p) CHECK(p0.arena()->move(o.move).tag != "LL");
  }

  auto eps = pair(terminal(unit()), terminal(unit()));
  CHECK(eps.strategy.enumerate(4) == PlaySet{Play{}});

  std::mt19937_64 rng(47);
  for (int round = 0; round < 4; ++round) {
    auto c = pick(rng), a1 = pick(rng), a0 = pick(rng);
    auto f1 = saturate(random_on(arrow(c, a1), rng));
    auto f0 = saturate(random_on(arrow(c, a0), rng));
    CHECK(equivalent(compose(pair(f1, f0), proj(1, a1, a0)), f1, 6));
    CHECK(equivalent(compose(pair(f1, f0), proj(0, a1, a0)), f0, 6));
  }
}

TEST_CASE("identities and saturated morphisms") {
  std::mt19937_64 rng(53);
  for (int round = 0; round < 4; ++round) {
    auto a = pick(rng), b = pick(rng);
    auto f = saturate(random_on(arrow(a, b), rng));
    CHECK(equivalent(compose(identity(a), f), f, 6));
    CHECK(equivalent(compose(f, identity(b)), f, 6));
  }
}

TEST_CASE("exponentials") {
  auto ev = eval_strategy(unit(), unit());
  CHECK(ev.accepts(play(ev, "q#R(*>1)·q#LLR(1>2)·q#LLL(2>3)·q#LR(1>4)·a#LR(4)·a#LLL(3)·a#LLR(2)·a#R(1)")));

  std::mt19937_64 rng(59);
  for (int round = 0; round < 4; ++round) {
    auto c = pick(rng), a = pick(rng), b = pick(rng);
    auto f = saturate(random_on(arrow(product(c, a), b), rng));
    auto t = transpose(f);
    CHECK(equal_at_depth(untranspose(t).strategy, f.strategy, 6));
    CHECK(t.strategy.enumerate(6).size() == f.strategy.enumerate(6).size());
    auto g = saturate(random_on(arrow(c, a), rng));
    auto left = compose(pair(t, g), eval_morphism(a, b));
    auto right = compose(pair(identity(c), g), f);
    CHECK(equivalent(left, right, 6));
  }
  CHECK_THROWS_AS(transpose(saturate(doubler(2))), ArenaMismatch);
}
