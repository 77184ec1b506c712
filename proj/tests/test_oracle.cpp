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


#include "doctest.h"
#include "fixtures.hpp"
#include "gamesem/oracle.hpp"

using namespace gamesem;
using namespace gamesem::fixtures;

TEST_CASE("brute plays") {
  auto n = nat(2);
  PlaySet expected{{}};
  for (const char* t : {"q#(*>1)", "q#(*>1)·0#(1)", "q#(*>1)·1#(1)", "q#(*>1)·2#(1)"}) {
    expected.insert(parse_sequence(*n, t));
  }
  CHECK(oracle::brute_plays(*n, 2) == expected);
  CHECK(oracle::brute_plays(*Arena::empty(), 4) == PlaySet{Play{}});
  auto a = arrow(boolean(), unit());
  for (const auto& p : oracle::brute_plays(*a, 5)) {
    CHECK(is_play(*a, p));
    CHECK(is_canonical(p));
  }
}

TEST_CASE("brute plays contain every strategy") {
  auto ts = twice_sum(2);
  const auto all = oracle::brute_plays(*ts.arena(), 6);
  for (const auto& p : ts.enumerate(6)) CHECK(all.count(p) == 1);
}

TEST_CASE("brute composition") {
  auto d = doubler(3);
  auto inc = incrementer(3);
  CHECK(oracle::brute_compose(d, inc, 4) == compose(d, inc).enumerate(4));
  auto eps = oracle::brute_compose(
      d.arena(), [&](const Play& p) { return d.accepts(p); }, inc.arena(),
      [](const Play& p) { return p.empty(); }, 4);
  CHECK(eps == PlaySet{Play{}});
  auto s0 = sigma0(3);
  auto ts = twice_sum(3);
  auto z = oracle::brute_compose(s0, ts, 2);
  CHECK(z.count(parse_sequence(*arrow(Arena::empty(), nat(3)), "q#R(*>1)·0#R(1)")) == 1);
}

TEST_CASE("random strategies") {
  for (auto a : {arrow(unit(), unit()), arrow(boolean(), boolean())}) {
    for (uint64_t seed = 0; seed < 50; ++seed) {
      auto s = oracle::random_strategy({a, 4, seed, 2});
      auto again = oracle::random_strategy({a, 4, seed, 2});
      CHECK(equal_at_depth(s, again, 6));
      const auto& plays = s.enumerate(6);
      CHECK(closure_violations(*a, plays, 6).empty());
      for (const auto& p : plays) CHECK(is_play(*a, p));
    }
  }
  auto big = oracle::random_strategy({arrow(boolean(), boolean()), 4, 7, 3});
  auto sub = oracle::random_substrategy(big, 4, 9);
  CHECK(included_at_depth(sub, big, 6));
}
