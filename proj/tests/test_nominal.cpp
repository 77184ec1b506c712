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
#include "gamesem/error.hpp"
#include "gamesem/nominal.hpp"
#include "gamesem/play.hpp"
#include "gamesem/strategy.hpp"
#include "gamesem/oracle.hpp"

using namespace gamesem;

namespace {

Occurrence q(Name j, Name b) { return {0, j, b}; }
Occurrence ans(MoveId m, Name j) { return {m, j, std::nullopt}; }

}  // namespace

TEST_CASE("permutations act on names and fix the root") {
  auto pi = Permutation::transposition(Name{1}, Name{2});
  CHECK(pi(Name{1}) == Name{2});
  CHECK(pi(Name{2}) == Name{1});
  CHECK(pi(Name{3}) == Name{3});
  CHECK(pi(kRoot) == kRoot);
  CHECK(pi.after(pi.inverse()).is_identity());
  CHECK_THROWS_AS(Permutation::from_pairs({{Name{1}, Name{2}}, {Name{3}, Name{2}}}), NameClash);
  CHECK_THROWS_AS(Permutation::from_pairs({{kRoot, Name{2}}}), NameClash);
}

TEST_CASE("apply_permutation renames binders and justifiers") {
  JustifiedSequence s{q(kRoot, Name{1}), ans(1, Name{1})};
  CHECK(apply_permutation(Permutation{}, s) == s);
  auto swapped = apply_permutation(Permutation::transposition(Name{1}, Name{2}), s);
  CHECK(swapped == JustifiedSequence{q(kRoot, Name{2}), ans(1, Name{2})});
}

TEST_CASE("canonicalize renames each binder to its position") {
  CHECK(canonicalize({}).empty());
  CHECK(canonicalize({q(kRoot, Name{7}), ans(1, Name{7})}) ==
        JustifiedSequence{q(kRoot, Name{1}), ans(1, Name{1})});
  // q'(*>4)·q''(4>9)·3''(9)·q''(4>2)·5''(2)·8'(4)
  JustifiedSequence raw{q(kRoot, Name{4}), q(Name{4}, Name{9}), ans(3, Name{9}),
                        q(Name{4}, Name{2}), ans(5, Name{2}),     ans(8, Name{4})};
  JustifiedSequence want{q(kRoot, Name{1}), q(Name{1}, Name{2}), ans(3, Name{2}),
                         q(Name{1}, Name{4}), ans(5, Name{4}),     ans(8, Name{1})};
  CHECK(canonicalize(raw) == want);
  CHECK(is_canonical(want));
  CHECK_FALSE(is_canonical(raw));
  CHECK_THROWS_AS(canonicalize({ans(1, Name{3})}), MalformedSequence);
  CHECK_THROWS_AS(canonicalize({q(kRoot, Name{1}), q(kRoot, Name{1})}), MalformedSequence);
}

TEST_CASE("fresh picks the smallest unused name") {
  CHECK(fresh({}) == Name{1});
  CHECK(fresh({Name{1}, Name{2}}) == Name{3});
  CHECK(fresh({Name{1}, Name{3}}) == Name{2});
}

TEST_CASE("canonical forms are invariant under random permutations") {
  std::mt19937_64 rng(2026);
  auto arena = arrow(base_arena(BaseKind::kNat, 2), base_arena(BaseKind::kNat, 2));
  auto plays = oracle::brute_plays(*arena, 5);
  std::vector<Play> pool(plays.begin(), plays.end());
  for (int i = 0; i < 100; ++i) {
    const Play& p = pool[rng() % pool.size()];
    std::vector<std::pair<Name, Name>> pairs;
    std::vector<std::uint32_t> targets;
    for (std::uint32_t n = 1; n <= 8; ++n) targets.push_back(n);
    std::shuffle(targets.begin(), targets.end(), rng);
    for (std::uint32_t n = 1; n <= 8; ++n) pairs.push_back({Name{n}, Name{targets[n - 1] + 10}});
    for (std::uint32_t n = 1; n <= 8; ++n) pairs.push_back({Name{targets[n - 1] + 10}, Name{n}});
    auto pi = Permutation::from_pairs(pairs);
    auto moved = apply_permutation(pi, p);
    CHECK(is_justified_sequence(moved));
    CHECK(canonicalize(moved) == canonicalize(p));
    CHECK(names_of(moved).size() == names_of(p).size());
  }
}
