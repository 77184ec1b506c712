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


#include <algorithm>

#include "doctest.h"
#include "gamesem/error.hpp"
#include "gamesem/oracle.hpp"
#include "gamesem/play.hpp"

using namespace gamesem;

namespace {

const char* const kDoubleX = "q#R(*>1)·q#L(1>2)·3#L(2)·q#L(1>4)·2#L(4)·3#R(1)";

}  // namespace

TEST_CASE("justified sequences need fresh binders") {
  auto nat = base_arena(BaseKind::kNat, 5);
  auto a = arrow(nat, nat);
  CHECK(is_justified_sequence({}));
  auto reused = JustifiedSequence{{a->at("q", "R"), kRoot, Name{1}}, {a->at("q", "L"), Name{1}, Name{1}}};
  CHECK_FALSE(is_justified_sequence(reused));
  CHECK(is_justified_sequence(parse_sequence(*a, kDoubleX)));
}

TEST_CASE("plays") {
  auto nat2 = base_arena(BaseKind::kNat, 2);
  CHECK(is_play(*nat2, parse_sequence(*nat2, "q#(*>1)·0#(1)")));
  CHECK_FALSE(is_play(*nat2, parse_sequence(*nat2, "0#(*)")));
  auto a = arrow(nat2, nat2);
  CHECK_FALSE(is_play(*a, parse_sequence(*a, "q#L(*>1)")));
  CHECK_FALSE(is_play(*a, parse_sequence(*a, "q#R(*>1)·q#R(*>2)")));
  auto n5 = arrow(base_arena(BaseKind::kNat, 5), base_arena(BaseKind::kNat, 5));
  CHECK(is_play(*n5, parse_sequence(*n5, kDoubleX)));
}

TEST_CASE("legal steps") {
  auto nat2 = base_arena(BaseKind::kNat, 2);
  auto steps = legal_steps(*nat2, {});
  REQUIRE(steps.size() == 1);
  CHECK(steps[0] == Step{nat2->at("q", ""), kRoot});
  auto after_q = legal_steps(*nat2, parse_sequence(*nat2, "q#(*>1)"));
  std::size_t o_moves = std::count_if(after_q.begin(), after_q.end(),
                                      [&](const Step& s) { return nat2->is_opponent(s.move); });
  CHECK(o_moves == 0);
  auto a = arrow(nat2, nat2);
  auto p = parse_sequence(*a, "q#R(*>1)·q#L(1>2)");
  std::vector<Step> o;
  for (auto s : legal_steps(*a, p)) {
    if (a->is_opponent(s.move)) o.push_back(s);
  }
  CHECK(o == std::vector<Step>{{a->at("0", "L"), Name{2}}, {a->at("1", "L"), Name{2}}, {a->at("2", "L"), Name{2}}});
}

TEST_CASE("textual format round-trips") {
  auto n5 = arrow(base_arena(BaseKind::kNat, 5), base_arena(BaseKind::kNat, 5));
  auto p = parse_sequence(*n5, kDoubleX);
  CHECK(to_text(*n5, p) == kDoubleX);
  CHECK(to_text(*n5, {}) == "ε");
  CHECK(parse_sequence(*n5, "ε").empty());
  CHECK_THROWS_AS(parse_sequence(*n5, "q#R(*>0)"), ParseError);
  CHECK_THROWS_AS(parse_sequence(*n5, "z#R(*>1)"), UnknownMove);
}

TEST_CASE("deletion reroutes pointers through deleted questions") {
  auto n5 = arrow(base_arena(BaseKind::kNat, 5), base_arena(BaseKind::kNat, 5));
  auto p = parse_sequence(*n5, "q#R(*>1)·q#L(1>2)·3#L(2)");
  auto none = delete_moves(p, [](MoveId) { return false; });
  CHECK(none.sequence == p);
  CHECK(none.chain.empty());
  auto in_left = [&](MoveId m) { return n5->move(m).tag[0] == 'L'; };
  auto d = delete_moves(p, [&](MoveId m) { return m == n5->at("q", "L"); });
  CHECK(to_text(*n5, d.sequence) == "q#R(*>1)·3#L(1)");
  auto full = delete_moves(parse_sequence(*n5, kDoubleX), in_left);
  CHECK(to_text(*n5, full.sequence) == "q#R(*>1)·3#R(1)");
}

TEST_CASE("threads collect hereditarily justified occurrences") {
  auto unit = base_arena(BaseKind::kUnit);
  auto a = arrow(product(unit, unit), unit);
  auto p = parse_sequence(*a, "q#R(*>1)·q#LL(1>2)·q#LR(1>3)·a#LL(2)·a#LR(3)");
  CHECK(thread(p, 0) == p);
  CHECK(to_text(*a, thread(p, 1)) == "q#LL(1>2)·a#LL(2)");
  auto single = parse_sequence(*a, "q#R(*>1)·q#LL(1>2)");
  CHECK(thread(single, 1).size() == 1);
  CHECK_THROWS_AS(thread(parse_sequence(*a, "q#R(*>1)·a#R(1)"), 1), NotAQuestion);
}

TEST_CASE("interleavings") {
  auto unit = base_arena(BaseKind::kUnit);
  auto a = arrow(product(unit, unit), unit);
  auto q = parse_sequence(*a, "q#LL(1>2)");
  CHECK(interleavings({}, q) == std::vector<JustifiedSequence>{q});
  auto t1 = parse_sequence(*a, "q#LL(1>2)·a#LL(2)");
  auto t2 = parse_sequence(*a, "q#LR(1>3)·a#LR(3)");
  auto all = interleavings(t1, t2);
  CHECK(all.size() == 6);
  for (const auto& s : all) {
    auto left = delete_moves(s, [&](MoveId m) { return a->move(m).tag == "LR"; });
    CHECK(left.sequence == t1);
  }
  CHECK_THROWS_AS(interleavings(t1, t1), NameClash);
}

TEST_CASE("deletion and threads of plays of an arrow arena") {
  auto unit = base_arena(BaseKind::kUnit);
  auto bool_ = base_arena(BaseKind::kBool);
  for (auto arena : {arrow(unit, bool_), arrow(arrow(unit, unit), unit), arrow(bool_, arrow(unit, unit))}) {
    const auto& left = arena->left();
    const auto& right = arena->right();
    auto is_left = [&](MoveId m) { return arena->move(m).tag[0] == 'L'; };
    for (const auto& p : oracle::brute_plays(*arena, 5)) {
      // No A-move enables a B-move, so dropping A leaves a play of B.
      auto b_part = delete_moves(p, is_left).sequence;
      for (auto& o : b_part) o.move = right->at(arena->move(o.move).base, arena->move(o.move).tag.substr(1));
      CHECK(is_play(*right, canonicalize(b_part)));
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (!is_left(p[i].move) || !arena->is_question(p[i].move) || p[i].justifier != Name{1}) continue;
        if (!left->is_initial(left->at(arena->move(p[i].move).base, arena->move(p[i].move).tag.substr(1)))) continue;
        auto t = rebase_root(thread(p, i));
        for (auto& o : t) o.move = left->at(arena->move(o.move).base, arena->move(o.move).tag.substr(1));
        CHECK(is_play(*left, canonicalize(t)));
      }
    }
  }
}
