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


#include <functional>

#include "doctest.h"
#include "fixtures.hpp"
#include "gamesem/error.hpp"
#include "gamesem/oracle.hpp"
#include "gamesem/strategy.hpp"
#include "json.hpp"

using namespace gamesem;
using namespace gamesem::fixtures;

namespace {

Strategy sigma0_nat2() {
  return strat(nat(2), std::vector<std::string>{"q#(*>1)·0#(1)"}, "σ0");
}

std::string swap_side(const std::string& tag) { return (tag[0] == 'L' ? "R" : "L") + tag.substr(1); }

// Extensional copy-cat: every P-occurrence copies a distinct earlier
// O-occurrence of the same move on the other side, with the copied pointer.
bool is_copycat_play(const Arena& a, const Play& p) {
  std::vector<int> partner(p.size(), -1);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == p.size()) return true;
    if (a.is_opponent(p[i].move)) return go(i + 1);
    const auto& mv = a.move(p[i].move);
    for (std::size_t j = 0; j < i; ++j) {
      if (partner[j] >= 0 || !a.is_opponent(p[j].move)) continue;
      const auto& src = a.move(p[j].move);
      if (src.base != mv.base || swap_side(src.tag) != mv.tag) continue;
      Name want = p[j].justifier.is_root() ? Name{static_cast<uint32_t>(j + 1)}
                  : partner[p[j].justifier.value - 1] < 0
                      ? kRoot
                      : Name{static_cast<uint32_t>(partner[p[j].justifier.value - 1] + 1)};
      if (want.is_root() || want != p[i].justifier) continue;
      partner[i] = static_cast<int>(j);
      partner[j] = static_cast<int>(i);
      if (go(i + 1)) return true;
      partner[i] = partner[j] = -1;
    }
    return false;
  };
  return go(0);
}

}  // namespace

TEST_CASE("strat closes generators") {
  auto s = sigma0_nat2();
  CHECK(s.enumerate(2).size() == 3);
  CHECK(s.enumerate(0) == PlaySet{Play{}});
  CHECK(to_text(*s.arena(), *std::next(s.enumerate(2).begin(), 2)) == "q#(*>1)·0#(1)");
  auto empty = strat(nat(2), std::vector<std::string>{}, "none");
  CHECK(empty.enumerate(3).size() == 2);
  auto flip = strat(boolean(), std::vector<std::string>{"q#(*>1)·tt#(1)", "q#(*>1)·ff#(1)"}, "flip");
  CHECK(flip.enumerate(2).size() == 4);
  CHECK(flip.accepts(parse_sequence(*flip.arena(), "q#(*>1)·ff#(1)")));
  CHECK_THROWS_AS(strat(nat(2), std::vector<std::string>{"0#(*)"}), NotAPlay);
}

TEST_CASE("strategy membership") {
  auto s = sigma0_nat2();
  CHECK(s.accepts({}));
  CHECK_FALSE(s.accepts(parse_sequence(*s.arena(), "q#(*>1)·1#(1)")));
  CHECK(s.accepts(parse_sequence(*s.arena(), "q#(*>7)·0#(7)")));
  std::vector<std::string> gens;
  for (int n = 0; n <= 2; ++n) gens.push_back("q#(*>1)·" + std::to_string(n) + "#(1)");
  auto choosen = strat(nat(2), gens, "choosen");
  CHECK(choosen.accepts(parse_sequence(*choosen.arena(), "q#(*>1)·2#(1)")));
}

TEST_CASE("next-move presentation") {
  auto a = nat(2);
  auto s = strat_from_next(a, [&](const Play& p) {
    if (p.size() == 1) return std::vector<Step>{{a->at("0", ""), Name{1}}};
    return std::vector<Step>{};
  });
  CHECK(equal_at_depth(s, sigma0_nat2(), 4));
  auto silent = strat_from_next(a, [](const Play&) { return std::vector<Step>{}; });
  for (const auto& p : silent.enumerate(4)) {
    for (const auto& o : p) CHECK(a->is_opponent(o.move));
  }
  auto bad = strat_from_next(a, [&](const Play&) { return std::vector<Step>{{a->at("q", ""), kRoot}}; });
  CHECK_THROWS_AS(bad.enumerate(2), IllegalNextMove);
}

TEST_CASE("copy-cat next-move matches its extensional description") {
  for (auto base : {unit(), boolean(), arrow(unit(), unit())}) {
    auto cc = copycat(base);
    auto arena = cc.arena();
    PlaySet expected;
    for (const auto& p : oracle::brute_plays(*arena, 6)) {
      if (is_copycat_play(*arena, p)) expected.insert(p);
    }
    CHECK(cc.enumerate(6) == expected);
  }
}

TEST_CASE("O-extensions") {
  auto a = nat(2);
  auto init = o_extensions(*a, {});
  CHECK(init == std::vector<Step>{{a->at("q", ""), kRoot}});
  CHECK(o_extensions(*a, parse_sequence(*a, "q#(*>1)")).empty());
  auto f = arrow(a, a);
  auto ext = o_extensions(*f, parse_sequence(*f, "q#R(*>1)·q#L(1>2)"));
  CHECK(ext == std::vector<Step>{{f->at("0", "L"), Name{2}}, {f->at("1", "L"), Name{2}}, {f->at("2", "L"), Name{2}}});
}

TEST_CASE("equality at depth") {
  auto s = sigma0_nat2();
  auto one = strat(nat(2), std::vector<std::string>{"q#(*>1)·1#(1)"});
  CHECK(equal_at_depth(s, s, 3));
  CHECK(equal_at_depth(s, one, 1));
  CHECK_FALSE(equal_at_depth(s, one, 2));
  auto w = difference_witness(s, one, 2);
  REQUIRE(w);
  CHECK(w->size() == 2);
  CHECK_FALSE(difference_witness(s, s, 3));
  CHECK(included_at_depth(strat(nat(2), std::vector<std::string>{}), s, 3));
  CHECK_THROWS_AS(equal_at_depth(s, sigma0(2), 2), ArenaMismatch);
}

TEST_CASE("enumerated sets are closed and monotone in depth") {
  auto ts = twice_sum(2);
  for (std::size_t d = 0; d < 7; ++d) {
    CHECK(closure_violations(*ts.arena(), ts.enumerate(d), d).empty());
    for (const auto& p : ts.enumerate(d)) CHECK(ts.enumerate(d + 1).count(p) == 1);
  }
  auto broken = ts.enumerate(3);
  broken.erase(broken.begin());
  CHECK_FALSE(closure_violations(*ts.arena(), broken, 3).empty());
}

TEST_CASE("generators appear at their length") {
  auto ts = twice_sum(2);
  CHECK(ts.accepts(parse_sequence(*ts.arena(), "q#R(*>1)·q#L(1>2)·1#L(2)·q#L(1>4)·1#L(4)·2#R(1)")));
  CHECK(ts.enumerate(7).count(parse_sequence(*ts.arena(), "q#R(*>1)·q#L(1>2)·1#L(2)·q#L(1>4)·1#L(4)·2#R(1)")));
}

TEST_CASE("single-valued next-move functions are deterministic") {
  auto d = doubler(3);
  for (const auto& p : d.enumerate(6)) CHECK(d.p_moves(p).size() <= 1);
}

TEST_CASE("json export") {
  auto s = sigma0_nat2();
  auto j = nlohmann::json::parse(to_json(*s.arena(), s.enumerate(2)));
  REQUIRE(j.is_array());
  CHECK(j.size() == 3);
  CHECK(j[0].empty());
  CHECK(j[2][1]["move"] == "0");
  CHECK(j[2][1]["just"] == 1);
}
