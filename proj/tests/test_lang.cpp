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


#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "gamesem/category.hpp"
#include "gamesem/error.hpp"
#include "gamesem/lang/constants.hpp"
#include "gamesem/lang/interpret.hpp"
#include "gamesem/lang/parser.hpp"
#include "gamesem/lang/typecheck.hpp"

using namespace gamesem;
using namespace gamesem::lang;

namespace {

Morphism denote(const std::string& text, int k = 3) {
  InterpretOptions o;
  o.nat_max = k;
  return interpret({}, *parse(text), o);
}

// Labels of the answers a closed ground term gives to the initial question.
std::set<std::string> results(const Morphism& m) {
  std::set<std::string> out;
  for (const auto& p : m.strategy.enumerate(2)) {
    if (p.size() == 2) out.insert(m.strategy.arena()->move(p[1].move).base);
  }
  return out;
}

Play play(const Strategy& s, const std::string& text) { return parse_sequence(*s.arena(), text); }

std::string show(const std::string& text) { return to_string(*parse(text)); }

}  // namespace

TEST_CASE("parser") {
  CHECK(show("\\x:nat. x + x") == "(\\x:nat. (x + x))");
  CHECK(show("new x in (x := 2; !x)") == "(new x in ((x := 2); !x))");
  CHECK(show("escape e in 5") == "(escape e in 5)");
  CHECK(show("f a b") == "((f a) b)");
  CHECK(show("1 + 2 * 3 - 4") == "((1 + (2 * 3)) - 4)");
  CHECK(show("x lazy* y && z") == "((x && y) && z)");
  CHECK(show("\\f:nat -> nat. \\x:nat. f (f x)") == "(\\f:nat -> nat. (\\x:nat. (f (f x))))");
  CHECK(show("a; b; c") == "(a; (b; c))");
  CHECK(show("par skip (run skip)  # comment") == "(par skip (run skip))");
  CHECK(show("newsem s in (grab s; release s)") == "(newsem s in ((grab s); (release s)))");
  CHECK(show("if chooseb then 1 else 2") == "(if chooseb then 1 else 2)");
  CHECK(to_string(*parse_type("nat -> bool -> com")) == "nat -> bool -> com");
  CHECK(to_string(*parse_type("(nat -> bool) -> com")) == "(nat -> bool) -> com");

  try {
    parse("\\x:nat.\n  x +");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 6);
  }
  CHECK_THROWS_AS(parse("(1"), SyntaxError);
  CHECK_THROWS_AS(parse("1 $ 2"), SyntaxError);
  CHECK_THROWS_AS(parse_type("nat ->"), SyntaxError);
}

TEST_CASE("typing") {
  CHECK(to_string(*typecheck({}, *parse("\\x:nat. x"))) == "nat -> nat");
  CHECK(to_string(*typecheck({{"x", nat_type()}}, *parse("x + x"))) == "nat");
  CHECK_THROWS_AS(typecheck({}, *parse("(\\x:nat. x) tt")), TypeError);
  CHECK(to_string(*typecheck({}, *parse("escape e in (e; 5)"))) == "optnat");
  CHECK(to_string(*typecheck({}, *parse("new x in (x := 1; !x)"))) == "nat");
  CHECK(to_string(*typecheck({}, *parse("par skip (run skip)"))) == "com");
  CHECK(to_string(*typecheck({}, *parse("newsem s in grab s"))) == "com");
  CHECK(to_string(*typecheck({}, *parse("flip"))) == "bool");
  CHECK(to_string(*typecheck({}, *parse("choosen"))) == "nat");
  CHECK_THROWS_AS(typecheck({}, *parse("y")), TypeError);
  CHECK_THROWS_AS(typecheck({}, *parse("if 1 then 2 else 3")), TypeError);
  CHECK_THROWS_AS(typecheck({}, *parse("new x in x")), TypeError);
  CHECK_THROWS_AS(typecheck({}, *parse("par skip 1")), TypeError);
  try {
    typecheck({}, *parse("1 + tt"));
    FAIL("expected a type error");
  } catch (const TypeError& e) {
    CHECK(std::string(e.what()).find("tt") != std::string::npos);
  }
}

TEST_CASE("arithmetic constants") {
  auto add = constant_strategy("+", 3);
  CHECK(add.accepts(play(add, "q#RR(*>1)·q#L(1>2)·1#L(2)·q#RL(1>4)·2#RL(4)·3#RR(1)")));
  CHECK_FALSE(add.accepts(play(add, "q#RR(*>1)·q#L(1>2)·2#L(2)·q#RL(1>4)·2#RL(4)·3#RR(1)")));
  auto div = constant_strategy("/", 3);
  CHECK(div.p_moves(play(div, "q#RR(*>1)·q#L(1>2)·1#L(2)·q#RL(1>4)·0#RL(4)")).empty());
  CHECK(div.accepts(play(div, "q#RR(*>1)·q#L(1>2)·3#L(2)·q#RL(1>4)·2#RL(4)·1#RR(1)")));
  auto lazy = constant_strategy("&&", 3);
  CHECK(lazy.accepts(play(lazy, "q#RR(*>1)·q#L(1>2)·0#L(2)·0#RR(1)")));
  CHECK_THROWS_AS(constant_strategy("frobnicate", 3), UnknownConstant);
  CHECK_THROWS_AS(constant_strategy("9", 3), UnknownConstant);
}

TEST_CASE("control constants") {
  auto cond = constant_strategy("if", 1);
  CHECK(cond.accepts(play(cond, "q#RRR(*>1)·q#L(1>2)·tt#L(2)·q#RL(1>4)·1#RL(4)·1#RRR(1)")));
  CHECK(cond.accepts(play(cond, "q#RRR(*>1)·q#L(1>2)·ff#L(2)·q#RRL(1>4)·0#RRL(4)·0#RRR(1)")));
  CHECK_FALSE(cond.accepts(play(cond, "q#RRR(*>1)·q#L(1>2)·tt#L(2)·q#RRL(1>4)")));

  auto par = constant_strategy("par", 3);
  std::size_t full = 0;
  for (const auto& p : par.enumerate(6)) {
    std::set<MoveId> seen;
    for (const auto& o : p) seen.insert(o.move);
    if (p.size() == 6 && seen.size() == 6) ++full;
  }
  CHECK(full == 6);

  auto run = saturate_strategy(constant_strategy("run", 3));
  CHECK(run.accepts(play(run, "q#R(*>1)·q#L(1>2)·a#R(1)·a#L(2)")));
  CHECK(run.accepts(play(run, "q#R(*>1)·q#L(1>2)·a#L(2)·a#R(1)")));

  auto flip = constant_strategy("flip", 3);
  CHECK(flip.enumerate(2).size() == 4);
  auto choosen = constant_strategy("choosen", 2);
  CHECK(choosen.enumerate(2).size() == 5);
  CHECK(constant_strategy("omega", 3).enumerate(4).size() == 2);
}

TEST_CASE("storage cell") {
  auto cell = cell_strategy(2);
  const auto& a = *cell.arena();
  auto offers = [&](const std::string& text) {
    std::set<std::string> out;
    for (auto s : cell.p_moves(parse_sequence(a, text))) {
      out.insert(a.move(s.move).base + "@" + std::to_string(s.justifier.value));
    }
    return out;
  };
  CHECK(offers("q#R(*>1)·q#LR(1>2)·rd#LLL(2>3)").count("val(0)@3"));
  CHECK(offers("q#R(*>1)·q#LR(1>2)·asg#LLRR(2>3)").count("arg@3"));
  CHECK(offers("q#R(*>1)·q#LR(1>2)·asg#LLRR(2>3)·arg#LLRL(3>4)·wr(1)#LLRL(4)").count("ok(1)@3"));
  auto written = "q#R(*>1)·q#LR(1>2)·asg#LLRR(2>3)·arg#LLRL(3>4)·wr(2)#LLRL(4)·ok(2)#LLRR(3)·rd#LLL(2>7)";
  CHECK(offers(written) == std::set<std::string>{"val(2)@7"});
}

TEST_CASE("interpretation of closed terms") {
  CHECK(equivalent(denote("0"), saturate(fixtures::sigma0(3)), 6));
  auto dbl = denote("\\x:nat. x + x");
  CHECK(dbl.strategy.accepts(play(dbl.strategy, "q#RR(*>1)·q#RL(1>2)·1#RL(2)·q#RL(1>4)·2#RL(4)·3#RR(1)")));
  CHECK(equivalent(denote("(\\x:nat. x) 0"), denote("0"), 6));
  CHECK(results(denote("new x in !x")) == std::set<std::string>{"0"});
  CHECK(results(denote("new x in (x := 2; !x)")) == std::set<std::string>{"2"});
  CHECK(results(denote("new x in (x := 1; x := !x + 1; !x)")) == std::set<std::string>{"2"});
  CHECK(results(denote("escape e in (e; 5)", 5)) == std::set<std::string>{"⦶"});
  CHECK(results(denote("escape e in 5", 5)) == std::set<std::string>{"5"});
  CHECK(results(denote("if chooseb then 1 else 2")) == std::set<std::string>{"1", "2"});
  CHECK(results(denote("omega")).empty());
  CHECK(results(denote("par skip skip")) == std::set<std::string>{"a"});
  CHECK(results(denote("newsem s in (grab s; release s)")) == std::set<std::string>{"a"});
  CHECK_THROWS_AS(denote("4"), TypeError);
}

TEST_CASE("state end to end") {
  CHECK(equivalent(denote("new x in (x := 2; !x)"), denote("2"), 10));
  CHECK(equivalent(denote("\\y:nat. new x in (x := y; !x)", 2), denote("\\y:nat. y", 2), 4));
  CHECK_FALSE(equivalent(denote("\\y:nat. new x in (x := y; 0)", 2), denote("\\y:nat. y", 2), 4));
}

TEST_CASE("open terms") {
  TypingContext gamma{{"x", nat_type()}, {"y", bool_type()}};
  auto ctx = context_arena(gamma, 3);
  CHECK(ctx->size() == 1 + 4 + 1 + 2);
  auto x = interpret(gamma, *parse("x"));
  CHECK(x.strategy.accepts(parse_sequence(*x.strategy.arena(), "q#R(*>1)·q#LLR(1>2)·2#LLR(2)·2#R(1)")));
  auto y = interpret(gamma, *parse("if y then x else 0"));
  CHECK(y.strategy.accepts(
      parse_sequence(*y.strategy.arena(), "q#R(*>1)·q#LR(1>2)·tt#LR(2)·q#LLR(1>4)·3#LLR(4)·3#R(1)")));
}

TEST_CASE("compositionality") {
  const std::vector<std::pair<std::string, std::string>> same{{"1 + 1", "2"}, {"if tt then 1 else 0", "1"}};
  const std::vector<std::string> contexts{"[] + 1", "(\\y:nat. y) []", "if flip then [] else 0"};
  for (const auto& [a, b] : same) {
    REQUIRE(equivalent(denote(a), denote(b), 6));
    for (auto c : contexts) {
      auto at = c.find("[]");
      auto ca = c, cb = c;
      ca.replace(at, 2, "(" + a + ")");
      cb.replace(at, 2, "(" + b + ")");
      CHECK_MESSAGE(equivalent(denote(ca), denote(cb), 6), ca);
    }
  }
}

TEST_CASE("denotations are saturated") {
  for (const char* t : {"0", "skip", "flip", "\\x:nat. x", "run skip", "(\\x:com. x) skip", "par skip skip"}) {
    auto m = denote(t);
    CHECK_MESSAGE(equal_at_depth(saturate_strategy(m.strategy), m.strategy, 6), t);
  }
}

TEST_CASE("pure constants are deterministic") {
  for (const char* name : {"+", "-", "*", "/", "&&", "seq", "if", "tt", "ff", "2", "skip", "omega"}) {
    auto s = constant_strategy(name, 2);
    for (const auto& p : s.enumerate(6)) CHECK_MESSAGE(s.p_moves(p).size() <= 1, name);
  }
}

TEST_CASE("arena expressions") {
  auto edges = [](const Arena& a) {
    std::size_t n = 0;
    for (MoveId m = 0; m < a.size(); ++m) n += a.enabled_by(m).size();
    return n;
  };
  auto uncurried = parse_arena("(nat * bool) -> unit", 2);
  auto curried = parse_arena("nat -> bool -> unit", 2);
  CHECK(uncurried->size() == curried->size());
  CHECK(edges(*uncurried) == edges(*curried));
  CHECK(parse_arena("unit", 2)->size() == 2);
  CHECK(parse_arena("I", 2)->size() == 0);
  CHECK(parse_arena("var", 1)->size() == 9);
  CHECK_THROWS_AS(parse_arena("nat * ", 2), SyntaxError);
}
