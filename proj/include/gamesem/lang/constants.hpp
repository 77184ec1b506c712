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


#ifndef GAMESEM_LANG_CONSTANTS_HPP_
#define GAMESEM_LANG_CONSTANTS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "gamesem/arena.hpp"
#include "gamesem/strategy.hpp"

namespace gamesem::lang {

// Builds one generator play by naming moves as (base, tag, justifier
// position); position 0 is the root.
class PlayBuilder {
 public:
  explicit PlayBuilder(ArenaPtr arena) : arena_(std::move(arena)) {}
  PlayBuilder& add(std::string_view base, std::string_view tag, std::size_t justifier);
  const JustifiedSequence& play() const { return play_; }
  std::size_t size() const { return play_.size(); }

 private:
  ArenaPtr arena_;
  JustifiedSequence play_;
};

// Answer labels of a ground arena, in arena order.
std::vector<std::string> answers(const Arena& ground);

// The curried constants. Names:
//   + - * / &&         nat ⇒ nat ⇒ nat (&& is lazy multiplication)
//   seq                nat ⇒ nat ⇒ nat
//   if                 bool ⇒ nat ⇒ nat ⇒ nat
//   chooseb flip       bool
//   choosen            nat (answers 0..k)
//   omega skip         com
//   tt ff <numeral>    bool / nat
//   par                com ⇒ com ⇒ com
//   run                com ⇒ com
//   catch              (com ⇒ nat) ⇒ optnat
//   new                (var ⇒ com) ⇒ com
//   newsem             (sem ⇒ com) ⇒ com
//   asg der            var ⇒ nat ⇒ nat, var ⇒ nat
//   grab release       sem ⇒ com
//   pi                 com × com ⇒ com (angelic choice)
// Throws UnknownConstant.
Strategy constant_strategy(std::string_view name, int k);

// The names constant_strategy accepts, numerals excluded.
std::vector<std::string> constant_names();

// Ground-type instances of the polymorphic constants.
Strategy seq_strategy(const ArenaPtr& first, const ArenaPtr& second);
Strategy if_strategy(const ArenaPtr& branch);
Strategy value_strategy(const ArenaPtr& ground, std::string_view answer);

// Storage cell on (var ⇒ T) ⇒ T for ground T (unit by default).
Strategy cell_strategy(int k, const ArenaPtr& result = nullptr);

// Uncurries the first `arity` arguments: A1 ⇒ … ⇒ An ⇒ B becomes
// ((A1 × A2) × …) × An ⇒ B.
Strategy uncurry(const Strategy& s, int arity);

}  // namespace gamesem::lang

#endif  // GAMESEM_LANG_CONSTANTS_HPP_
