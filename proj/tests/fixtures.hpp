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


// Example strategies shared by the unit tests and the acceptance binary.

#ifndef GAMESEM_TESTS_FIXTURES_HPP_
#define GAMESEM_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "gamesem/arena.hpp"
#include "gamesem/category.hpp"
#include "gamesem/strategy.hpp"

namespace gamesem::fixtures {

inline ArenaPtr nat(int k) { return base_arena(BaseKind::kNat, k); }
inline ArenaPtr unit() { return base_arena(BaseKind::kUnit); }
inline ArenaPtr boolean() { return base_arena(BaseKind::kBool); }

// nat ⇒ nat strategy asking its argument once and answering f(m) when defined.
template <typename F>
Strategy unary_nat(int k, F f, const std::string& name) {
  std::vector<std::string> gens;
  for (int m = 0; m <= k; ++m) {
    int r = f(m);
    if (r < 0 || r > k) continue;
    gens.push_back("q#R(*>1)·q#L(1>2)·" + std::to_string(m) + "#L(2)·" + std::to_string(r) + "#R(1)");
  }
  return strat(arrow(nat(k), nat(k)), gens, name);
}

inline Strategy doubler(int k) {
  return unary_nat(k, [](int m) { return 2 * m; }, "double");
}
inline Strategy incrementer(int k) {
  return unary_nat(k, [](int m) { return m + 1; }, "succ");
}

// σ₀ : I ⇒ nat, the constant 0.
inline Strategy sigma0(int k) {
  return strat(arrow(Arena::empty(), nat(k)), std::vector<std::string>{"q#R(*>1)·0#R(1)"}, "σ0");
}

// nat ⇒ nat asking its argument twice and answering the sum.
inline Strategy twice_sum(int k) {
  std::vector<std::string> gens;
  for (int m = 0; m <= k; ++m) {
    for (int n = 0; m + n <= k; ++n) {
      gens.push_back("q#R(*>1)·q#L(1>2)·" + std::to_string(m) + "#L(2)·q#L(1>4)·" + std::to_string(n) +
                     "#L(4)·" + std::to_string(m + n) + "#R(1)");
    }
  }
  return strat(arrow(nat(k), nat(k)), gens, "twice-sum");
}

// ρ : unit ⇒ unit answers before its argument returns.
inline Strategy rho() {
  return strat(arrow(unit(), unit()), std::vector<std::string>{"q#R(*>1)·q#L(1>2)·a#R(1)·a#L(2)"}, "ρ");
}

}  // namespace gamesem::fixtures

#endif  // GAMESEM_TESTS_FIXTURES_HPP_
