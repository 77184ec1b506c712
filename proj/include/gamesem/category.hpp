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

#ifndef GAMESEM_CATEGORY_HPP_
#define GAMESEM_CATEGORY_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gamesem/arena.hpp"
#include "gamesem/composition.hpp"
#include "gamesem/strategy.hpp"

namespace gamesem {

// Injective relabeling of one arena's moves into another's (-1 = no image).
struct Embedding {
  ArenaPtr source;
  ArenaPtr target;
  std::vector<int32_t> forward;
  std::vector<int32_t> backward;

  static Embedding from_bijection(const MoveBijection& f);
  // Tag-prefix rewriting as in retag(), but the target may have extra moves.
  static Embedding by_prefix(const ArenaPtr& source, const ArenaPtr& target,
                             const std::vector<std::pair<std::string, std::string>>& rules);
};

// The strategy transported along a structure-preserving relabeling.
Strategy relabel(const Strategy& s, const MoveBijection& f);

// Union of strategies embedded into a common arena. The embedded images
// must share nothing beyond the empty play.
Strategy embedded_union(const ArenaPtr& arena, const std::vector<std::pair<Strategy, Embedding>>& parts,
                        std::string name);

// Copy-cat between pairs of same-shape components of `arena`, given as tag
// paths. Every pending O-move whose justifier already has a copy may be
// copied; several pending moves yield several offered copies.
Strategy partner_copycat(const ArenaPtr& arena,
                         const std::vector<std::pair<std::string, std::string>>& components,
                         std::string name);

// κ_A on A ⇒ A.
Strategy copycat(const ArenaPtr& a);

// A morphism A → B of the category of saturated strategies.
struct Morphism {
  ArenaPtr source;
  ArenaPtr target;
  Strategy strategy;
};

// κ_A ; σ ; κ_B. Throws ArenaMismatch unless σ lives on an arrow arena.
Strategy saturate_strategy(const Strategy& s);
Morphism saturate(const Strategy& s);
Morphism identity(const ArenaPtr& a);
Morphism compose(const Morphism& f, const Morphism& g);

// The plays up to `depth` that are prefixes of some play of σ rearranged by
// swapping adjacent m·n into n·m whenever m is a P-move or n an O-move and n
// is not justified by m. Membership is decided by searching σ directly;
// `slack` bounds how many of σ's P-moves may be postponed past the prefix.
PlaySet permutation_closure(const Strategy& s, std::size_t depth, std::size_t slack = 4);
bool in_permutation_closure(const Strategy& s, const Play& p, std::size_t slack = 4);

// Equality of saturations at depth. Throws ArenaMismatch.
bool equivalent(const Strategy& a, const Strategy& b, std::size_t depth);
bool equivalent(const Morphism& a, const Morphism& b, std::size_t depth);

// Cartesian closed structure.
Morphism terminal(const ArenaPtr& a);
// ⟨f1, f0⟩ : B → A1 × A0. Throws SourceMismatch.
Morphism pair(const Morphism& f1, const Morphism& f0);
Strategy pair_strategies(const Strategy& s1, const Strategy& s0);
// π_i : A1 × A0 → A_i, with i = 1 the left component.
Morphism proj(int i, const ArenaPtr& a1, const ArenaPtr& a0);
Strategy proj_strategy(int i, const ArenaPtr& a1, const ArenaPtr& a0);
// ev : (A ⇒ B) × A → B, saturated; ev_strategy is the unsaturated copy-cat.
Morphism eval_morphism(const ArenaPtr& a, const ArenaPtr& b);
Strategy eval_strategy(const ArenaPtr& a, const ArenaPtr& b);
// λ : (A × B → C) to (A → (B ⇒ C)), and back.
Morphism transpose(const Morphism& f);
Morphism untranspose(const Morphism& f);
Strategy transpose_strategy(const Strategy& s);
Strategy untranspose_strategy(const Strategy& s);

}  // namespace gamesem

#endif  // GAMESEM_CATEGORY_HPP_
