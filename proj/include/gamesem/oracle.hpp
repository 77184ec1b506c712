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

#ifndef GAMESEM_ORACLE_HPP_
#define GAMESEM_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>

#include "gamesem/arena.hpp"
#include "gamesem/composition.hpp"
#include "gamesem/strategy.hpp"

// Brute-force references for testing. Nothing here uses the composition
// engine; composition is computed from the extensional definitions.
namespace gamesem::oracle {

// Every play of `arena` with at most `depth` occurrences.
PlaySet brute_plays(const Arena& arena, std::size_t depth);

using Membership = std::function<bool(const Play&)>;

// Hides B in every interaction whose τ-projection is in τ and whose
// B-initial threads are all in σ, exploring sequences of the interaction
// arena directly. Visible length is bounded by `depth`, hidden moves by
// `options`.
PlaySet brute_compose(const ArenaPtr& sigma_arena, const Membership& sigma,
                      const ArenaPtr& tau_arena, const Membership& tau, std::size_t depth,
                      const CompositionOptions& options = default_composition_options());
PlaySet brute_compose(const Strategy& sigma, const Strategy& tau, std::size_t depth,
                      const CompositionOptions& options = default_composition_options());

struct RandomStrategySpec {
  ArenaPtr arena;
  std::size_t depth = 4;      // P-moves only in plays shorter than this
  uint64_t seed = 0;
  std::size_t branching = 2;  // at most this many P-moves after any play
};

// A strategy whose P-moves are drawn at random from the legal ones.
Strategy random_strategy(const RandomStrategySpec& spec);

// Random sub-strategy of `s`: keeps a random subset of its P-moves, so the
// result is included in `s` at every depth.
Strategy random_substrategy(const Strategy& s, std::size_t depth, uint64_t seed);

}  // namespace gamesem::oracle

#endif  // GAMESEM_ORACLE_HPP_
