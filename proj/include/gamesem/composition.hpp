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

#ifndef GAMESEM_COMPOSITION_HPP_
#define GAMESEM_COMPOSITION_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gamesem/arena.hpp"
#include "gamesem/nominal.hpp"
#include "gamesem/play.hpp"
#include "gamesem/strategy.hpp"

namespace gamesem {

// The arena (A ⇒ B) ⇒ C in which σ : A ⇒ B and τ : B ⇒ C interact, with the
// id translations to the three arenas involved. Because components occupy
// contiguous id ranges, every translation is an offset.
class InteractionArena {
 public:
  enum class Part { kA, kB, kC };

  // Throws ArenaMismatch unless both arenas are arrows sharing B.
  InteractionArena(const ArenaPtr& sigma_arena, const ArenaPtr& tau_arena);

  const ArenaPtr& arena() const { return arena_; }
  const ArenaPtr& sigma() const { return sigma_; }
  const ArenaPtr& tau() const { return tau_; }
  const ArenaPtr& result() const { return result_; }

  Part part(MoveId x) const { return x < a_ ? Part::kA : (x < a_ + b_ ? Part::kB : Part::kC); }
  MoveId to_sigma(MoveId x) const { return x; }
  MoveId to_tau(MoveId x) const { return x - a_; }
  MoveId to_result(MoveId x) const { return x < a_ ? x : x - b_; }
  MoveId from_sigma(MoveId m) const { return m; }
  MoveId from_tau(MoveId m) const { return m + a_; }
  MoveId from_result(MoveId m) const { return m < a_ ? m : m + b_; }

 private:
  ArenaPtr sigma_;
  ArenaPtr tau_;
  ArenaPtr result_;
  ArenaPtr arena_;
  std::size_t a_ = 0;
  std::size_t b_ = 0;
};

// Projections of an interaction sequence (names untouched, ids translated).
JustifiedSequence sigma_projection(const InteractionArena& ia, const JustifiedSequence& p);
JustifiedSequence tau_projection(const InteractionArena& ia, const JustifiedSequence& p);
// Hiding: deletes the B-moves, rerouting pointers through them.
JustifiedSequence hide(const InteractionArena& ia, const JustifiedSequence& p);

using Membership = std::function<bool(const JustifiedSequence&)>;

// Iteration on the initial moves `seeds`: every thread started by a seed
// occurrence, rebased at the root, is accepted by `sigma`.
bool in_iteration(const Membership& sigma, const std::vector<MoveId>& seeds,
                  const JustifiedSequence& s);

// Interaction: the τ-projection is in τ and the σ-projection is in σ.
bool in_interaction(const InteractionArena& ia, const Membership& sigma, const Membership& tau,
                    const JustifiedSequence& p);

// The full condition of composition: the σ-projection lies in the iteration
// of σ on the initial moves of B.
bool in_composite_interaction(const InteractionArena& ia, const Strategy& sigma,
                              const Strategy& tau, const JustifiedSequence& p);

// Interaction function: τ's moves on the τ-projection together with σ's
// moves on every B-initial thread, as steps on the interaction arena.
NextMove interaction_next(const Strategy& sigma, const Strategy& tau);

// Hidden B-moves are bounded per prefix: an interaction whose prefixes show
// `v` visible moves may contain at most hidden_per_visible * (v + 1) hidden
// moves.
struct CompositionOptions {
  std::size_t hidden_per_visible = 3;

  bool admits(std::size_t visible, std::size_t hidden) const {
    return hidden <= hidden_per_visible * (visible + 1);
  }
};

CompositionOptions& default_composition_options();

struct ThreadView {
  Play play;                    // over σ's arena, rooted at the B-initial
  std::vector<int32_t> global;  // global position (0-based) of each occurrence
};

// One interaction realizing a visible play, kept with its projections.
struct InteractionState {
  Play global;                      // over the interaction arena
  std::vector<int32_t> global_vis;  // visible index per global position, -1 if hidden
  std::vector<int32_t> global_tau;  // τ position, -1 for A-moves
  std::vector<int32_t> global_thread;
  std::vector<int32_t> global_thread_pos;
  std::vector<int32_t> vis_global;  // global position of each visible occurrence
  Play tau;
  std::vector<int32_t> tau_global;
  std::vector<ThreadView> threads;
  std::size_t hidden = 0;
};

// Incremental composition engine: for a visible play v of A ⇒ C it keeps
// every interaction state (up to projection equivalence) whose hiding is v.
class CompositionEngine {
 public:
  CompositionEngine(Strategy sigma, Strategy tau, CompositionOptions options);

  const InteractionArena& interaction() const { return ia_; }
  const Strategy& sigma() const { return sigma_; }
  const Strategy& tau() const { return tau_; }

  std::shared_ptr<const std::vector<InteractionState>> states(const Play& v) const;
  std::vector<Step> p_moves(const Play& v) const;

  // Offers of σ and τ in a state, as interaction-arena steps.
  std::vector<Step> offers(const InteractionState& s) const;

 private:
  void push(InteractionState& s, MoveId x, int32_t just, int32_t vis) const;
  int32_t resolve_visible(const InteractionState& s, int32_t g) const;
  std::vector<InteractionState> closure(std::vector<InteractionState> seeds,
                                        std::size_t visible) const;
  void advance(const InteractionState& s, const Play& v, std::vector<InteractionState>& out) const;

  static constexpr std::size_t kMemoLimit = 1 << 16;

  Strategy sigma_;
  Strategy tau_;
  CompositionOptions options_;
  InteractionArena ia_;
  mutable std::mutex mu_;
  mutable std::unordered_map<Play, std::shared_ptr<const std::vector<InteractionState>>,
                             SequenceHash>
      memo_;
};

// σ;τ on A ⇒ C. Throws ArenaMismatch.
Strategy compose(const Strategy& sigma, const Strategy& tau,
                 const CompositionOptions& options = default_composition_options());

// Three-column rendering (A | B | C) of one interaction realizing v, or
// nullopt when v is not in σ;τ.
std::optional<std::string> trace_dump(const Strategy& sigma, const Strategy& tau, const Play& v,
                                      const CompositionOptions& options =
                                          default_composition_options());

}  // namespace gamesem

#endif  // GAMESEM_COMPOSITION_HPP_
