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

#ifndef GAMESEM_PLAY_HPP_
#define GAMESEM_PLAY_HPP_

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gamesem/arena.hpp"
#include "gamesem/nominal.hpp"

namespace gamesem {

// A candidate next move on a canonical play: the move and the position of
// its justifier. The binder, when the move is a question, is implied by the
// canonical discipline (it is the new position).
struct Step {
  MoveId move = 0;
  Name justifier = kRoot;

  friend bool operator==(const Step&, const Step&) = default;
  friend auto operator<=>(const Step&, const Step&) = default;
};

// Appends a step to a canonical play, binding the new position for questions.
Play extend(const Arena& arena, const Play& p, Step step);

// Freshness of every binder against all earlier names.
bool is_justified_sequence(const JustifiedSequence& s);

// Definition of a play: the first occurrence is an initial move justified by
// the root, every later occurrence is justified by an earlier question that
// enables it. Throws UnknownMove for ids outside the arena.
bool is_play(const Arena& arena, const JustifiedSequence& s);

// All steps `m` such that p·m is a play (p canonical).
std::vector<Step> legal_steps(const Arena& arena, const Play& p);

using MovePredicate = std::function<bool(MoveId)>;

struct Deletion {
  JustifiedSequence sequence;
  // Chain map: each deleted binder goes to the (chained) name of its
  // justifier. Names absent from the map are fixed.
  std::map<Name, Name> chain;

  Name resolve(Name n) const {
    auto it = chain.find(n);
    return it == chain.end() ? n : it->second;
  }
};

// Deletes occurrences whose move satisfies `removed`, rerouting the
// justifiers of survivors through the chain of deleted questions.
Deletion delete_moves(const JustifiedSequence& s, const MovePredicate& removed);

// The occurrence at `index` (0-based) followed by every later occurrence
// hereditarily justified by it. Names are left untouched. Throws NotAQuestion
// when the seed binds nothing.
JustifiedSequence thread(const JustifiedSequence& s, std::size_t index);

// Replaces the justifier of the first occurrence with the root.
JustifiedSequence rebase_root(JustifiedSequence s);

// All order-preserving merges of p and q. Throws NameClash when a binder of
// one sequence is mentioned by the other.
std::vector<JustifiedSequence> interleavings(const JustifiedSequence& p,
                                             const JustifiedSequence& q);

// Textual format: occurrences joined by `·`, questions written
// `base#tag(j>b)`, answers `base#tag(j)`, the empty sequence as `ε`.
std::string to_text(const Arena& arena, const JustifiedSequence& s);
// Parses the textual format; names are kept as written. Throws ParseError or
// UnknownMove.
JustifiedSequence parse_sequence(const Arena& arena, std::string_view text);

// Sorts plays length-lexicographically on their textual form.
std::vector<Play> sorted_by_text(const Arena& arena, std::vector<Play> plays);

}  // namespace gamesem

#endif  // GAMESEM_PLAY_HPP_
