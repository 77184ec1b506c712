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

#ifndef GAMESEM_NOMINAL_HPP_
#define GAMESEM_NOMINAL_HPP_

// Names for justification pointers, permutations acting on pointer
// sequences, and the positional canonical form that turns equivariant-set
// equality into plain set equality.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gamesem {

// A pointer name. Value 0 is the distinguished root `*`, which is never a
// binder and only justifies opening moves.
struct Name {
  std::uint32_t value = 0;

  constexpr bool is_root() const { return value == 0; }
  friend constexpr bool operator==(Name, Name) = default;
  friend constexpr auto operator<=>(Name, Name) = default;
};

inline constexpr Name kRoot{0};

std::string to_string(Name n);

using MoveId = std::uint32_t;

// One move occurrence `m a<b>`: a move, the name of its justifier and, for
// questions, the fresh name it binds.
struct Occurrence {
  MoveId move = 0;
  Name justifier = kRoot;
  std::optional<Name> binder;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

using JustifiedSequence = std::vector<Occurrence>;
// A play stored in canonical form (see canonicalize).
using Play = JustifiedSequence;

struct SequenceHash {
  std::size_t operator()(const JustifiedSequence& s) const noexcept;
};

// Finite-support bijection on numeric names; fixes the root.
class Permutation {
 public:
  Permutation() = default;
  // Builds a permutation from explicit (from, to) pairs. Throws NameClash if
  // the pairs are not a bijection on their support or touch the root.
  static Permutation from_pairs(const std::vector<std::pair<Name, Name>>& pairs);
  static Permutation transposition(Name a, Name b);

  Name operator()(Name n) const;
  Permutation inverse() const;
  // (this after other)(n) == this(other(n))
  Permutation after(const Permutation& other) const;
  bool is_identity() const { return map_.empty(); }
  const std::map<std::uint32_t, std::uint32_t>& support() const { return map_; }

 private:
  std::map<std::uint32_t, std::uint32_t> map_;
};

JustifiedSequence apply_permutation(const Permutation& pi, const JustifiedSequence& s);

// Renames binders so that the binder introduced at position i (1-based) is i.
// Justifiers are renamed consistently; root stays root. Throws
// MalformedSequence when a justifier is neither root nor bound earlier, or a
// binder is not fresh.
JustifiedSequence canonicalize(const JustifiedSequence& s);

bool is_canonical(const JustifiedSequence& s);

// Smallest positive name not in `used`.
Name fresh(const std::set<Name>& used);

// Every name (justifier or binder) mentioned in s, root excluded.
std::set<Name> names_of(const JustifiedSequence& s);

}  // namespace gamesem

#endif  // GAMESEM_NOMINAL_HPP_
