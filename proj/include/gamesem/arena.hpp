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

#ifndef GAMESEM_ARENA_HPP_
#define GAMESEM_ARENA_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gamesem/nominal.hpp"

namespace gamesem {

// A move: symbolic base label plus the L/R injection path that places it in
// nested co-products, outermost injection first.
struct Move {
  std::string base;
  std::string tag;
  bool question = false;
  bool opponent = false;
  bool initial = false;

  friend bool operator==(const Move&, const Move&) = default;
};

enum class BaseKind { kUnit, kCom, kBool, kNat, kOptNat, kVar, kSem };

std::optional<BaseKind> parse_base_kind(std::string_view name);
std::string_view to_string(BaseKind kind);

class Arena;
using ArenaPtr = std::shared_ptr<const Arena>;

// ⟨M, Q, O, I, ⊢⟩ over a finite move set. Moves are addressed by dense ids;
// in a product or arrow the left component's moves come first, so every
// component occupies a contiguous id range.
class Arena {
 public:
  enum class Shape { kEmpty, kBase, kProduct, kArrow };

  // Builds an arena from raw parts without validating it (see validate()).
  static ArenaPtr from_parts(std::vector<Move> moves,
                             const std::vector<std::pair<MoveId, MoveId>>& enabling);
  static ArenaPtr empty();

  std::size_t size() const { return moves_.size(); }
  const Move& move(MoveId m) const { return moves_.at(m); }
  const std::vector<Move>& moves() const { return moves_; }

  bool is_question(MoveId m) const { return moves_[m].question; }
  bool is_opponent(MoveId m) const { return moves_[m].opponent; }
  bool is_initial(MoveId m) const { return moves_[m].initial; }
  bool enables(MoveId m, MoveId n) const { return matrix_[m * moves_.size() + n] != 0; }
  const std::vector<MoveId>& enabled_by(MoveId m) const { return successors_[m]; }
  std::vector<std::pair<MoveId, MoveId>> enabling() const;
  std::vector<MoveId> initial_moves() const;

  std::optional<MoveId> find(std::string_view base, std::string_view tag) const;
  // Throws UnknownMove.
  MoveId at(std::string_view base, std::string_view tag) const;
  std::string label(MoveId m) const { return moves_[m].base + "#" + moves_[m].tag; }

  Shape shape() const { return shape_; }
  BaseKind base_kind() const { return kind_; }
  int nat_bound() const { return bound_; }
  const ArenaPtr& left() const { return left_; }
  const ArenaPtr& right() const { return right_; }

  // The sub-arena reached by following an L/R path through products and
  // arrows (the component itself, with its own polarities).
  ArenaPtr component(std::string_view path) const;
  // Contiguous id range [first, last) of moves whose tag starts with path.
  std::pair<MoveId, MoveId> range(std::string_view path) const;

  // Readable type-like description, e.g. "(nat3 -> bool)".
  std::string describe() const;

  friend bool operator==(const Arena& a, const Arena& b) {
    return a.moves_ == b.moves_ && a.matrix_ == b.matrix_;
  }

 private:
  friend ArenaPtr base_arena(BaseKind, int);
  friend ArenaPtr product(const ArenaPtr&, const ArenaPtr&);
  friend ArenaPtr arrow(const ArenaPtr&, const ArenaPtr&);
  friend ArenaPtr nat_like(int, std::string, std::string, bool);
  void index(const std::vector<std::pair<MoveId, MoveId>>& enabling);

  std::vector<Move> moves_;
  std::vector<std::vector<MoveId>> successors_;
  std::vector<char> matrix_;
  std::unordered_map<std::string, MoveId> by_label_;
  Shape shape_ = Shape::kEmpty;
  BaseKind kind_ = BaseKind::kUnit;
  int bound_ = 0;
  std::string name_;
  ArenaPtr left_;
  ArenaPtr right_;
};

// Arenas with identical moves and enabling up to base labels (same size,
// polarities and edges by position).
bool same_shape(const Arena& a, const Arena& b);

// Base arenas. `k` bounds the natural numbers for nat/optnat/var.
ArenaPtr base_arena(BaseKind kind, int k = 3);
// nat-shaped arena with custom labels: question `q` and answers `ans(n)`
// (or plain numerals when `ans` is empty).
ArenaPtr nat_like(int k, std::string q, std::string ans, bool optional_error = false);
ArenaPtr product(const ArenaPtr& a, const ArenaPtr& b);
ArenaPtr arrow(const ArenaPtr& a, const ArenaPtr& b);

// Bijection between the moves of two arenas, as a dense id table.
struct MoveBijection {
  ArenaPtr source;
  ArenaPtr target;
  std::vector<MoveId> forward;

  MoveId operator()(MoveId m) const { return forward.at(m); }
  MoveBijection inverse() const;
  // True when polarity, question/answer, initiality and enabling are all
  // transported exactly.
  bool preserves_structure() const;
};

// Bijection induced by rewriting tag prefixes: a source move whose tag starts
// with rules[i].first is sent to the target move with the same base and tag
// rules[i].second + rest. Throws ArenaMismatch when some move has no image.
MoveBijection retag(const ArenaPtr& source, const ArenaPtr& target,
                    const std::vector<std::pair<std::string, std::string>>& rules);

// (A × B ⇒ C) ≅ (A ⇒ B ⇒ C)
MoveBijection curry_iso(const ArenaPtr& a, const ArenaPtr& b, const ArenaPtr& c);

struct UnitIsos {
  MoveBijection right_unit;  // A × I ≅ A
  MoveBijection left_unit;   // I × A ≅ A
  MoveBijection arrow_unit;  // I ⇒ A ≅ A
};
UnitIsos unit_isos(const ArenaPtr& a);

// Lists every violated arena condition; empty means valid.
std::vector<std::string> validate(const Arena& a);

// Graphviz rendering of the enabling DAG.
std::string to_dot(const Arena& a);

}  // namespace gamesem

#endif  // GAMESEM_ARENA_HPP_
