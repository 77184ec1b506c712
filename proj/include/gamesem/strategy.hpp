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

#ifndef GAMESEM_STRATEGY_HPP_
#define GAMESEM_STRATEGY_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "gamesem/arena.hpp"
#include "gamesem/nominal.hpp"
#include "gamesem/play.hpp"

namespace gamesem {

using PlaySet = std::set<Play>;

// Intensional presentation of a strategy: the P-moves offered after a member
// play. Strategies are the least sets closed under these P-moves and under
// every legal O-move, so a kernel determines its strategy completely.
class Kernel {
 public:
  virtual ~Kernel() = default;
  // `p` is canonical and a member of the strategy.
  virtual std::vector<Step> p_moves(const Play& p) const = 0;
  virtual std::string describe() const { return "strategy"; }
};

using KernelPtr = std::shared_ptr<const Kernel>;
using NextMove = std::function<std::vector<Step>(const Play&)>;

// Kernel backed by a function.
class FunctionKernel : public Kernel {
 public:
  explicit FunctionKernel(NextMove f, std::string name = "next-move")
      : f_(std::move(f)), name_(std::move(name)) {}
  std::vector<Step> p_moves(const Play& p) const override { return f_(p); }
  std::string describe() const override { return name_; }

 private:
  NextMove f_;
  std::string name_;
};

// Kernel backed by an explicit table of P-children (generator tries,
// random strategies).
class TableKernel : public Kernel {
 public:
  explicit TableKernel(std::unordered_map<Play, std::vector<Step>, SequenceHash> table,
                       std::string name = "table")
      : table_(std::move(table)), name_(std::move(name)) {}
  std::vector<Step> p_moves(const Play& p) const override;
  std::string describe() const override { return name_; }

 private:
  std::unordered_map<Play, std::vector<Step>, SequenceHash> table_;
  std::string name_;
};

// Thread-safe memo in front of an expensive kernel.
class MemoKernel : public Kernel {
 public:
  explicit MemoKernel(KernelPtr inner) : inner_(std::move(inner)) {}
  std::vector<Step> p_moves(const Play& p) const override;
  std::string describe() const override { return inner_->describe(); }

 private:
  KernelPtr inner_;
  mutable std::mutex mu_;
  mutable std::unordered_map<Play, std::vector<Step>, SequenceHash> memo_;
};

class Strategy {
 public:
  Strategy(ArenaPtr arena, KernelPtr kernel);

  const ArenaPtr& arena() const { return arena_; }
  const KernelPtr& kernel() const { return kernel_; }
  std::string describe() const { return kernel_->describe(); }

  // Kernel output after checking each step is a legal P-move; sorted and
  // deduplicated. Throws IllegalNextMove.
  std::vector<Step> p_moves(const Play& p) const;

  // Members with at most `depth` occurrences, canonical. Memoized; safe to
  // call from several threads.
  const PlaySet& enumerate(std::size_t depth) const;

  // Membership of any justified sequence (canonicalized first).
  bool accepts(const JustifiedSequence& p) const;

 private:
  struct Cache {
    std::mutex mu;
    std::size_t depth = 0;
    bool started = false;
    // Snapshots per requested depth; the map owns stable storage.
    std::map<std::size_t, std::unique_ptr<PlaySet>> by_depth;
    PlaySet all;
  };

  ArenaPtr arena_;
  KernelPtr kernel_;
  std::shared_ptr<Cache> cache_;
};

// Least strategy containing the given plays. Throws NotAPlay.
Strategy strat(const ArenaPtr& arena, const std::vector<JustifiedSequence>& generators,
               std::string name = "strat");
// Same, reading each generator from the textual play format.
Strategy strat(const ArenaPtr& arena, const std::vector<std::string>& generators,
               std::string name = "strat");

// Least strategy closed under the next-move relation f.
Strategy strat_from_next(const ArenaPtr& arena, NextMove f, std::string name = "next-move");

// Single-O-move extensions of p that are plays.
std::vector<Step> o_extensions(const Arena& arena, const Play& p);

// Throws ArenaMismatch when the arenas differ.
bool equal_at_depth(const Strategy& a, const Strategy& b, std::size_t depth);
bool included_at_depth(const Strategy& a, const Strategy& b, std::size_t depth);

// Some play in the symmetric difference at depth, shortest first.
std::optional<Play> difference_witness(const Strategy& a, const Strategy& b, std::size_t depth);

// Reports closure violations of a play set cut at `depth`: missing prefixes
// and missing legal O-extensions of plays shorter than depth.
std::vector<std::string> closure_violations(const Arena& arena, const PlaySet& plays,
                                            std::size_t depth);

// JSON export: an array of plays, each an array of
// {"move", "tag", "just", "bind"} records, ordered length-lexicographically.
std::string to_json(const Arena& arena, const PlaySet& plays, int indent = -1);

}  // namespace gamesem

#endif  // GAMESEM_STRATEGY_HPP_
