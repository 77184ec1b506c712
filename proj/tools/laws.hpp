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


// Law suites run by `gamesem laws`, parameterized by the copy-cat family so
// that a deliberately broken copy-cat can be injected.

#ifndef GAMESEM_TOOLS_LAWS_HPP_
#define GAMESEM_TOOLS_LAWS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>

#include "gamesem/category.hpp"

namespace gamesem::tools {

// The copy-cat based strategies the suites depend on.
struct Kit {
  std::function<Strategy(const ArenaPtr&)> copycat;
  std::function<Strategy(int, const ArenaPtr&, const ArenaPtr&)> proj;
  std::function<Strategy(const ArenaPtr&, const ArenaPtr&)> eval;
};

Kit library_kit();
// Copy-cats that never copy answers into their target component.
Kit answer_dropping_kit();

struct LawConfig {
  std::size_t depth = 6;
  std::size_t cases = 10;
  uint64_t seed = 0;
};

struct LawFailure {
  std::string suite;
  std::string detail;
  std::string witness;  // canonical text, empty when no play separates
};

// Runs every suite, printing one line per suite; stops at the first failure.
std::optional<LawFailure> run_laws(const Kit& kit, const LawConfig& config, std::ostream& out);

}  // namespace gamesem::tools

#endif  // GAMESEM_TOOLS_LAWS_HPP_
