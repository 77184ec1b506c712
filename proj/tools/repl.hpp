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


// Opponent REPL: the user plays O-moves, the strategy answers.

#ifndef GAMESEM_TOOLS_REPL_HPP_
#define GAMESEM_TOOLS_REPL_HPP_

#include <cstdint>
#include <istream>
#include <ostream>

#include "gamesem/strategy.hpp"

namespace gamesem::tools {

// Reads commands (a move number, `undo`, `quit`) until quit or end of input.
// When several P-moves are offered one is drawn with `seed`. Returns 0, or 4
// if some input line was rejected.
int run_repl(const Strategy& s, std::size_t depth, uint64_t seed, std::istream& in, std::ostream& out);

}  // namespace gamesem::tools

#endif  // GAMESEM_TOOLS_REPL_HPP_
