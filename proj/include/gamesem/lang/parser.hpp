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


#ifndef GAMESEM_LANG_PARSER_HPP_
#define GAMESEM_LANG_PARSER_HPP_

#include <string_view>

#include "gamesem/arena.hpp"
#include "gamesem/lang/ast.hpp"

namespace gamesem::lang {

// Parses a whole term; throws SyntaxError with the offending line/column.
// `#` starts a comment that runs to the end of the line.
TermPtr parse(std::string_view text);

// θ ::= nat | bool | com | optnat | var | sem | θ -> θ
TypePtr parse_type(std::string_view text);

// Arena expressions extend types with `unit` and products `a * b`
// (binding tighter than `->`).
ArenaPtr parse_arena(std::string_view text, int k);

}  // namespace gamesem::lang

#endif  // GAMESEM_LANG_PARSER_HPP_
