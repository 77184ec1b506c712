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


#ifndef GAMESEM_LANG_TYPECHECK_HPP_
#define GAMESEM_LANG_TYPECHECK_HPP_

#include "gamesem/lang/ast.hpp"

namespace gamesem::lang {

// Infers the type of t in gamma; later bindings shadow earlier ones.
// Throws TypeError naming the failing subterm.
TypePtr typecheck(const TypingContext& gamma, const Term& t);

}  // namespace gamesem::lang

#endif  // GAMESEM_LANG_TYPECHECK_HPP_
