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


#ifndef GAMESEM_LANG_INTERPRET_HPP_
#define GAMESEM_LANG_INTERPRET_HPP_

#include "gamesem/category.hpp"
#include "gamesem/lang/ast.hpp"

namespace gamesem::lang {

struct InterpretOptions {
  int nat_max = 3;
  // Off: constants enter unsaturated (the raw strategies they are defined by).
  bool saturate = true;
  // Hidden moves grow with the size of the term, so the interpreter's own
  // compositions get a wider budget than the library default.
  CompositionOptions composition{8};
};

// ⟦∅⟧ = I and ⟦Γ, x:θ⟧ = ⟦Γ⟧ × ⟦θ⟧.
ArenaPtr context_arena(const TypingContext& gamma, int k);

// ⟦Γ ⊢ t⟧ : ⟦Γ⟧ → ⟦θ⟧. Throws TypeError for ill-typed terms and for
// numerals above the bound.
Morphism interpret(const TypingContext& gamma, const Term& t, const InterpretOptions& options = {});

}  // namespace gamesem::lang

#endif  // GAMESEM_LANG_INTERPRET_HPP_
