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


#ifndef GAMESEM_LANG_AST_HPP_
#define GAMESEM_LANG_AST_HPP_

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gamesem/arena.hpp"

namespace gamesem::lang {

struct Type;
using TypePtr = std::shared_ptr<const Type>;

struct Type {
  enum class Kind { kNat, kBool, kCom, kOptNat, kVar, kSem, kArrow };
  Kind kind = Kind::kNat;
  TypePtr from;
  TypePtr to;

  bool is_ground() const {
    return kind == Kind::kNat || kind == Kind::kBool || kind == Kind::kCom || kind == Kind::kOptNat;
  }
};

TypePtr nat_type();
TypePtr bool_type();
TypePtr com_type();
TypePtr optnat_type();
TypePtr var_type();
TypePtr sem_type();
TypePtr arrow_type(TypePtr from, TypePtr to);

bool same_type(const Type& a, const Type& b);
std::string to_string(const Type& t);

// The arena ⟦θ⟧ with naturals bounded by k.
ArenaPtr type_arena(const Type& t, int k);

struct Term;
using TermPtr = std::shared_ptr<const Term>;

enum class Op { kAdd, kSub, kMul, kDiv, kLazyMul };
std::string_view op_symbol(Op op);

struct Term {
  enum class Kind {
    kVar,
    kLam,
    kApp,
    kNum,
    kBool,
    kArith,
    kIf,
    kSeq,
    kChooseB,
    kChooseN,
    kFlip,
    kOmega,
    kSkip,
    kNew,
    kAsg,
    kDer,
    kCatch,
    kPar,
    kRun,
    kNewSem,
    kGrab,
    kRelease,
  };
  Kind kind = Kind::kSkip;
  std::string name;  // bound or referenced variable
  TypePtr annot;     // λ binder type
  int number = 0;    // numeral value
  bool truth = false;
  Op op = Op::kAdd;
  std::vector<TermPtr> kids;
  int line = 0;
  int column = 0;
};

// Renders a term back into the concrete grammar, fully parenthesized.
std::string to_string(const Term& t);

using TypingContext = std::vector<std::pair<std::string, TypePtr>>;

}  // namespace gamesem::lang

#endif  // GAMESEM_LANG_AST_HPP_
