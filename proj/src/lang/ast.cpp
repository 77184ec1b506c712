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


#include "gamesem/lang/ast.hpp"

#include "gamesem/error.hpp"

namespace gamesem::lang {
namespace {

TypePtr base(Type::Kind k) {
  auto t = std::make_shared<Type>();
  t->kind = k;
  return t;
}

}  // namespace

TypePtr nat_type() {
  static const TypePtr t = base(Type::Kind::kNat);
  return t;
}
TypePtr bool_type() {
  static const TypePtr t = base(Type::Kind::kBool);
  return t;
}
TypePtr com_type() {
  static const TypePtr t = base(Type::Kind::kCom);
  return t;
}
TypePtr optnat_type() {
  static const TypePtr t = base(Type::Kind::kOptNat);
  return t;
}
TypePtr var_type() {
  static const TypePtr t = base(Type::Kind::kVar);
  return t;
}
TypePtr sem_type() {
  static const TypePtr t = base(Type::Kind::kSem);
  return t;
}

TypePtr arrow_type(TypePtr from, TypePtr to) {
  auto t = std::make_shared<Type>();
  t->kind = Type::Kind::kArrow;
  t->from = std::move(from);
  t->to = std::move(to);
  return t;
}

bool same_type(const Type& a, const Type& b) {
  if (a.kind != b.kind) return false;
  if (a.kind != Type::Kind::kArrow) return true;
  return same_type(*a.from, *b.from) && same_type(*a.to, *b.to);
}

std::string to_string(const Type& t) {
  switch (t.kind) {
    case Type::Kind::kNat: return "nat";
    case Type::Kind::kBool: return "bool";
    case Type::Kind::kCom: return "com";
    case Type::Kind::kOptNat: return "optnat";
    case Type::Kind::kVar: return "var";
    case Type::Kind::kSem: return "sem";
    case Type::Kind::kArrow: {
      std::string lhs = to_string(*t.from);
      if (t.from->kind == Type::Kind::kArrow) lhs = "(" + lhs + ")";
      return lhs + " -> " + to_string(*t.to);
    }
  }
  return "?";
}

ArenaPtr type_arena(const Type& t, int k) {
  switch (t.kind) {
    case Type::Kind::kNat: return base_arena(BaseKind::kNat, k);
    case Type::Kind::kBool: return base_arena(BaseKind::kBool, k);
    case Type::Kind::kCom: return base_arena(BaseKind::kCom, k);
    case Type::Kind::kOptNat: return base_arena(BaseKind::kOptNat, k);
    case Type::Kind::kVar: return base_arena(BaseKind::kVar, k);
    case Type::Kind::kSem: return base_arena(BaseKind::kSem, k);
    case Type::Kind::kArrow: return arrow(type_arena(*t.from, k), type_arena(*t.to, k));
  }
  throw UnsupportedKind("unknown type");
}

std::string_view op_symbol(Op op) {
  switch (op) {
    case Op::kAdd: return "+";
    case Op::kSub: return "-";
    case Op::kMul: return "*";
    case Op::kDiv: return "/";
    case Op::kLazyMul: return "&&";
  }
  return "?";
}

std::string to_string(const Term& t) {
  auto kid = [&](std::size_t i) { return to_string(*t.kids.at(i)); };
  switch (t.kind) {
    case Term::Kind::kVar: return t.name;
    case Term::Kind::kLam: return "(\\" + t.name + ":" + to_string(*t.annot) + ". " + kid(0) + ")";
    case Term::Kind::kApp: return "(" + kid(0) + " " + kid(1) + ")";
    case Term::Kind::kNum: return std::to_string(t.number);
    case Term::Kind::kBool: return t.truth ? "tt" : "ff";
    case Term::Kind::kArith:
      return "(" + kid(0) + " " + std::string(op_symbol(t.op)) + " " + kid(1) + ")";
    case Term::Kind::kIf: return "(if " + kid(0) + " then " + kid(1) + " else " + kid(2) + ")";
    case Term::Kind::kSeq: return "(" + kid(0) + "; " + kid(1) + ")";
    case Term::Kind::kChooseB: return "chooseb";
    case Term::Kind::kChooseN: return "choosen";
    case Term::Kind::kFlip: return "flip";
    case Term::Kind::kOmega: return "omega";
    case Term::Kind::kSkip: return "skip";
    case Term::Kind::kNew: return "(new " + t.name + " in " + kid(0) + ")";
    case Term::Kind::kAsg: return "(" + kid(0) + " := " + kid(1) + ")";
    case Term::Kind::kDer: return "!" + kid(0);
    case Term::Kind::kCatch: return "(escape " + t.name + " in " + kid(0) + ")";
    case Term::Kind::kPar: return "(par " + kid(0) + " " + kid(1) + ")";
    case Term::Kind::kRun: return "(run " + kid(0) + ")";
    case Term::Kind::kNewSem: return "(newsem " + t.name + " in " + kid(0) + ")";
    case Term::Kind::kGrab: return "(grab " + kid(0) + ")";
    case Term::Kind::kRelease: return "(release " + kid(0) + ")";
  }
  return "?";
}

}  // namespace gamesem::lang
