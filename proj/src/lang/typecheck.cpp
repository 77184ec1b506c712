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


#include "gamesem/lang/typecheck.hpp"

#include <string>

#include "gamesem/error.hpp"

namespace gamesem::lang {
namespace {

[[noreturn]] void type_error(const Term& t, const std::string& what) {
  throw TypeError(std::to_string(t.line) + ":" + std::to_string(t.column) + ": in " + to_string(t) +
                  ": " + what);
}

class Checker {
 public:
  explicit Checker(TypingContext gamma) : gamma_(std::move(gamma)) {}

  TypePtr infer(const Term& t) {
    using K = Term::Kind;
    switch (t.kind) {
      case K::kVar:
        for (auto it = gamma_.rbegin(); it != gamma_.rend(); ++it) {
          if (it->first == t.name) return it->second;
        }
        type_error(t, "unbound variable " + t.name);
      case K::kLam: {
        auto body = bound(t.name, t.annot, *t.kids[0]);
        return arrow_type(t.annot, body);
      }
      case K::kApp: {
        auto f = infer(*t.kids[0]);
        if (f->kind != Type::Kind::kArrow) {
          type_error(t, "applying a non-function of type " + to_string(*f));
        }
        expect(*t.kids[1], *f->from);
        return f->to;
      }
      case K::kNum:
        if (t.number < 0) type_error(t, "negative numeral");
        return nat_type();
      case K::kBool: return bool_type();
      case K::kArith:
        expect(*t.kids[0], *nat_type());
        expect(*t.kids[1], *nat_type());
        return nat_type();
      case K::kIf: {
        expect(*t.kids[0], *bool_type());
        auto a = ground(*t.kids[1]);
        expect(*t.kids[2], *a);
        return a;
      }
      case K::kSeq:
        ground(*t.kids[0]);
        return ground(*t.kids[1]);
      case K::kChooseB:
      case K::kFlip: return bool_type();
      case K::kChooseN: return nat_type();
      case K::kOmega:
      case K::kSkip: return com_type();
      case K::kNew: {
        auto body = bound(t.name, var_type(), *t.kids[0]);
        if (!body->is_ground()) type_error(t, "block body must have ground type, got " + to_string(*body));
        return body;
      }
      case K::kAsg:
        expect(*t.kids[0], *var_type());
        expect(*t.kids[1], *nat_type());
        return nat_type();
      case K::kDer:
        expect(*t.kids[0], *var_type());
        return nat_type();
      case K::kCatch: {
        auto body = bound(t.name, com_type(), *t.kids[0]);
        if (!same_type(*body, *nat_type())) type_error(t, "expected nat body, got " + to_string(*body));
        return optnat_type();
      }
      case K::kPar:
        expect(*t.kids[0], *com_type());
        expect(*t.kids[1], *com_type());
        return com_type();
      case K::kRun:
        expect(*t.kids[0], *com_type());
        return com_type();
      case K::kNewSem: {
        auto body = bound(t.name, sem_type(), *t.kids[0]);
        if (!same_type(*body, *com_type())) type_error(t, "expected com body, got " + to_string(*body));
        return com_type();
      }
      case K::kGrab:
      case K::kRelease:
        expect(*t.kids[0], *sem_type());
        return com_type();
    }
    type_error(t, "unknown term form");
  }

 private:
  TypePtr bound(const std::string& name, TypePtr type, const Term& body) {
    gamma_.emplace_back(name, std::move(type));
    auto result = infer(body);
    gamma_.pop_back();
    return result;
  }

  void expect(const Term& t, const Type& want) {
    auto got = infer(t);
    if (!same_type(*got, want)) {
      type_error(t, "expected " + to_string(want) + ", got " + to_string(*got));
    }
  }

  TypePtr ground(const Term& t) {
    auto got = infer(t);
    if (!got->is_ground()) type_error(t, "expected a ground type, got " + to_string(*got));
    return got;
  }

  TypingContext gamma_;
};

}  // namespace

TypePtr typecheck(const TypingContext& gamma, const Term& t) { return Checker(gamma).infer(t); }

}  // namespace gamesem::lang
