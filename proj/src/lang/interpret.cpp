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


#include "gamesem/lang/interpret.hpp"

#include <map>
#include <string>

#include "gamesem/error.hpp"
#include "gamesem/lang/constants.hpp"
#include "gamesem/lang/typecheck.hpp"

namespace gamesem::lang {
namespace {

class Interpreter {
 public:
  Interpreter(TypingContext gamma, const InterpretOptions& options)
      : gamma_(std::move(gamma)), opt_(options) {}

  Strategy run(const Term& t) {
    using K = Term::Kind;
    const int k = opt_.nat_max;
    switch (t.kind) {
      case K::kVar: return variable(t);
      case K::kLam: return lambda(t.name, t.annot, *t.kids[0]);
      case K::kApp: {
        auto f = typecheck(gamma_, *t.kids[0]);
        auto pair = pair_strategies(run(*t.kids[0]), run(*t.kids[1]));
        return compose(pair, eval_strategy(arena(*f->from), arena(*f->to)), opt_.composition);
      }
      case K::kNum:
        if (t.number > k) {
          throw TypeError(std::to_string(t.line) + ":" + std::to_string(t.column) + ": numeral " +
                          std::to_string(t.number) + " exceeds the bound " + std::to_string(k));
        }
        return nullary(std::to_string(t.number), [&] { return constant_strategy(std::to_string(t.number), k); });
      case K::kBool: return nullary(t.truth ? "tt" : "ff", [&] { return constant_strategy(t.truth ? "tt" : "ff", k); });
      case K::kChooseB: return nullary("chooseb", [&] { return constant_strategy("chooseb", k); });
      case K::kFlip: return nullary("flip", [&] { return constant_strategy("flip", k); });
      case K::kChooseN: return nullary("choosen", [&] { return constant_strategy("choosen", k); });
      case K::kOmega: return nullary("omega", [&] { return constant_strategy("omega", k); });
      case K::kSkip: return nullary("skip", [&] { return constant_strategy("skip", k); });
      case K::kArith: {
        std::string op(op_symbol(t.op));
        return apply(constant("uncurried" + op, [&] { return uncurry(constant_strategy(op, k), 2); }), t.kids);
      }
      case K::kIf: {
        auto branch = arena(*typecheck(gamma_, *t.kids[1]));
        return apply(constant("if:" + branch->describe(), [&] { return uncurry(if_strategy(branch), 3); }),
                     t.kids);
      }
      case K::kSeq: {
        auto a = arena(*typecheck(gamma_, *t.kids[0]));
        auto b = arena(*typecheck(gamma_, *t.kids[1]));
        return apply(constant("seq:" + a->describe() + ":" + b->describe(),
                              [&] { return uncurry(seq_strategy(a, b), 2); }),
                     t.kids);
      }
      case K::kNew: {
        auto body = typecheck(with(t.name, var_type()), *t.kids[0]);
        auto c = constant("new:" + to_string(*body), [&] { return cell_strategy(k, arena(*body)); });
        return compose(lambda(t.name, var_type(), *t.kids[0]), c, opt_.composition);
      }
      case K::kCatch:
        return compose(lambda(t.name, com_type(), *t.kids[0]),
                       constant("catch", [&] { return constant_strategy("catch", k); }), opt_.composition);
      case K::kNewSem:
        return compose(lambda(t.name, sem_type(), *t.kids[0]),
                       constant("newsem", [&] { return constant_strategy("newsem", k); }), opt_.composition);
      case K::kAsg:
        return apply(constant("asg", [&] { return uncurry(constant_strategy("asg", k), 2); }), t.kids);
      case K::kPar:
        return apply(constant("par", [&] { return uncurry(constant_strategy("par", k), 2); }), t.kids);
      case K::kDer: return unary("der", *t.kids[0]);
      case K::kRun: return unary("run", *t.kids[0]);
      case K::kGrab: return unary("grab", *t.kids[0]);
      case K::kRelease: return unary("release", *t.kids[0]);
    }
    throw TypeError("unknown term form");
  }

  ArenaPtr context() const { return context_arena(gamma_, opt_.nat_max); }

 private:
  ArenaPtr arena(const Type& t) const { return type_arena(t, opt_.nat_max); }

  TypingContext with(const std::string& name, TypePtr type) const {
    TypingContext g = gamma_;
    g.emplace_back(name, std::move(type));
    return g;
  }

  Strategy variable(const Term& t) {
    std::size_t n = gamma_.size();
    for (std::size_t i = n; i-- > 0;) {
      if (gamma_[i].first != t.name) continue;
      // x_i sits at L^{n-1-i} R inside the context product.
      std::string path = "L" + std::string(n - 1 - i, 'L') + "R";
      auto a = ::gamesem::arrow(context(), arena(*gamma_[i].second));
      return partner_copycat(a, {{path, "R"}}, "π[" + t.name + "]");
    }
    throw TypeError(std::to_string(t.line) + ":" + std::to_string(t.column) + ": unbound variable " + t.name);
  }

  Strategy lambda(const std::string& name, const TypePtr& type, const Term& body) {
    gamma_.emplace_back(name, type);
    Strategy inner = run(body);
    gamma_.pop_back();
    return transpose_strategy(inner);
  }

  template <typename F>
  Strategy constant(const std::string& key, F build) {
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Strategy s = build();
    if (opt_.saturate) s = saturate_strategy(s);
    return cache_.emplace(key, s).first->second;
  }

  // Weakening of a closed constant on a ground arena into the context.
  template <typename F>
  Strategy nullary(const std::string& key, F build) {
    Strategy c = constant("closed:" + key, [&] {
      Strategy raw = build();
      auto lifted = ::gamesem::arrow(Arena::empty(), raw.arena());
      return embedded_union(lifted, {{raw, Embedding::by_prefix(raw.arena(), lifted, {{"", "R"}})}}, raw.describe());
    });
    auto a = ::gamesem::arrow(context(), c.arena()->right());
    return embedded_union(a, {{c, Embedding::by_prefix(c.arena(), a, {{"R", "R"}})}}, c.describe());
  }

  Strategy unary(const std::string& name, const Term& arg) {
    return compose(run(arg), constant(name, [&] { return constant_strategy(name, opt_.nat_max); }),
                   opt_.composition);
  }

  // ⟨…⟨⟦t₁⟧, ⟦t₂⟧⟩, …⟩ ; c
  Strategy apply(const Strategy& c, const std::vector<TermPtr>& args) {
    Strategy tuple = run(*args[0]);
    for (std::size_t i = 1; i < args.size(); ++i) tuple = pair_strategies(tuple, run(*args[i]));
    return compose(tuple, c, opt_.composition);
  }

  TypingContext gamma_;
  InterpretOptions opt_;
  std::map<std::string, Strategy> cache_;
};

}  // namespace

ArenaPtr context_arena(const TypingContext& gamma, int k) {
  ArenaPtr out = Arena::empty();
  for (const auto& [_, type] : gamma) out = product(out, type_arena(*type, k));
  return out;
}

Morphism interpret(const TypingContext& gamma, const Term& t, const InterpretOptions& options) {
  auto type = typecheck(gamma, t);
  Interpreter in(gamma, options);
  Strategy s = in.run(t);
  return {in.context(), type_arena(*type, options.nat_max), std::move(s)};
}

}  // namespace gamesem::lang
