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


#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "gamesem/category.hpp"
#include "gamesem/error.hpp"
#include "gamesem/lang/interpret.hpp"
#include "gamesem/lang/parser.hpp"
#include "gamesem/lang/typecheck.hpp"
#include "laws.hpp"
#include "repl.hpp"

using namespace gamesem;

namespace {

enum Exit { kOk = 0, kSyntax = 1, kType = 2, kLaw = 3, kInput = 4 };

struct Config {
  std::size_t depth = 8;
  int nat_max = 3;
  uint64_t seed = 0;
  std::string format = "text";
  bool no_saturate = false;
  bool inline_terms = false;
};

void add_common(CLI::App* cmd, Config& cfg, bool terms) {
  cmd->add_option("--depth", cfg.depth, "maximum play length")->capture_default_str();
  cmd->add_option("--nat-max", cfg.nat_max, "largest natural number")->capture_default_str()->check(CLI::NonNegativeNumber);
  cmd->add_option("--seed", cfg.seed, "seed for random choices")->capture_default_str();
  cmd->add_option("--format", cfg.format, "output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "json", "dot"}));
  cmd->add_flag("--no-saturate", cfg.no_saturate, "interpret constants without saturation");
  if (terms) cmd->add_flag("-e,--expr", cfg.inline_terms, "read terms from the arguments, not from files");
}

std::string source(const std::string& arg, const Config& cfg) {
  if (cfg.inline_terms) return arg;
  std::ifstream in(arg);
  if (!in) throw CLI::ValidationError("cannot read " + arg);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

lang::InterpretOptions options(const Config& cfg) {
  lang::InterpretOptions o;
  o.nat_max = cfg.nat_max;
  o.saturate = !cfg.no_saturate;
  return o;
}

struct Denotation {
  lang::TypePtr type;
  Morphism morphism;
};

Denotation denote(const std::string& arg, const Config& cfg) {
  auto term = lang::parse(source(arg, cfg));
  auto type = lang::typecheck({}, *term);
  return {type, lang::interpret({}, *term, options(cfg))};
}

int cmd_interpret(const std::string& arg, const Config& cfg) {
  auto d = denote(arg, cfg);
  const auto& s = d.morphism.strategy;
  if (cfg.format == "dot") {
    std::cout << to_dot(*s.arena());
  } else if (cfg.format == "json") {
    std::cout << to_json(*s.arena(), s.enumerate(cfg.depth), 2) << "\n";
  } else {
    const auto& plays = s.enumerate(cfg.depth);
    std::cout << "# " << to_string(*d.type) << ", " << plays.size() << " plays up to depth " << cfg.depth << "\n";
    for (const auto& p : sorted_by_text(*s.arena(), {plays.begin(), plays.end()})) {
      std::cout << to_text(*s.arena(), p) << "\n";
    }
  }
  return kOk;
}

int cmd_equiv(const std::string& first, const std::string& second, const Config& cfg) {
  auto a = denote(first, cfg);
  auto b = denote(second, cfg);
  if (!lang::same_type(*a.type, *b.type)) {
    std::cerr << "type mismatch: " << to_string(*a.type) << " vs " << to_string(*b.type) << "\n";
    return kType;
  }
  const auto& sa = a.morphism.strategy;
  const auto& sb = b.morphism.strategy;
  auto w = difference_witness(sa, sb, cfg.depth);
  if (!w) {
    std::cout << "EQUIVALENT at depth " << cfg.depth << "\n";
    return kOk;
  }
  std::cout << "DISTINGUISHED\nwitness: " << to_text(*sa.arena(), *w) << " ("
            << (sa.accepts(*w) ? "first" : "second") << " term only)\n";
  return kOk;
}

int cmd_laws(const Config& cfg, std::size_t cases, const std::string& mutant) {
  tools::LawConfig lc;
  lc.depth = cfg.depth;
  lc.cases = cases;
  lc.seed = cfg.seed;
  auto kit = mutant == "none" ? tools::library_kit() : tools::answer_dropping_kit();
  auto failure = tools::run_laws(kit, lc, std::cout);
  if (!failure) {
    std::cout << "all laws hold\n";
    return kOk;
  }
  std::cout << "counterexample in " << failure->suite << " (" << failure->detail << ")";
  if (!failure->witness.empty()) std::cout << ": " << failure->witness;
  std::cout << "\n";
  return kLaw;
}

int cmd_repl(const std::string& arg, const Config& cfg) {
  auto d = denote(arg, cfg);
  std::cout << "term : " << to_string(*d.type) << "; you are O (number, undo, quit)\n";
  return tools::run_repl(d.morphism.strategy, cfg.depth, cfg.seed, std::cin, std::cout);
}

int cmd_arena(const std::string& text, const Config& cfg) {
  auto a = lang::parse_arena(text, cfg.nat_max);
  if (cfg.format == "text") {
    for (MoveId m = 0; m < a->size(); ++m) {
      std::cout << a->label(m) << " " << (a->is_opponent(m) ? 'O' : 'P') << (a->is_question(m) ? 'Q' : 'A');
      if (a->is_initial(m)) std::cout << " initial";
      std::cout << "\n";
    }
  } else if (cfg.format == "json") {
    nlohmann::json moves = nlohmann::json::array();
    for (MoveId m = 0; m < a->size(); ++m) {
      nlohmann::json enabled = nlohmann::json::array();
      for (MoveId n : a->enabled_by(m)) enabled.push_back(a->label(n));
      moves.push_back({{"move", a->label(m)},
                       {"opponent", a->is_opponent(m)},
                       {"question", a->is_question(m)},
                       {"initial", a->is_initial(m)},
                       {"enables", enabled}});
    }
    std::cout << moves.dump(2) << "\n";
  } else {
    std::cout << to_dot(*a);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Game semantics explorer for PCF with effects"};
  app.require_subcommand(1);
  Config ci, ce, cl, cr, ca;

  std::string term, other, type_text, mutant = "none";
  std::size_t cases = 10;

  auto* interp = app.add_subcommand("interpret", "list the plays of a term's denotation");
  add_common(interp, ci, true);
  interp->add_option("term", term, "term file (or term with -e)")->required();

  auto* equiv = app.add_subcommand("equiv", "compare two terms by their saturated denotations");
  add_common(equiv, ce, true);
  equiv->add_option("first", term, "term file (or term with -e)")->required();
  equiv->add_option("second", other, "term file (or term with -e)")->required();

  auto* laws = app.add_subcommand("laws", "run the categorical law suites on random strategies");
  add_common(laws, cl, false);
  laws->get_option("--depth")->default_val(6);
  laws->add_option("--cases", cases, "cases per suite")->capture_default_str();
  laws->add_option("--mutant", mutant, "inject a broken copy-cat")
      ->capture_default_str()
      ->check(CLI::IsMember({"none", "copycat-drops-answers"}));

  auto* repl = app.add_subcommand("repl", "play Opponent against a term");
  add_common(repl, cr, true);
  repl->add_option("term", term, "term file (or term with -e)")->required();

  auto* arena = app.add_subcommand("arena", "draw the arena of a type");
  add_common(arena, ca, false);
  arena->get_option("--format")->default_val("dot");
  arena->add_option("type", type_text, "type expression, e.g. 'nat -> nat' or 'nat * bool -> unit'")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*interp) return cmd_interpret(term, ci);
    if (*equiv) return cmd_equiv(term, other, ce);
    if (*laws) return cmd_laws(cl, cases, mutant);
    if (*repl) return cmd_repl(term, cr);
    if (*arena) return cmd_arena(type_text, ca);
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return kSyntax;
  } catch (const TypeError& e) {
    std::cerr << "type error: " << e.what() << "\n";
    return kType;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kOk;
}
