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


#include "gamesem/lang/parser.hpp"

#include <cctype>
#include <set>
#include <string>
#include <vector>

#include "gamesem/error.hpp"

namespace gamesem::lang {
namespace {

struct Token {
  enum class Kind { kIdent, kNum, kSym, kEnd };
  Kind kind = Kind::kEnd;
  std::string text;
  int line = 1;
  int column = 1;
};

const std::set<std::string, std::less<>> kKeywords = {
    "tt",    "ff",    "if",   "then",   "else",  "chooseb", "choosen", "flip",
    "omega", "skip",  "new",  "in",     "escape", "par",    "run",     "grab",
    "release", "newsem", "nat", "bool", "com",   "optnat",  "var",     "sem",
    "unit",  "lazy"};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' ||
                                src[j] == '\'')) {
        ++j;
      }
      t.kind = Token::Kind::kIdent;
      t.text = std::string(src.substr(i, j - i));
      if (t.text == "lazy" && j < src.size() && src[j] == '*') {
        t.kind = Token::Kind::kSym;
        t.text = "&&";
        ++j;
      }
      advance(j - i);
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Token::Kind::kNum;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (src.substr(i, 2) == "\xCE\xBB") {  // λ
      t.kind = Token::Kind::kSym;
      t.text = "\\";
      i += 2;
      ++col;
    } else {
      static const char* const kTwo[] = {":=", "->", "&&"};
      t.kind = Token::Kind::kSym;
      for (const char* two : kTwo) {
        if (src.substr(i, 2) == two) t.text = two;
      }
      if (t.text.empty()) {
        if (std::string_view("\\:.()+-*/;!").find(static_cast<char>(c)) == std::string_view::npos) {
          throw SyntaxError("unexpected character '" + std::string(1, static_cast<char>(c)) + "'",
                            line, col);
        }
        t.text = std::string(1, static_cast<char>(c));
      }
      advance(t.text.size());
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  TermPtr whole_term() {
    auto t = term();
    expect_end();
    return t;
  }

  TypePtr whole_type() {
    auto t = type();
    expect_end();
    return t;
  }

  ArenaPtr whole_arena(int k) {
    auto a = arena_arrow(k);
    expect_end();
    return a;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool is_sym(std::string_view s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Token::Kind::kSym && peek(ahead).text == s;
  }
  bool is_kw(std::string_view s) const {
    return peek().kind == Token::Kind::kIdent && peek().text == s;
  }
  bool is_name() const {
    return peek().kind == Token::Kind::kIdent && !kKeywords.count(peek().text);
  }
  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    std::string found = t.kind == Token::Kind::kEnd ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(what + ", found " + found, t.line, t.column);
  }
  void expect_sym(std::string_view s) {
    if (!is_sym(s)) fail("expected '" + std::string(s) + "'");
    ++pos_;
  }
  void expect_kw(std::string_view s) {
    if (!is_kw(s)) fail("expected '" + std::string(s) + "'");
    ++pos_;
  }
  void expect_end() const {
    if (peek().kind != Token::Kind::kEnd) fail("unexpected trailing input");
  }
  std::string name() {
    if (!is_name()) fail("expected a variable name");
    return toks_[pos_++].text;
  }

  std::shared_ptr<Term> node(Term::Kind k, const Token& at) const {
    auto t = std::make_shared<Term>();
    t->kind = k;
    t->line = at.line;
    t->column = at.column;
    return t;
  }

  TermPtr term() {
    auto lhs = assign();
    if (is_sym(";")) {
      const Token at = peek();
      ++pos_;
      auto n = node(Term::Kind::kSeq, at);
      n->kids = {lhs, term()};
      return n;
    }
    return lhs;
  }

  TermPtr assign() {
    if (is_name() && is_sym(":=", 1)) {
      const Token at = peek();
      auto target = node(Term::Kind::kVar, at);
      target->name = name();
      ++pos_;
      auto n = node(Term::Kind::kAsg, at);
      n->kids = {target, additive()};
      return n;
    }
    return additive();
  }

  TermPtr additive() {
    auto lhs = multiplicative();
    while (is_sym("+") || is_sym("-")) {
      const Token at = peek();
      ++pos_;
      auto n = node(Term::Kind::kArith, at);
      n->op = at.text == "+" ? Op::kAdd : Op::kSub;
      n->kids = {lhs, multiplicative()};
      lhs = n;
    }
    return lhs;
  }

  TermPtr multiplicative() {
    auto lhs = application();
    while (is_sym("*") || is_sym("/") || is_sym("&&")) {
      const Token at = peek();
      ++pos_;
      auto n = node(Term::Kind::kArith, at);
      n->op = at.text == "*" ? Op::kMul : at.text == "/" ? Op::kDiv : Op::kLazyMul;
      n->kids = {lhs, application()};
      lhs = n;
    }
    return lhs;
  }

  bool starts_atom() const {
    if (peek().kind == Token::Kind::kNum || is_name()) return true;
    if (is_sym("(") || is_sym("!") || is_sym("\\")) return true;
    if (peek().kind != Token::Kind::kIdent) return false;
    static const std::set<std::string, std::less<>> kAtomKw = {
        "tt",  "ff",     "chooseb", "choosen", "flip", "omega", "skip",   "if",
        "new", "newsem", "escape",  "par",     "run",  "grab",  "release"};
    return kAtomKw.count(peek().text) > 0;
  }

  bool starts_binder() const {
    return is_sym("\\") || is_kw("if") || is_kw("new") || is_kw("newsem") || is_kw("escape");
  }

  TermPtr application() {
    if (!starts_atom()) fail("expected a term");
    bool last = starts_binder();
    auto head = atom();
    while (!last && starts_atom()) {
      const Token at = peek();
      last = starts_binder();
      auto n = node(Term::Kind::kApp, at);
      n->kids = {head, atom()};
      head = n;
    }
    return head;
  }

  TermPtr atom() {
    const Token at = peek();
    if (at.kind == Token::Kind::kNum) {
      ++pos_;
      auto n = node(Term::Kind::kNum, at);
      if (at.text.size() > 9) throw SyntaxError("numeral too large", at.line, at.column);
      n->number = std::stoi(at.text);
      return n;
    }
    if (is_name()) {
      auto n = node(Term::Kind::kVar, at);
      n->name = name();
      return n;
    }
    if (is_sym("(")) {
      ++pos_;
      auto t = term();
      expect_sym(")");
      return t;
    }
    if (is_sym("!")) {
      ++pos_;
      auto n = node(Term::Kind::kDer, at);
      n->kids = {atom()};
      return n;
    }
    if (is_sym("\\")) {
      ++pos_;
      auto n = node(Term::Kind::kLam, at);
      n->name = name();
      expect_sym(":");
      n->annot = type();
      expect_sym(".");
      n->kids = {term()};
      return n;
    }
    ++pos_;
    const std::string& kw = at.text;
    if (kw == "tt" || kw == "ff") {
      auto n = node(Term::Kind::kBool, at);
      n->truth = kw == "tt";
      return n;
    }
    if (kw == "chooseb") return node(Term::Kind::kChooseB, at);
    if (kw == "choosen") return node(Term::Kind::kChooseN, at);
    if (kw == "flip") return node(Term::Kind::kFlip, at);
    if (kw == "omega") return node(Term::Kind::kOmega, at);
    if (kw == "skip") return node(Term::Kind::kSkip, at);
    if (kw == "if") {
      auto n = node(Term::Kind::kIf, at);
      auto c = term();
      expect_kw("then");
      auto a = term();
      expect_kw("else");
      n->kids = {c, a, term()};
      return n;
    }
    if (kw == "new" || kw == "newsem" || kw == "escape") {
      auto n = node(kw == "new"      ? Term::Kind::kNew
                    : kw == "newsem" ? Term::Kind::kNewSem
                                     : Term::Kind::kCatch,
                    at);
      n->name = name();
      expect_kw("in");
      n->kids = {term()};
      return n;
    }
    if (kw == "par") {
      auto n = node(Term::Kind::kPar, at);
      auto a = atom();
      n->kids = {a, atom()};
      return n;
    }
    if (kw == "run" || kw == "grab" || kw == "release") {
      auto n = node(kw == "run"    ? Term::Kind::kRun
                    : kw == "grab" ? Term::Kind::kGrab
                                   : Term::Kind::kRelease,
                    at);
      n->kids = {atom()};
      return n;
    }
    --pos_;
    fail("expected a term");
  }

  TypePtr type() {
    auto lhs = type_atom();
    if (is_sym("->")) {
      ++pos_;
      return arrow_type(lhs, type());
    }
    return lhs;
  }

  TypePtr type_atom() {
    if (is_sym("(")) {
      ++pos_;
      auto t = type();
      expect_sym(")");
      return t;
    }
    if (peek().kind == Token::Kind::kIdent) {
      const std::string& s = peek().text;
      TypePtr t = s == "nat"      ? nat_type()
                  : s == "bool"   ? bool_type()
                  : s == "com"    ? com_type()
                  : s == "optnat" ? optnat_type()
                  : s == "var"    ? var_type()
                  : s == "sem"    ? sem_type()
                                  : nullptr;
      if (t) {
        ++pos_;
        return t;
      }
    }
    fail("expected a type");
  }

  ArenaPtr arena_arrow(int k) {
    auto lhs = arena_product(k);
    if (is_sym("->")) {
      ++pos_;
      return arrow(lhs, arena_arrow(k));
    }
    return lhs;
  }

  ArenaPtr arena_product(int k) {
    auto lhs = arena_atom(k);
    while (is_sym("*")) {
      ++pos_;
      lhs = product(lhs, arena_atom(k));
    }
    return lhs;
  }

  ArenaPtr arena_atom(int k) {
    if (is_sym("(")) {
      ++pos_;
      auto a = arena_arrow(k);
      expect_sym(")");
      return a;
    }
    if (peek().kind == Token::Kind::kIdent) {
      if (peek().text == "I") {
        ++pos_;
        return Arena::empty();
      }
      if (auto kind = parse_base_kind(peek().text)) {
        ++pos_;
        return base_arena(*kind, k);
      }
    }
    fail("expected an arena");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

TermPtr parse(std::string_view text) { return Parser(text).whole_term(); }

TypePtr parse_type(std::string_view text) { return Parser(text).whole_type(); }

ArenaPtr parse_arena(std::string_view text, int k) { return Parser(text).whole_arena(k); }

}  // namespace gamesem::lang
