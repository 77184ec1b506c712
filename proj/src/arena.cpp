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

#include "gamesem/arena.hpp"

#include <algorithm>
#include <sstream>

#include "gamesem/error.hpp"

namespace gamesem {

namespace {

std::string key(std::string_view base, std::string_view tag) {
  std::string k(base);
  k += '#';
  k += tag;
  return k;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

}  // namespace

std::optional<BaseKind> parse_base_kind(std::string_view name) {
  if (name == "unit") return BaseKind::kUnit;
  if (name == "com") return BaseKind::kCom;
  if (name == "bool") return BaseKind::kBool;
  if (name == "nat") return BaseKind::kNat;
  if (name == "optnat") return BaseKind::kOptNat;
  if (name == "var") return BaseKind::kVar;
  if (name == "sem") return BaseKind::kSem;
  return std::nullopt;
}

std::string_view to_string(BaseKind kind) {
  switch (kind) {
    case BaseKind::kUnit: return "unit";
    case BaseKind::kCom: return "com";
    case BaseKind::kBool: return "bool";
    case BaseKind::kNat: return "nat";
    case BaseKind::kOptNat: return "optnat";
    case BaseKind::kVar: return "var";
    case BaseKind::kSem: return "sem";
  }
  return "?";
}

void Arena::index(const std::vector<std::pair<MoveId, MoveId>>& enabling) {
  const auto n = moves_.size();
  successors_.assign(n, {});
  matrix_.assign(n * n, 0);
  by_label_.clear();
  for (MoveId m = 0; m < n; ++m) by_label_.emplace(key(moves_[m].base, moves_[m].tag), m);
  for (auto [from, to] : enabling) {
    if (from >= n || to >= n) throw ArenaMismatch("enabling pair refers to an unknown move");
    if (!matrix_[from * n + to]) {
      matrix_[from * n + to] = 1;
      successors_[from].push_back(to);
    }
  }
  for (auto& s : successors_) std::sort(s.begin(), s.end());
}

ArenaPtr Arena::from_parts(std::vector<Move> moves,
                           const std::vector<std::pair<MoveId, MoveId>>& enabling) {
  auto a = std::make_shared<Arena>();
  a->moves_ = std::move(moves);
  a->shape_ = a->moves_.empty() ? Shape::kEmpty : Shape::kBase;
  a->index(enabling);
  return a;
}

ArenaPtr Arena::empty() {
  static const ArenaPtr kEmpty = std::make_shared<Arena>();
  return kEmpty;
}

std::vector<std::pair<MoveId, MoveId>> Arena::enabling() const {
  std::vector<std::pair<MoveId, MoveId>> out;
  for (MoveId m = 0; m < size(); ++m) {
    for (auto n : successors_[m]) out.emplace_back(m, n);
  }
  return out;
}

std::vector<MoveId> Arena::initial_moves() const {
  std::vector<MoveId> out;
  for (MoveId m = 0; m < size(); ++m) {
    if (moves_[m].initial) out.push_back(m);
  }
  return out;
}

std::optional<MoveId> Arena::find(std::string_view base, std::string_view tag) const {
  auto it = by_label_.find(key(base, tag));
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

MoveId Arena::at(std::string_view base, std::string_view tag) const {
  if (auto m = find(base, tag)) return *m;
  throw UnknownMove("no move " + key(base, tag) + " in arena " + describe());
}

ArenaPtr Arena::component(std::string_view path) const {
  if (path.empty()) {
    // Arena is not enable_shared_from_this; rebuild a handle by copy.
    return std::make_shared<Arena>(*this);
  }
  const ArenaPtr& child = path.front() == 'L' ? left_ : right_;
  if ((shape_ != Shape::kProduct && shape_ != Shape::kArrow) || !child) {
    throw ArenaMismatch("arena " + describe() + " has no component at path " +
                        std::string(path));
  }
  return child->component(path.substr(1));
}

std::pair<MoveId, MoveId> Arena::range(std::string_view path) const {
  MoveId first = 0;
  MoveId last = 0;
  bool found = false;
  for (MoveId m = 0; m < size(); ++m) {
    if (!starts_with(moves_[m].tag, path)) continue;
    if (!found) {
      first = m;
      found = true;
    } else if (m != last) {
      throw ArenaMismatch("component " + std::string(path) + " is not contiguous");
    }
    last = m + 1;
  }
  return {first, found ? last : first};
}

std::string Arena::describe() const {
  if (!name_.empty()) return name_;
  switch (shape_) {
    case Shape::kEmpty: return "I";
    case Shape::kBase: {
      std::string s(to_string(kind_));
      if (kind_ == BaseKind::kNat || kind_ == BaseKind::kOptNat) s += std::to_string(bound_);
      return s;
    }
    case Shape::kProduct: return "(" + left_->describe() + " * " + right_->describe() + ")";
    case Shape::kArrow: return "(" + left_->describe() + " -> " + right_->describe() + ")";
  }
  return "?";
}

bool same_shape(const Arena& a, const Arena& b) {
  if (a.size() != b.size()) return false;
  for (MoveId m = 0; m < a.size(); ++m) {
    const auto& x = a.move(m);
    const auto& y = b.move(m);
    if (x.question != y.question || x.opponent != y.opponent || x.initial != y.initial) {
      return false;
    }
  }
  return a.enabling() == b.enabling();
}

ArenaPtr nat_like(int k, std::string q, std::string ans, bool optional_error) {
  auto a = std::make_shared<Arena>();
  a->moves_.push_back({q, "", true, true, true});
  std::vector<std::pair<MoveId, MoveId>> edges;
  for (int n = 0; n <= k; ++n) {
    std::string label = ans.empty() ? std::to_string(n) : ans + "(" + std::to_string(n) + ")";
    edges.emplace_back(0, static_cast<MoveId>(a->moves_.size()));
    a->moves_.push_back({std::move(label), "", false, false, false});
  }
  if (optional_error) {
    edges.emplace_back(0, static_cast<MoveId>(a->moves_.size()));
    a->moves_.push_back({"⦶", "", false, false, false});
  }
  a->shape_ = Arena::Shape::kBase;
  a->kind_ = optional_error ? BaseKind::kOptNat : BaseKind::kNat;
  a->bound_ = k;
  a->index(edges);
  return a;
}

ArenaPtr base_arena(BaseKind kind, int k) {
  if (k < 0) throw UnsupportedKind("natural-number bound must be non-negative");
  switch (kind) {
    case BaseKind::kUnit:
    case BaseKind::kCom: {
      auto a = std::make_shared<Arena>();
      a->moves_ = {{"q", "", true, true, true}, {"a", "", false, false, false}};
      a->shape_ = Arena::Shape::kBase;
      a->kind_ = kind;
      a->index({{0, 1}});
      return a;
    }
    case BaseKind::kBool: {
      auto a = std::make_shared<Arena>();
      a->moves_ = {{"q", "", true, true, true},
                   {"tt", "", false, false, false},
                   {"ff", "", false, false, false}};
      a->shape_ = Arena::Shape::kBase;
      a->kind_ = kind;
      a->index({{0, 1}, {0, 2}});
      return a;
    }
    case BaseKind::kNat: return nat_like(k, "q", "", false);
    case BaseKind::kOptNat: return nat_like(k, "q", "", true);
    case BaseKind::kVar: {
      // var = nat × (nat ⇒ nat): reads on the left, writes on the right.
      auto reads = nat_like(k, "rd", "val");
      auto writes = arrow(nat_like(k, "arg", "wr"), nat_like(k, "asg", "ok"));
      auto v = std::make_shared<Arena>(*product(reads, writes));
      v->kind_ = BaseKind::kVar;
      v->bound_ = k;
      v->name_ = "var" + std::to_string(k);
      return v;
    }
    case BaseKind::kSem: {
      auto unit = base_arena(BaseKind::kUnit);
      auto s = std::make_shared<Arena>(*product(unit, unit));
      s->kind_ = BaseKind::kSem;
      s->name_ = "sem";
      return s;
    }
  }
  throw UnsupportedKind("unsupported base arena");
}

ArenaPtr product(const ArenaPtr& a, const ArenaPtr& b) {
  auto p = std::make_shared<Arena>();
  std::vector<std::pair<MoveId, MoveId>> edges;
  const auto offset = static_cast<MoveId>(a->size());
  for (const auto& m : a->moves()) p->moves_.push_back({m.base, "L" + m.tag, m.question, m.opponent, m.initial});
  for (const auto& m : b->moves()) p->moves_.push_back({m.base, "R" + m.tag, m.question, m.opponent, m.initial});
  for (auto [x, y] : a->enabling()) edges.emplace_back(x, y);
  for (auto [x, y] : b->enabling()) edges.emplace_back(x + offset, y + offset);
  p->shape_ = Arena::Shape::kProduct;
  p->left_ = a;
  p->right_ = b;
  p->index(edges);
  return p;
}

ArenaPtr arrow(const ArenaPtr& a, const ArenaPtr& b) {
  auto p = std::make_shared<Arena>();
  std::vector<std::pair<MoveId, MoveId>> edges;
  const auto offset = static_cast<MoveId>(a->size());
  for (const auto& m : a->moves()) p->moves_.push_back({m.base, "L" + m.tag, m.question, !m.opponent, false});
  for (const auto& m : b->moves()) p->moves_.push_back({m.base, "R" + m.tag, m.question, m.opponent, m.initial});
  for (auto [x, y] : a->enabling()) edges.emplace_back(x, y);
  for (auto [x, y] : b->enabling()) edges.emplace_back(x + offset, y + offset);
  for (auto ib : b->initial_moves()) {
    for (auto ia : a->initial_moves()) edges.emplace_back(ib + offset, ia);
  }
  p->shape_ = Arena::Shape::kArrow;
  p->left_ = a;
  p->right_ = b;
  p->index(edges);
  return p;
}

MoveBijection MoveBijection::inverse() const {
  MoveBijection inv{target, source, std::vector<MoveId>(forward.size())};
  for (MoveId m = 0; m < forward.size(); ++m) inv.forward[forward[m]] = m;
  return inv;
}

bool MoveBijection::preserves_structure() const {
  if (source->size() != target->size() || forward.size() != source->size()) return false;
  std::vector<char> hit(target->size(), 0);
  for (MoveId m = 0; m < forward.size(); ++m) {
    if (forward[m] >= target->size() || hit[forward[m]]) return false;
    hit[forward[m]] = 1;
    const auto& x = source->move(m);
    const auto& y = target->move(forward[m]);
    if (x.question != y.question || x.opponent != y.opponent || x.initial != y.initial) return false;
  }
  for (MoveId m = 0; m < source->size(); ++m) {
    for (MoveId n = 0; n < source->size(); ++n) {
      if (source->enables(m, n) != target->enables(forward[m], forward[n])) return false;
    }
  }
  return true;
}

MoveBijection retag(const ArenaPtr& source, const ArenaPtr& target,
                    const std::vector<std::pair<std::string, std::string>>& rules) {
  MoveBijection bij{source, target, {}};
  bij.forward.reserve(source->size());
  for (MoveId m = 0; m < source->size(); ++m) {
    const auto& mv = source->move(m);
    std::optional<MoveId> image;
    for (const auto& [from, to] : rules) {
      if (starts_with(mv.tag, from)) {
        image = target->find(mv.base, to + mv.tag.substr(from.size()));
        break;
      }
    }
    if (!image) {
      throw ArenaMismatch("retagging has no image for " + source->label(m) + " in " +
                          target->describe());
    }
    bij.forward.push_back(*image);
  }
  return bij;
}

MoveBijection curry_iso(const ArenaPtr& a, const ArenaPtr& b, const ArenaPtr& c) {
  return retag(arrow(product(a, b), c), arrow(a, arrow(b, c)),
               {{"LL", "L"}, {"LR", "RL"}, {"R", "RR"}});
}

UnitIsos unit_isos(const ArenaPtr& a) {
  auto i = Arena::empty();
  return {retag(product(a, i), a, {{"L", ""}}), retag(product(i, a), a, {{"R", ""}}),
          retag(arrow(i, a), a, {{"R", ""}})};
}

std::vector<std::string> validate(const Arena& a) {
  std::vector<std::string> out;
  for (MoveId m = 0; m < a.size(); ++m) {
    const auto& mv = a.move(m);
    if (mv.initial && !(mv.question && mv.opponent)) {
      out.push_back("initial move " + a.label(m) + " is not an O-question");
    }
  }
  for (auto [m, n] : a.enabling()) {
    const auto edge = a.label(m) + " |- " + a.label(n);
    if (!a.is_question(m)) out.push_back("e1: " + edge + " is enabled by an answer");
    if (a.is_opponent(m) == a.is_opponent(n)) out.push_back("e2: " + edge + " keeps polarity");
    if (a.is_initial(n)) out.push_back("e3: " + edge + " enables an initial move");
  }
  // Reachability from the initial moves; this also rules out cycles, since
  // a cycle reachable from a source would need an enabled initial move or a
  // cycle through non-initial moves that we detect with a DFS colouring.
  std::vector<int> colour(a.size(), 0);
  bool cyclic = false;
  std::vector<std::pair<MoveId, std::size_t>> stack;
  for (MoveId root = 0; root < a.size(); ++root) {
    if (colour[root]) continue;
    stack.push_back({root, 0});
    colour[root] = 1;
    while (!stack.empty()) {
      auto& [m, next] = stack.back();
      const auto& succ = a.enabled_by(m);
      if (next < succ.size()) {
        auto n = succ[next++];
        if (colour[n] == 1) cyclic = true;
        if (colour[n] == 0) {
          colour[n] = 1;
          stack.push_back({n, 0});
        }
      } else {
        colour[m] = 2;
        stack.pop_back();
      }
    }
  }
  if (cyclic) out.push_back("enabling relation is not acyclic");
  std::vector<char> reached(a.size(), 0);
  std::vector<MoveId> work = a.initial_moves();
  for (auto m : work) reached[m] = 1;
  while (!work.empty()) {
    auto m = work.back();
    work.pop_back();
    for (auto n : a.enabled_by(m)) {
      if (!reached[n]) {
        reached[n] = 1;
        work.push_back(n);
      }
    }
  }
  for (MoveId m = 0; m < a.size(); ++m) {
    if (!reached[m]) out.push_back("unreachable move " + a.label(m));
  }
  return out;
}

std::string to_dot(const Arena& a) {
  std::ostringstream os;
  os << "digraph arena {\n";
  for (MoveId m = 0; m < a.size(); ++m) {
    os << "  n" << m << " [label=\"" << a.label(m) << " ["
       << (a.is_opponent(m) ? 'O' : 'P') << (a.is_question(m) ? 'Q' : 'A') << "]\"];\n";
  }
  auto initial = a.initial_moves();
  if (!initial.empty()) {
    os << "  { rank=source;";
    for (auto m : initial) os << " n" << m << ";";
    os << " }\n";
  }
  for (auto [m, n] : a.enabling()) os << "  n" << m << " -> n" << n << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace gamesem
