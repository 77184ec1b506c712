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

#include "gamesem/composition.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <sstream>

#include "gamesem/error.hpp"

namespace gamesem {

InteractionArena::InteractionArena(const ArenaPtr& sigma_arena, const ArenaPtr& tau_arena)
    : sigma_(sigma_arena), tau_(tau_arena) {
  if (sigma_->shape() != Arena::Shape::kArrow || tau_->shape() != Arena::Shape::kArrow) {
    throw ArenaMismatch("composition needs arrow arenas, got " + sigma_->describe() + " and " +
                        tau_->describe());
  }
  if (!(*sigma_->right() == *tau_->left())) {
    throw ArenaMismatch("cannot compose " + sigma_->describe() + " with " + tau_->describe());
  }
  a_ = sigma_->left()->size();
  b_ = sigma_->right()->size();
  result_ = arrow(sigma_->left(), tau_->right());
  arena_ = arrow(sigma_, tau_->right());
}

namespace {

JustifiedSequence translate(const JustifiedSequence& s, const std::function<MoveId(MoveId)>& f) {
  JustifiedSequence out = s;
  for (auto& o : out) o.move = f(o.move);
  return out;
}

}  // namespace

JustifiedSequence sigma_projection(const InteractionArena& ia, const JustifiedSequence& p) {
  auto d = delete_moves(p, [&](MoveId x) { return ia.part(x) == InteractionArena::Part::kC; });
  return translate(d.sequence, [&](MoveId x) { return ia.to_sigma(x); });
}

JustifiedSequence tau_projection(const InteractionArena& ia, const JustifiedSequence& p) {
  auto d = delete_moves(p, [&](MoveId x) { return ia.part(x) == InteractionArena::Part::kA; });
  return translate(d.sequence, [&](MoveId x) { return ia.to_tau(x); });
}

JustifiedSequence hide(const InteractionArena& ia, const JustifiedSequence& p) {
  auto d = delete_moves(p, [&](MoveId x) { return ia.part(x) == InteractionArena::Part::kB; });
  return translate(d.sequence, [&](MoveId x) { return ia.to_result(x); });
}

bool in_iteration(const Membership& sigma, const std::vector<MoveId>& seeds,
                  const JustifiedSequence& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (std::find(seeds.begin(), seeds.end(), s[i].move) == seeds.end()) continue;
    if (!sigma(canonicalize(rebase_root(thread(s, i))))) return false;
  }
  return true;
}

bool in_interaction(const InteractionArena& ia, const Membership& sigma, const Membership& tau,
                    const JustifiedSequence& p) {
  return tau(canonicalize(tau_projection(ia, p))) && sigma(sigma_projection(ia, p));
}

bool in_composite_interaction(const InteractionArena& ia, const Strategy& sigma,
                              const Strategy& tau, const JustifiedSequence& p) {
  const auto seeds = sigma.arena()->initial_moves();
  Membership s = [&](const JustifiedSequence& q) {
    return in_iteration([&](const JustifiedSequence& t) { return sigma.accepts(t); }, seeds, q);
  };
  Membership t = [&](const JustifiedSequence& q) { return tau.accepts(q); };
  return in_interaction(ia, s, t, p);
}

NextMove interaction_next(const Strategy& sigma, const Strategy& tau) {
  auto ia = std::make_shared<InteractionArena>(sigma.arena(), tau.arena());
  return [ia, sigma, tau](const Play& p) {
    std::vector<Step> out;
    // Justifiers in a projection always name questions, whose binders still
    // carry their global positions.
    auto back = [](const JustifiedSequence& proj, Name j) {
      return j.is_root() ? kRoot : *proj[j.value - 1].binder;
    };
    const auto tp = tau_projection(*ia, p);
    for (const auto& st : tau.p_moves(canonicalize(tp))) {
      out.push_back({ia->from_tau(st.move), back(tp, st.justifier)});
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (ia->part(p[i].move) != InteractionArena::Part::kB) continue;
      if (!sigma.arena()->is_initial(ia->to_sigma(p[i].move))) continue;
      const auto th = translate(thread(p, i), [&](MoveId x) { return ia->to_sigma(x); });
      for (const auto& st : sigma.p_moves(canonicalize(rebase_root(th)))) {
        out.push_back({ia->from_sigma(st.move), back(th, st.justifier)});
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
}

CompositionOptions& default_composition_options() {
  static CompositionOptions options;
  return options;
}

CompositionEngine::CompositionEngine(Strategy sigma, Strategy tau, CompositionOptions options)
    : sigma_(std::move(sigma)),
      tau_(std::move(tau)),
      options_(options),
      ia_(sigma_.arena(), tau_.arena()) {}

void CompositionEngine::push(InteractionState& s, MoveId x, int32_t just, int32_t vis) const {
  const auto g = static_cast<int32_t>(s.global.size());
  const Name gj = just < 0 ? kRoot : Name{static_cast<uint32_t>(just + 1)};
  s.global = extend(*ia_.arena(), s.global, {x, gj});
  s.global_vis.push_back(vis);
  if (vis >= 0) s.vis_global.push_back(g);
  const auto part = ia_.part(x);
  int32_t tau_pos = -1;
  int32_t thread = -1;
  int32_t thread_pos = -1;
  if (part != InteractionArena::Part::kA) {
    const Name tj = just < 0 ? kRoot : Name{static_cast<uint32_t>(s.global_tau[just] + 1)};
    s.tau = extend(*tau_.arena(), s.tau, {ia_.to_tau(x), tj});
    tau_pos = static_cast<int32_t>(s.tau.size()) - 1;
    s.tau_global.push_back(g);
  }
  if (part != InteractionArena::Part::kC) {
    const MoveId m = ia_.to_sigma(x);
    if (sigma_.arena()->is_initial(m)) {
      ThreadView t;
      t.play = extend(*sigma_.arena(), {}, {m, kRoot});
      t.global.push_back(g);
      s.threads.push_back(std::move(t));
      thread = static_cast<int32_t>(s.threads.size()) - 1;
      thread_pos = 0;
    } else {
      thread = s.global_thread[just];
      auto& t = s.threads[thread];
      const Name tj{static_cast<uint32_t>(s.global_thread_pos[just] + 1)};
      t.play = extend(*sigma_.arena(), t.play, {m, tj});
      t.global.push_back(g);
      thread_pos = static_cast<int32_t>(t.play.size()) - 1;
    }
  }
  s.global_tau.push_back(tau_pos);
  s.global_thread.push_back(thread);
  s.global_thread_pos.push_back(thread_pos);
}

int32_t CompositionEngine::resolve_visible(const InteractionState& s, int32_t g) const {
  while (g >= 0 && s.global_vis[g] < 0) {
    const Name j = s.global[g].justifier;
    g = j.is_root() ? -1 : static_cast<int32_t>(j.value) - 1;
  }
  return g < 0 ? -1 : s.global_vis[g];
}

std::vector<Step> CompositionEngine::offers(const InteractionState& s) const {
  std::vector<Step> out;
  auto global_name = [](const std::vector<int32_t>& positions, Name j) {
    return j.is_root() ? kRoot : Name{static_cast<uint32_t>(positions[j.value - 1] + 1)};
  };
  for (const auto& st : tau_.p_moves(s.tau)) {
    out.push_back({ia_.from_tau(st.move), global_name(s.tau_global, st.justifier)});
  }
  for (const auto& t : s.threads) {
    for (const auto& st : sigma_.p_moves(t.play)) {
      out.push_back({ia_.from_sigma(st.move), global_name(t.global, st.justifier)});
    }
  }
  return out;
}

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<uint32_t>& k) const {
    std::size_t h = k.size();
    for (auto x : k) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Projections determine every future of a state, so states that differ only
// in how independent threads were interleaved are merged.
std::vector<uint32_t> state_key(const InteractionState& s) {
  std::vector<uint32_t> k;
  auto add = [&](const Play& p, const std::vector<int32_t>& global) {
    k.push_back(static_cast<uint32_t>(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i) {
      k.push_back(p[i].move);
      k.push_back(p[i].justifier.value);
      k.push_back(static_cast<uint32_t>(s.global_vis[global[i]] + 1));
    }
  };
  add(s.tau, s.tau_global);
  for (const auto& t : s.threads) add(t.play, t.global);
  return k;
}

}  // namespace

std::vector<InteractionState> CompositionEngine::closure(std::vector<InteractionState> seeds,
                                                         std::size_t visible) const {
  std::unordered_map<std::vector<uint32_t>, std::size_t, KeyHash> index;
  std::vector<InteractionState> out;
  std::deque<std::size_t> work;
  auto insert = [&](InteractionState&& s) {
    auto key = state_key(s);
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(std::move(key), out.size());
      work.push_back(out.size());
      out.push_back(std::move(s));
    } else if (s.hidden < out[it->second].hidden) {
      out[it->second] = std::move(s);
      work.push_back(it->second);
    }
  };
  for (auto& s : seeds) insert(std::move(s));
  while (!work.empty()) {
    const InteractionState cur = out[work.front()];
    work.pop_front();
    if (!options_.admits(visible, cur.hidden + 1)) continue;
    for (const auto& o : offers(cur)) {
      if (ia_.part(o.move) != InteractionArena::Part::kB) continue;
      InteractionState next = cur;
      push(next, o.move, static_cast<int32_t>(o.justifier.value) - 1, -1);
      ++next.hidden;
      insert(std::move(next));
    }
  }
  return out;
}

void CompositionEngine::advance(const InteractionState& s, const Play& v,
                                std::vector<InteractionState>& out) const {
  const auto i = static_cast<int32_t>(v.size()) - 1;
  const Occurrence& target = v.back();
  const MoveId x = ia_.from_result(target.move);
  if (ia_.result()->is_opponent(target.move)) {
    const int32_t just =
        target.justifier.is_root() ? -1 : s.vis_global[target.justifier.value - 1];
    InteractionState next = s;
    push(next, x, just, i);
    out.push_back(std::move(next));
    return;
  }
  for (const auto& o : offers(s)) {
    if (o.move != x) continue;
    const int32_t g = static_cast<int32_t>(o.justifier.value) - 1;
    if (resolve_visible(s, g) + 1 != static_cast<int32_t>(target.justifier.value)) continue;
    InteractionState next = s;
    push(next, x, g, i);
    out.push_back(std::move(next));
  }
}

std::shared_ptr<const std::vector<InteractionState>> CompositionEngine::states(
    const Play& v) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(v);
    if (it != memo_.end()) return it->second;
  }
  std::vector<InteractionState> seeds;
  if (v.empty()) {
    seeds.emplace_back();
  } else {
    const Play prefix(v.begin(), v.end() - 1);
    for (const auto& s : *states(prefix)) advance(s, v, seeds);
  }
  auto result =
      std::make_shared<const std::vector<InteractionState>>(closure(std::move(seeds), v.size()));
  std::lock_guard<std::mutex> lock(mu_);
  // States are rebuilt from prefixes on demand, so the memo can be dropped
  // wholesale when it grows too large.
  if (memo_.size() >= kMemoLimit) memo_.clear();
  return memo_.emplace(v, std::move(result)).first->second;
}

std::vector<Step> CompositionEngine::p_moves(const Play& v) const {
  std::vector<Step> out;
  for (const auto& s : *states(v)) {
    for (const auto& o : offers(s)) {
      if (ia_.part(o.move) == InteractionArena::Part::kB) continue;
      const int32_t r = resolve_visible(s, static_cast<int32_t>(o.justifier.value) - 1);
      out.push_back({ia_.to_result(o.move), Name{static_cast<uint32_t>(r + 1)}});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

class CompositeKernel : public Kernel {
 public:
  explicit CompositeKernel(std::shared_ptr<CompositionEngine> engine)
      : engine_(std::move(engine)) {}
  std::vector<Step> p_moves(const Play& p) const override { return engine_->p_moves(p); }
  std::string describe() const override {
    return "(" + engine_->sigma().describe() + ";" + engine_->tau().describe() + ")";
  }

 private:
  std::shared_ptr<CompositionEngine> engine_;
};

}  // namespace

Strategy compose(const Strategy& sigma, const Strategy& tau, const CompositionOptions& options) {
  auto engine = std::make_shared<CompositionEngine>(sigma, tau, options);
  auto result = engine->interaction().result();
  return Strategy(result, std::make_shared<MemoKernel>(
                              std::make_shared<CompositeKernel>(std::move(engine))));
}

std::optional<std::string> trace_dump(const Strategy& sigma, const Strategy& tau, const Play& v,
                                      const CompositionOptions& options) {
  CompositionEngine engine(sigma, tau, options);
  const auto& ia = engine.interaction();
  if (!is_play(*ia.result(), v)) return std::nullopt;
  // Walk the prefixes so that only plays of the composite are traced.
  Play prefix;
  for (const auto& o : v) {
    if (!ia.result()->is_opponent(o.move)) {
      auto steps = engine.p_moves(prefix);
      if (!std::binary_search(steps.begin(), steps.end(), Step{o.move, o.justifier})) {
        return std::nullopt;
      }
    }
    prefix.push_back(o);
  }
  const auto states = engine.states(v);
  if (states->empty()) return std::nullopt;
  const auto& s = states->front();
  const auto& arena = *ia.arena();
  std::vector<std::array<std::string, 3>> rows;
  std::array<std::size_t, 3> width{1, 1, 1};
  std::array<std::string, 3> head{ia.sigma()->left()->describe(), ia.tau()->left()->describe(),
                                  ia.tau()->right()->describe()};
  for (int c = 0; c < 3; ++c) width[c] = std::max(width[c], head[c].size());
  for (std::size_t i = 0; i < s.global.size(); ++i) {
    const auto& o = s.global[i];
    const auto& m = arena.move(o.move);
    const int col = static_cast<int>(ia.part(o.move));
    const std::string local = m.tag.substr(col == 2 ? 1 : 2);
    std::string cell = m.base + (local.empty() ? "" : "#" + local) + "(" + to_string(o.justifier) +
                       (o.binder ? ">" + to_string(*o.binder) : "") + ")";
    std::array<std::string, 3> row;
    row[col] = cell;
    width[col] = std::max(width[col], cell.size());
    rows.push_back(std::move(row));
  }
  std::ostringstream out;
  auto line = [&](const std::array<std::string, 3>& r) {
    std::string text;
    for (int c = 0; c < 3; ++c) {
      std::string cell = r[c];
      cell.resize(width[c], ' ');
      text += cell;
      if (c < 2) text += " | ";
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << "\n";
  };
  line(head);
  out << std::string(width[0] + width[1] + width[2] + 6, '-') << "\n";
  for (const auto& r : rows) line(r);
  return out.str();
}

}  // namespace gamesem
