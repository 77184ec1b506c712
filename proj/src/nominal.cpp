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

#include "gamesem/nominal.hpp"

#include <unordered_map>

#include "gamesem/error.hpp"

namespace gamesem {

std::string to_string(Name n) {
  return n.is_root() ? std::string("*") : std::to_string(n.value);
}

std::size_t SequenceHash::operator()(const JustifiedSequence& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL ^ s.size();
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (const auto& o : s) {
    mix(o.move);
    mix(o.justifier.value);
    mix(o.binder ? o.binder->value + 1 : 0);
  }
  return h;
}

Permutation Permutation::from_pairs(const std::vector<std::pair<Name, Name>>& pairs) {
  Permutation p;
  std::set<std::uint32_t> images;
  for (auto [from, to] : pairs) {
    if (from.is_root() || to.is_root()) {
      throw NameClash("permutations must fix the root name");
    }
    if (p.map_.count(from.value) || !images.insert(to.value).second) {
      throw NameClash("permutation pairs are not injective");
    }
    p.map_[from.value] = to.value;
  }
  // A finite bijection must map its support onto itself.
  for (auto [from, to] : p.map_) {
    if (!p.map_.count(to)) {
      throw NameClash("permutation does not close over its support at " +
                      std::to_string(to));
    }
  }
  std::erase_if(p.map_, [](const auto& kv) { return kv.first == kv.second; });
  return p;
}

Permutation Permutation::transposition(Name a, Name b) {
  if (a == b) return {};
  return from_pairs({{a, b}, {b, a}});
}

Name Permutation::operator()(Name n) const {
  auto it = map_.find(n.value);
  return it == map_.end() ? n : Name{it->second};
}

Permutation Permutation::inverse() const {
  Permutation p;
  for (auto [from, to] : map_) p.map_[to] = from;
  return p;
}

Permutation Permutation::after(const Permutation& other) const {
  Permutation p;
  std::set<std::uint32_t> support;
  for (auto [k, v] : map_) support.insert(k);
  for (auto [k, v] : other.map_) support.insert(k);
  for (auto k : support) {
    auto img = (*this)(other(Name{k})).value;
    if (img != k) p.map_[k] = img;
  }
  return p;
}

JustifiedSequence apply_permutation(const Permutation& pi, const JustifiedSequence& s) {
  JustifiedSequence out;
  out.reserve(s.size());
  for (const auto& o : s) {
    Occurrence r{o.move, pi(o.justifier), std::nullopt};
    if (o.binder) r.binder = pi(*o.binder);
    out.push_back(r);
  }
  return out;
}

JustifiedSequence canonicalize(const JustifiedSequence& s) {
  std::unordered_map<std::uint32_t, std::uint32_t> renaming;
  std::set<std::uint32_t> seen;
  JustifiedSequence out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& o = s[i];
    Occurrence r{o.move, kRoot, std::nullopt};
    if (!o.justifier.is_root()) {
      auto it = renaming.find(o.justifier.value);
      if (it == renaming.end()) {
        throw MalformedSequence("justifier " + to_string(o.justifier) + " at position " +
                                std::to_string(i + 1) + " is not bound earlier");
      }
      r.justifier = Name{it->second};
      seen.insert(o.justifier.value);
    }
    if (o.binder) {
      if (o.binder->is_root() || seen.count(o.binder->value)) {
        throw MalformedSequence("binder " + to_string(*o.binder) + " at position " +
                                std::to_string(i + 1) + " is not fresh");
      }
      seen.insert(o.binder->value);
      const auto pos = static_cast<std::uint32_t>(i + 1);
      renaming[o.binder->value] = pos;
      r.binder = Name{pos};
    }
    out.push_back(r);
  }
  return out;
}

bool is_canonical(const JustifiedSequence& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& o = s[i];
    if (o.binder && o.binder->value != i + 1) return false;
    if (!o.justifier.is_root()) {
      auto j = o.justifier.value;
      if (j == 0 || j > i || !s[j - 1].binder) return false;
    }
  }
  return true;
}

Name fresh(const std::set<Name>& used) {
  std::uint32_t candidate = 1;
  for (auto n : used) {
    if (n.value < candidate) continue;
    if (n.value != candidate) break;
    ++candidate;
  }
  return Name{candidate};
}

std::set<Name> names_of(const JustifiedSequence& s) {
  std::set<Name> out;
  for (const auto& o : s) {
    if (!o.justifier.is_root()) out.insert(o.justifier);
    if (o.binder) out.insert(*o.binder);
  }
  return out;
}

}  // namespace gamesem
