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


#include "repl.hpp"

#include <random>
#include <string>
#include <vector>

namespace gamesem::tools {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

int run_repl(const Strategy& s, std::size_t depth, uint64_t seed, std::istream& in, std::ostream& out) {
  const Arena& arena = *s.arena();
  std::mt19937_64 rng(seed);
  std::vector<Play> history{{}};
  int status = 0;

  // P answers until it has nothing more to say or the depth is reached.
  auto respond = [&](Play p) {
    std::size_t played = 0;
    while (p.size() < depth) {
      auto offers = s.p_moves(p);
      if (offers.empty()) break;
      auto step = offers[offers.size() == 1 ? 0 : rng() % offers.size()];
      p = extend(arena, p, step);
      ++played;
      out << "P: " << arena.label(step.move);
      if (offers.size() > 1) out << "  (one of " << offers.size() << ")";
      out << "\n";
    }
    if (played == 0) out << "P: no move available\n";
    return p;
  };

  std::string line;
  while (true) {
    const Play& p = history.back();
    out << "play: " << to_text(arena, p) << "\n";
    std::vector<Step> moves;
    if (p.size() < depth) moves = o_extensions(arena, p);
    if (moves.empty()) out << "no O-move available\n";
    for (std::size_t i = 0; i < moves.size(); ++i) {
      out << "  " << i + 1 << ") " << to_text(arena, Play{extend(arena, p, moves[i]).back()}) << "\n";
    }
    out << "> " << std::flush;
    if (!std::getline(in, line)) break;
    line = trim(line);
    if (line == "quit" || line == "q") break;
    if (line == "undo") {
      if (history.size() > 1) history.pop_back();
      continue;
    }
    std::size_t pick = 0;
    try {
      std::size_t used = 0;
      pick = std::stoul(line, &used);
      if (used != line.size()) pick = 0;
    } catch (const std::exception&) {
      pick = 0;
    }
    if (pick == 0 || pick > moves.size()) {
      out << "illegal choice: " << line << "\n";
      status = 4;
      continue;
    }
    out << "O: " << arena.label(moves[pick - 1].move) << "\n";
    history.push_back(respond(extend(arena, p, moves[pick - 1])));
  }
  out << "\n";
  return status;
}

}  // namespace gamesem::tools
