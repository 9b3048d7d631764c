// Copyright 2026 The pgame Authors
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

#ifndef PGAME_IO_HPP
#define PGAME_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "pgame/bayesian.hpp"
#include "pgame/game.hpp"

namespace pgame {

// Game files are JSON documents:
//
//   {
//     "players": ["A", "B"],
//     "actions": [["1", "2"], ["1", "2"]],
//     "payoffs": [[[2, 1], [0, 0]],
//                 [[0, 0], [1, 1]]]
//   }
//
// `payoffs` nests one array level per player in player order (player 0
// outermost); the innermost array holds one utility per player. Utilities
// are JSON integers or strings such as "-3", "48/49" or "0.25"; JSON
// floating-point numbers are rejected because they are not exact.
//
// Bayesian game files add "thetas", "types", a "prior" list of
// [theta, [type, ...], probability] triples, and "payoffs" as an object
// mapping each theta name to a nested table like the one above.
//
// Syntax and shape problems throw Error(kParseError) with line and column
// (syntax) or a JSON pointer (shape); semantic problems throw the
// corresponding validation Error.
Game parse_game(std::string_view document);
BayesianGame parse_bayes(std::string_view document);

Game read_game_file(const std::filesystem::path& path);
BayesianGame read_bayes_file(const std::filesystem::path& path);

// Canonical JSON text (two-space indent, trailing newline). Integers that fit
// in 64 bits are written as numbers, everything else as "p/q" strings.
std::string serialize_game(const Game& game);
std::string serialize_bayes(const BayesianGame& bg);

std::string ReadTextFile(const std::filesystem::path& path);

}  // namespace pgame

#endif  // PGAME_IO_HPP
