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

#ifndef PGAME_GENERATE_HPP
#define PGAME_GENERATE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "pgame/bayesian.hpp"
#include "pgame/game.hpp"

namespace pgame {

// Game with `action_counts[i]` actions for player i and independent uniform
// integer payoffs in [low, high]. Players are named A, B, C, ... and actions
// 1, 2, 3, ...
Game random_game(const std::vector<std::size_t>& action_counts,
                 std::int64_t low, std::int64_t high, std::mt19937_64& rng);

// Uniform player count in [min_players, max_players] and action counts in
// [min_actions, max_actions].
Game random_game(std::size_t min_players, std::size_t max_players,
                 std::size_t min_actions, std::size_t max_actions,
                 std::int64_t low, std::int64_t high, std::mt19937_64& rng);

// Small Bayesian game with a full-support common prior whose masses are
// random positive integers normalized to 1.
BayesianGame random_bayesian_game(std::size_t num_players,
                                  std::size_t num_actions,
                                  std::size_t num_thetas,
                                  std::size_t max_types, std::int64_t low,
                                  std::int64_t high, std::mt19937_64& rng);

}  // namespace pgame

#endif  // PGAME_GENERATE_HPP
