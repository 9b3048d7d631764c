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

#include "pgame/generate.hpp"

#include <string>

namespace pgame {
namespace {

std::string PlayerName(std::size_t i) {
  std::string name(1, static_cast<char>('A' + i % 26));
  if (i >= 26) name += std::to_string(i / 26);
  return name;
}

std::vector<std::string> NumberedLabels(std::size_t count,
                                        const std::string& prefix = "") {
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= count; ++k) {
    out.push_back(prefix + std::to_string(k));
  }
  return out;
}

std::vector<PayoffVector> RandomTable(std::size_t profiles, std::size_t n,
                                      std::int64_t low, std::int64_t high,
                                      std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(low, high);
  std::vector<PayoffVector> table(profiles, PayoffVector(n));
  for (auto& u : table) {
    for (auto& x : u) x = Rational(dist(rng));
  }
  return table;
}

}  // namespace

Game random_game(const std::vector<std::size_t>& action_counts,
                 std::int64_t low, std::int64_t high, std::mt19937_64& rng) {
  std::vector<std::string> players;
  std::vector<std::vector<std::string>> actions;
  std::size_t profiles = 1;
  for (std::size_t i = 0; i < action_counts.size(); ++i) {
    players.push_back(PlayerName(i));
    actions.push_back(NumberedLabels(action_counts[i]));
    profiles *= action_counts[i];
  }
  auto table = RandomTable(profiles, players.size(), low, high, rng);
  return Game(std::move(players), std::move(actions), std::move(table));
}

Game random_game(std::size_t min_players, std::size_t max_players,
                 std::size_t min_actions, std::size_t max_actions,
                 std::int64_t low, std::int64_t high, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> players(min_players, max_players);
  std::uniform_int_distribution<std::size_t> actions(min_actions, max_actions);
  std::vector<std::size_t> counts(players(rng));
  for (auto& c : counts) c = actions(rng);
  return random_game(counts, low, high, rng);
}

BayesianGame random_bayesian_game(std::size_t num_players,
                                  std::size_t num_actions,
                                  std::size_t num_thetas,
                                  std::size_t max_types, std::int64_t low,
                                  std::int64_t high, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> type_count(1, max_types);
  std::uniform_int_distribution<std::int64_t> weight(1, 9);

  BayesianGameData data;
  std::size_t profiles = 1;
  for (std::size_t i = 0; i < num_players; ++i) {
    data.players.push_back(PlayerName(i));
    data.actions.push_back(NumberedLabels(num_actions));
    data.types.push_back(
        NumberedLabels(type_count(rng), "t" + PlayerName(i)));
    profiles *= num_actions;
  }
  data.thetas = NumberedLabels(num_thetas, "theta");
  for (std::size_t s = 0; s < num_thetas; ++s) {
    data.payoffs.push_back(RandomTable(profiles, num_players, low, high, rng));
  }

  std::vector<std::size_t> type_sizes;
  for (const auto& t : data.types) type_sizes.push_back(t.size());
  std::int64_t total = 0;
  for (std::size_t s = 0; s < num_thetas; ++s) {
    ForEachProfile(type_sizes, [&](const ActionProfile& types) {
      const std::int64_t w = weight(rng);
      total += w;
      data.prior.push_back({s, types, Rational(w)});
    });
  }
  for (auto& e : data.prior) e.probability /= Rational(total);
  return BayesianGame(std::move(data));
}

}  // namespace pgame
