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

#ifndef PGAME_TOOLS_REPORT_HPP
#define PGAME_TOOLS_REPORT_HPP

#include <optional>
#include <string>

#include "json.hpp"
#include "pgame/bayesian.hpp"
#include "pgame/game.hpp"
#include "pgame/periodicity.hpp"

namespace pgame::cli {

using Json = nlohmann::ordered_json;

// Rationals are always written as strings so they re-parse exactly.
Json ToJson(const Rational& value);
Json StrategyJson(const Game& game, PlayerIndex player,
                  const MixedStrategy& strategy);
Json ProfileJson(const Game& game, const ActionProfile& profile);
Json ActionSetsJson(const Game& game, const ActionSets& sets);
Json CycleJson(const PeriodicityGraph& graph, const Cycle& cycle);

Json AnalyzeReport(const Game& game, TiePolicy policy,
                   std::optional<std::size_t> max_len);
Json CyclesReport(const Game& game, TiePolicy policy, const Node& through,
                  std::size_t max_len);
Json MixedReport(const Game& game);
Json NashReport(const Game& game);
Json CocoReport(const Game& game);

// Human-readable renderings of the reports above.
std::string RenderText(const std::string& command, const Json& report);
// Payoff table listing, one profile per line.
std::string RenderGameText(const Game& game);

}  // namespace pgame::cli

#endif  // PGAME_TOOLS_REPORT_HPP
