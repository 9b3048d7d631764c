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

#include "report.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "pgame/coco.hpp"
#include "pgame/mixed_equilibria.hpp"
#include "pgame/rationalizability.hpp"

namespace pgame::cli {

Json ToJson(const Rational& value) { return value.ToString(); }

Json StrategyJson(const Game& game, PlayerIndex player,
                  const MixedStrategy& strategy) {
  Json out = Json::object();
  for (std::size_t a = 0; a < strategy.size(); ++a) {
    out[game.action_label(player, a)] = ToJson(strategy[a]);
  }
  return out;
}

Json ProfileJson(const Game& game, const ActionProfile& profile) {
  Json out = Json::array();
  for (std::size_t i = 0; i < profile.size(); ++i) {
    out.push_back(game.action_label(i, profile[i]));
  }
  return out;
}

Json ActionSetsJson(const Game& game, const ActionSets& sets) {
  Json out = Json::object();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    Json labels = Json::array();
    for (ActionIndex a : sets[i]) labels.push_back(game.action_label(i, a));
    out[game.player_name(i)] = labels;
  }
  return out;
}

namespace {

Json MatrixJson(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(ToJson(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json PairJson(const std::array<Rational, 2>& values) {
  return Json::array({ToJson(values[0]), ToJson(values[1])});
}

Json GameShapeJson(const Game& game) {
  Json actions = Json::object();
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    actions[game.player_name(i)] = game.actions(i);
  }
  return actions;
}

Json GraphJson(const PeriodicityGraph& graph) {
  Json edges = Json::array();
  for (const Edge& e : graph.edges()) {
    edges.push_back(
        Json::array({graph.node_name(e.from), graph.node_name(e.to)}));
  }
  Json degenerate = Json::array();
  for (const Node& n : graph.degenerate_nodes()) {
    degenerate.push_back(graph.node_name(n));
  }
  Json out = Json::object();
  out["nodes"] = graph.num_nodes();
  out["edges"] = edges;
  out["degenerate_nodes"] = degenerate;
  return out;
}

Json CyclesJson(const PeriodicityGraph& graph,
                const std::vector<Cycle>& cycles) {
  Json out = Json::array();
  for (const Cycle& c : cycles) out.push_back(CycleJson(graph, c));
  return out;
}

}  // namespace

Json CycleJson(const PeriodicityGraph& graph, const Cycle& cycle) {
  Json nodes = Json::array();
  for (const Node& n : cycle.nodes) nodes.push_back(graph.node_name(n));
  Json players = Json::array();
  for (PlayerIndex p : cycle.player_sequence()) {
    players.push_back(graph.player_names()[p]);
  }
  Json out = Json::object();
  out["length"] = cycle.length();
  out["nodes"] = nodes;
  out["players"] = players;
  if (cycle.num_players == 2) {
    const PlayerIndex anchor = cycle.nodes.front().player;
    const TypeCount tc = type_count(cycle, anchor);
    Json count = Json::object();
    count["anchor"] = graph.player_names()[anchor];
    count["periodicity_number"] = tc.periodicity_number;
    count["types"] = tc.types;
    count["errors"] = tc.errors;
    out["type_count"] = count;
  }
  return out;
}

Json AnalyzeReport(const Game& game, TiePolicy policy,
                   std::optional<std::size_t> max_len) {
  const PeriodicityGraph graph = build_periodicity_graph(game, policy);
  const std::vector<Cycle> cycles = enumerate_all_cycles(graph, max_len);

  Json reach = Json::object();
  for (const Node& n : graph.nodes()) {
    Json walk = Json::array();
    for (const Node& step : reach_cycle(graph, n)) {
      walk.push_back(graph.node_name(step));
    }
    reach[graph.node_name(n)] = walk;
  }

  const SurvivorSet survivors =
      iesds(game, DominanceMode::kAllowMixedDominators);
  Json trace = Json::array();
  for (const Elimination& e : survivors.trace) {
    Json dominator = Json::object();
    for (const auto& [a, p] : e.dominator) {
      dominator[game.action_label(e.player, a)] = ToJson(p);
    }
    Json step = Json::object();
    step["round"] = e.round;
    step["player"] = game.player_name(e.player);
    step["action"] = game.action_label(e.player, e.action);
    step["dominator"] = dominator;
    trace.push_back(step);
  }

  ActionSets rationalizable(game.num_players());
  const ActionSets periodic = periodic_actions(graph);
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    for (ActionIndex a : periodic[i]) {
      const auto& kept = survivors.survivors[i];
      if (std::find(kept.begin(), kept.end(), a) != kept.end()) {
        rationalizable[i].push_back(a);
      }
    }
  }

  const Game reduced = reduced_game(game, survivors);
  const PeriodicityGraph reduced_graph =
      build_periodicity_graph(reduced, policy);
  Json reduced_json = Json::object();
  reduced_json["actions"] = GameShapeJson(reduced);
  reduced_json["periodic_actions"] =
      ActionSetsJson(reduced, periodic_actions(reduced_graph));
  reduced_json["cycles"] =
      CyclesJson(reduced_graph, enumerate_all_cycles(reduced_graph, max_len));

  Json out = Json::object();
  out["actions"] = GameShapeJson(game);
  out["graph"] = GraphJson(graph);
  out["periodic_actions"] = ActionSetsJson(game, periodic);
  out["cycles"] = CyclesJson(graph, cycles);
  out["reach"] = reach;
  out["survivors"] = ActionSetsJson(game, survivors.survivors);
  out["eliminations"] = trace;
  out["rationalizable_periodic"] = ActionSetsJson(game, rationalizable);
  out["reduced"] = reduced_json;
  return out;
}

Json CyclesReport(const Game& game, TiePolicy policy, const Node& through,
                  std::size_t max_len) {
  const PeriodicityGraph graph = build_periodicity_graph(game, policy);
  Json out = Json::object();
  out["through"] = graph.node_name(through);
  out["max_len"] = max_len;
  out["cycles"] = CyclesJson(graph, enumerate_cycles(graph, through, max_len));
  Json walk = Json::array();
  for (const Node& n : reach_cycle(graph, through)) {
    walk.push_back(graph.node_name(n));
  }
  out["reach"] = walk;
  return out;
}

Json MixedReport(const Game& game) {
  RequireTwoPlayers(game, "mixed");
  Json players = Json::object();
  for (PlayerIndex i = 0; i < 2; ++i) {
    Json entry = Json::object();
    const auto mixture = periodic_mixed(game, i);
    entry["feasible"] = mixture.has_value();
    if (mixture) {
      entry["strategy"] = StrategyJson(game, i, mixture->strategy);
      entry["guaranteed_payoff"] = ToJson(mixture->guaranteed_payoff);
      entry["dimension"] = mixture->dimension;
      Json vertices = Json::array();
      for (const MixedStrategy& v : mixture->vertices) {
        vertices.push_back(StrategyJson(game, i, v));
      }
      entry["vertices"] = vertices;
      entry["invariance_spread"] =
          ToJson(invariance_check(game, i, mixture->strategy));
    }
    players[game.player_name(i)] = entry;
  }
  Json out = Json::object();
  out["players"] = players;
  if (const auto profile = periodic_profile(game)) {
    out["profile_utilities"] = PairJson(profile->utilities);
  } else {
    out["profile_utilities"] = nullptr;
  }
  return out;
}

Json NashReport(const Game& game) {
  const auto equilibria = nash_support_enumeration(game);
  Json list = Json::array();
  for (const EquilibriumReport& eq : equilibria) {
    Json strategies = Json::object();
    for (PlayerIndex i = 0; i < 2; ++i) {
      strategies[game.player_name(i)] =
          StrategyJson(game, i, eq.profile.strategies[i]);
    }
    bool pure = true;
    for (const auto& s : eq.support) pure = pure && s.size() == 1;
    Json entry = Json::object();
    entry["strategies"] = strategies;
    entry["utilities"] = PairJson(eq.utilities);
    entry["support"] = ActionSetsJson(game, eq.support);
    entry["pure"] = pure;
    list.push_back(entry);
  }
  Json out = Json::object();
  out["count"] = equilibria.size();
  out["equilibria"] = list;
  return out;
}

Json CocoReport(const Game& game) {
  const Decomposition parts = decompose(game);
  const CocoSolution sol = coco_solution(game);
  Json tied = Json::array();
  for (const ActionProfile& p : sol.tied_profiles) {
    tied.push_back(ProfileJson(game, p));
  }
  Json zs = Json::object();
  for (PlayerIndex i = 0; i < 2; ++i) {
    zs[game.player_name(i)] =
        StrategyJson(game, i, sol.zero_sum_strategies[i]);
  }
  Json decomposition = Json::object();
  decomposition["cooperative"] = MatrixJson(parts.cooperative);
  decomposition["competitive"] = MatrixJson(parts.competitive);

  Json out = Json::object();
  out["decomposition"] = decomposition;
  out["cooperative_value"] = ToJson(sol.cooperative_value);
  out["competitive_value"] = ToJson(sol.competitive_value);
  out["profile"] = ProfileJson(game, sol.profile);
  out["tied_profiles"] = tied;
  out["side_payment"] = ToJson(sol.side_payment);
  out["final_payoffs"] = PairJson(sol.final_payoffs);
  out["competitive_strategies"] = zs;
  return out;
}

namespace {

bool IsScalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string ScalarText(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

bool IsFlat(const Json& j) {
  if (IsScalar(j)) return true;
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (!IsScalar(e)) return false;
  }
  return true;
}

std::string FlatText(const Json& j) {
  if (IsScalar(j)) return ScalarText(j);
  std::string s = "(";
  bool first = true;
  for (const auto& e : j) {
    if (!first) s += ", ";
    s += ScalarText(e);
    first = false;
  }
  return s + ")";
}

void Emit(std::ostringstream& os, const Json& j, int indent);

void EmitValue(std::ostringstream& os, const Json& v, int indent) {
  if (IsFlat(v)) {
    os << ' ' << FlatText(v) << '\n';
  } else if (v.empty()) {
    os << " none\n";
  } else {
    os << '\n';
    Emit(os, v, indent + 2);
  }
}

void Emit(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, v] : j.items()) {
      os << pad << key << ':';
      EmitValue(os, v, indent);
    }
  } else {
    for (const auto& e : j) {
      os << pad << '-';
      if (IsFlat(e)) {
        os << ' ' << FlatText(e) << '\n';
      } else {
        os << '\n';
        Emit(os, e, indent + 2);
      }
    }
  }
}

}  // namespace

std::string RenderText(const std::string& command, const Json& report) {
  std::ostringstream os;
  os << "pgame " << report.value("version", "") << " " << command
     << " (tie policy: " << report.value("tie_policy", "") << ")\n";
  Json body = report;
  for (const char* key : {"tool", "version", "command", "tie_policy"}) {
    body.erase(key);
  }
  Emit(os, body, 0);
  return os.str();
}

std::string RenderGameText(const Game& game) {
  std::ostringstream os;
  os << "players:";
  for (const auto& p : game.players()) os << ' ' << p;
  os << '\n';
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    const ActionProfile profile = game.profile_at(k);
    os << '(';
    for (std::size_t i = 0; i < profile.size(); ++i) {
      if (i) os << ", ";
      os << game.action_label(i, profile[i]);
    }
    os << "):";
    for (const Rational& u : game.payoff(profile)) os << ' ' << u;
    os << '\n';
  }
  return os.str();
}

}  // namespace pgame::cli
