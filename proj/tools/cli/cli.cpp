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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pgame/bayesian.hpp"
#include "pgame/dot.hpp"
#include "pgame/error.hpp"
#include "pgame/generate.hpp"
#include "pgame/io.hpp"
#include "report.hpp"

#ifndef PGAME_VERSION
#define PGAME_VERSION "0.0.0"
#endif

namespace pgame::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string tie_policy = "lex";
  std::string format = "text";
  std::optional<std::size_t> max_len;
  std::string through;
  std::string generate;
  std::uint64_t seed = 0;
  std::string to;
  std::string type_profile;
  std::string output;
};

TiePolicy Policy(const Options& o) {
  return o.tie_policy == "strict" ? TiePolicy::kStrict
                                  : TiePolicy::kLexicographic;
}

std::vector<std::string> Split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  return parts;
}

// "2x3x2" -> {2, 3, 2}
std::vector<std::size_t> ParseShape(const std::string& text) {
  std::vector<std::size_t> counts;
  for (const std::string& part : Split(text, 'x')) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || v == 0) {
      throw UsageError("--generate expects action counts like 2x3, got '" +
                       text + "'");
    }
    counts.push_back(v);
  }
  if (counts.empty()) throw UsageError("--generate needs at least one count");
  return counts;
}

Game LoadGame(const Options& o) {
  if (!o.generate.empty()) {
    if (!o.input.empty()) {
      throw UsageError("give either an input file or --generate, not both");
    }
    std::mt19937_64 rng(o.seed);
    return random_game(ParseShape(o.generate), -9, 9, rng);
  }
  if (o.input.empty()) throw UsageError("an input file is required");
  return read_game_file(o.input);
}

std::string InputName(const Options& o) {
  if (!o.generate.empty()) {
    return "generated:" + o.generate + ":seed=" + std::to_string(o.seed);
  }
  return o.input;
}

Json Header(const std::string& command, const Options& o) {
  Json h = Json::object();
  h["tool"] = "pgame";
  h["version"] = PGAME_VERSION;
  h["command"] = command;
  h["tie_policy"] = std::string(TiePolicyName(Policy(o)));
  h["input"] = InputName(o);
  return h;
}

Node ParseNode(const Game& game, const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw UsageError("--through expects player:action, got '" + text + "'");
  }
  const std::string player = text.substr(0, colon);
  const std::string action = text.substr(colon + 1);
  const auto p = game.find_player(player);
  if (!p) {
    throw Error(ErrorCode::kIndexOutOfRange, "unknown player '" + player + "'");
  }
  const auto a = game.find_action(*p, action);
  if (!a) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "unknown action '" + action + "' of player '" + player + "'");
  }
  return Node{*p, *a};
}

TypeProfile ParseTypeProfile(const BayesianGame& bg, const std::string& text) {
  const auto& data = bg.data();
  const std::vector<std::string> labels = Split(text, ',');
  if (labels.size() != data.players.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "--type-profile needs one type per player");
  }
  TypeProfile profile;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto& types = data.types[i];
    const auto it = std::find(types.begin(), types.end(), labels[i]);
    if (it == types.end()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "unknown type '" + labels[i] + "' of player '" +
                      data.players[i] + "'");
    }
    profile.push_back(static_cast<TypeIndex>(it - types.begin()));
  }
  return profile;
}

std::string Finish(const std::string& command, const Options& o,
                   Json body) {
  Json report = Header(command, o);
  for (auto& [key, value] : body.items()) report[key] = std::move(value);
  if (o.format == "machine") return report.dump(2) + "\n";
  return RenderText(command, report);
}

std::string Execute(const std::string& command, const Options& o) {
  if (o.format == "dot" && command != "analyze" && command != "cycles") {
    throw UsageError("--format dot is only available for analyze and cycles");
  }
  if (command == "bayes") {
    if (o.input.empty()) throw UsageError("an input file is required");
    const BayesianGame bg = read_bayes_file(o.input);
    Game game = [&] {
      if (o.to == "ex-ante") return ex_ante_game(bg);
      if (o.to == "interim") return interim_game(bg);
      if (!o.type_profile.empty()) {
        return interim_correlated_game(bg, ParseTypeProfile(bg, o.type_profile));
      }
      return interim_correlated_game(bg);
    }();
    if (o.format == "machine") return serialize_game(game);
    return RenderGameText(game);
  }

  const Game game = LoadGame(o);
  const TiePolicy policy = Policy(o);
  if (command == "analyze") {
    if (o.format == "dot") {
      const PeriodicityGraph graph = build_periodicity_graph(game, policy);
      return export_dot(graph, enumerate_all_cycles(graph, o.max_len));
    }
    return Finish(command, o, AnalyzeReport(game, policy, o.max_len));
  }
  if (command == "cycles") {
    if (o.through.empty()) throw UsageError("cycles requires --through");
    const Node through = ParseNode(game, o.through);
    const std::size_t max_len = o.max_len.value_or(game.num_nodes());
    if (o.format == "dot") {
      const PeriodicityGraph graph = build_periodicity_graph(game, policy);
      return export_dot(graph, enumerate_cycles(graph, through, max_len));
    }
    return Finish(command, o, CyclesReport(game, policy, through, max_len));
  }
  if (command == "mixed") return Finish(command, o, MixedReport(game));
  if (command == "nash") return Finish(command, o, NashReport(game));
  return Finish(command, o, CocoReport(game));
}

void AddCommon(CLI::App* sub, Options& o, bool game_input) {
  sub->add_option("input", o.input, "input file");
  sub->add_option("--tie-policy", o.tie_policy, "argmax tie handling")
      ->check(CLI::IsMember({"strict", "lex"}));
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "machine", "dot"}));
  sub->add_option("-o,--output", o.output, "write the report to a file");
  if (game_input) {
    sub->add_option("--generate", o.generate,
                    "use a random game with these action counts, e.g. 2x3");
    sub->add_option("--seed", o.seed, "seed for --generate");
  }
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Periodic strategies and equilibria of finite games", "pgame"};
  app.set_version_flag("--version", PGAME_VERSION);
  app.require_subcommand(1);
  Options o;

  auto* analyze = app.add_subcommand("analyze", "periodicity, IESDS, types");
  AddCommon(analyze, o, true);
  analyze->add_option("--max-len", o.max_len, "longest cycle to enumerate")
      ->check(CLI::PositiveNumber);

  auto* cycles = app.add_subcommand("cycles", "cycles through one node");
  AddCommon(cycles, o, true);
  cycles->add_option("--through", o.through, "node as player:action");
  cycles->add_option("--max-len", o.max_len, "longest cycle to enumerate")
      ->check(CLI::PositiveNumber);

  AddCommon(app.add_subcommand("mixed", "periodic mixed strategies"), o, true);
  AddCommon(app.add_subcommand("nash", "Nash equilibria"), o, true);
  AddCommon(app.add_subcommand("coco", "cooperative-competitive solution"), o,
            true);

  auto* bayes = app.add_subcommand("bayes", "complete-information transforms");
  AddCommon(bayes, o, false);
  bayes->add_option("--to", o.to, "target construction")
      ->required()
      ->check(CLI::IsMember({"ex-ante", "interim", "interim-correlated"}));
  bayes->add_option("--type-profile", o.type_profile,
                    "comma-separated types for interim-correlated");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out, o_err;
    const int code = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const std::string text = Execute(command, o);
    if (o.output.empty()) {
      out << text;
    } else {
      std::ofstream file(o.output, std::ios::binary);
      file << text;
      if (!file) {
        err << "error: cannot write " << o.output << "\n";
        return kExitInvalidInput;
      }
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kDegenerateArgmax ? kExitDegenerateArgmax
                                                    : kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace pgame::cli
