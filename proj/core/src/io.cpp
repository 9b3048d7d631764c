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

#include "pgame/io.hpp"

#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "pgame/error.hpp"

namespace pgame {
namespace {

using nlohmann::json;

[[noreturn]] void ShapeError(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParseError, "at " + where + ": " + what);
}

json ParseJson(std::string_view document) {
  try {
    return json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte, document.size());
    for (std::size_t k = 0; k + 1 < end; ++k) {
      if (document[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": malformed JSON");
  }
}

const json& Field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) ShapeError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) ShapeError(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::string AsString(const json& v, const std::string& where) {
  if (!v.is_string()) ShapeError(where, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> StringList(const json& v, const std::string& where) {
  if (!v.is_array()) ShapeError(where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.push_back(AsString(v[k], where + "/" + std::to_string(k)));
  }
  return out;
}

std::vector<std::vector<std::string>> StringLists(const json& v,
                                                  const std::string& where) {
  if (!v.is_array()) ShapeError(where, "expected an array of arrays");
  std::vector<std::vector<std::string>> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.push_back(StringList(v[k], where + "/" + std::to_string(k)));
  }
  return out;
}

Rational AsRational(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) {
      return Rational::Parse(std::to_string(v.get<std::uint64_t>()));
    }
    return Rational(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    try {
      return Rational::Parse(v.get<std::string>());
    } catch (const Error& e) {
      ShapeError(where, e.what());
    }
  }
  if (v.is_number_float()) {
    ShapeError(where,
               "floating-point numbers are not exact; write \"p/q\" or a "
               "decimal string");
  }
  ShapeError(where, "expected an integer or a number string");
}

json RationalToJson(const Rational& x) {
  if (x.is_integer()) {
    const std::string s = x.ToString();
    try {
      std::size_t used = 0;
      const long long v = std::stoll(s, &used);
      if (used == s.size()) return json(static_cast<std::int64_t>(v));
    } catch (const std::out_of_range&) {
    }
  }
  return json(x.ToString());
}

// Walks the nested payoff arrays, adding every profile it finds. Arrays that
// are too short leave profiles absent (reported by validation); arrays that
// are too long are a shape error.
void ReadTable(const json& v, const std::vector<std::size_t>& sizes,
               ActionProfile& prefix, const std::string& where,
               std::map<ActionProfile, PayoffVector>& out) {
  const std::size_t depth = prefix.size();
  if (!v.is_array()) ShapeError(where, "expected an array");
  if (depth == sizes.size()) {
    PayoffVector u;
    for (std::size_t k = 0; k < v.size(); ++k) {
      u.push_back(AsRational(v[k], where + "/" + std::to_string(k)));
    }
    out.emplace(prefix, std::move(u));
    return;
  }
  if (v.size() > sizes[depth]) {
    ShapeError(where, "has " + std::to_string(v.size()) + " entries but player " +
                          std::to_string(depth) + " has " +
                          std::to_string(sizes[depth]) + " actions");
  }
  for (std::size_t k = 0; k < v.size(); ++k) {
    prefix.push_back(k);
    ReadTable(v[k], sizes, prefix, where + "/" + std::to_string(k), out);
    prefix.pop_back();
  }
}

std::vector<std::size_t> Sizes(const std::vector<std::vector<std::string>>& a) {
  std::vector<std::size_t> sizes;
  for (const auto& labels : a) sizes.push_back(labels.size());
  return sizes;
}

json TableToJson(const Game& game) {
  std::function<json(ActionProfile&)> build = [&](ActionProfile& prefix) {
    json arr = json::array();
    if (prefix.size() == game.num_players()) {
      for (const auto& x : game.payoff(prefix)) arr.push_back(RationalToJson(x));
      return arr;
    }
    for (std::size_t a = 0; a < game.num_actions(prefix.size()); ++a) {
      prefix.push_back(a);
      arr.push_back(build(prefix));
      prefix.pop_back();
    }
    return arr;
  };
  ActionProfile prefix;
  return build(prefix);
}

std::size_t IndexOf(const std::vector<std::string>& labels,
                    const std::string& name, const std::string& where) {
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (labels[k] == name) return k;
  }
  ShapeError(where, "unknown name '" + name + "'");
}

}  // namespace

Game parse_game(std::string_view document) {
  const json doc = ParseJson(document);
  GameData data;
  data.players = StringList(Field(doc, "players", ""), "/players");
  data.actions = StringLists(Field(doc, "actions", ""), "/actions");
  if (data.actions.size() != data.players.size()) {
    // Let game validation name the dimension problem.
    validate_game(data);
  }
  ActionProfile prefix;
  ReadTable(Field(doc, "payoffs", ""), Sizes(data.actions), prefix, "/payoffs",
            data.payoffs);
  return Game(data);
}

BayesianGame parse_bayes(std::string_view document) {
  const json doc = ParseJson(document);
  BayesianGameData data;
  data.players = StringList(Field(doc, "players", ""), "/players");
  data.actions = StringLists(Field(doc, "actions", ""), "/actions");
  data.thetas = StringList(Field(doc, "thetas", ""), "/thetas");
  data.types = StringLists(Field(doc, "types", ""), "/types");
  if (data.actions.size() != data.players.size() ||
      data.types.size() != data.players.size()) {
    throw Error(ErrorCode::kBadDimension,
                "players, actions and types must have the same length");
  }

  const json& prior = Field(doc, "prior", "");
  if (!prior.is_array()) ShapeError("/prior", "expected an array");
  for (std::size_t k = 0; k < prior.size(); ++k) {
    const std::string where = "/prior/" + std::to_string(k);
    const json& e = prior[k];
    if (!e.is_array() || e.size() != 3) {
      ShapeError(where, "expected [theta, [types...], probability]");
    }
    PriorEntry entry;
    entry.theta = IndexOf(data.thetas, AsString(e[0], where + "/0"), where);
    const auto names = StringList(e[1], where + "/1");
    if (names.size() != data.players.size()) {
      ShapeError(where + "/1", "expected one type per player");
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
      entry.types.push_back(IndexOf(data.types[i], names[i], where + "/1"));
    }
    entry.probability = AsRational(e[2], where + "/2");
    data.prior.push_back(std::move(entry));
  }

  const json& payoffs = Field(doc, "payoffs", "");
  if (!payoffs.is_object()) ShapeError("/payoffs", "expected an object");
  for (const auto& [name, table] : payoffs.items()) {
    IndexOf(data.thetas, name, "/payoffs");
  }
  const auto sizes = Sizes(data.actions);
  for (const auto& theta : data.thetas) {
    const std::string where = "/payoffs/" + theta;
    GameData state{data.players, data.actions, {}};
    ActionProfile prefix;
    ReadTable(Field(payoffs, theta.c_str(), "/payoffs"), sizes, prefix, where,
              state.payoffs);
    data.payoffs.push_back(Game(state).table());
  }
  return BayesianGame(std::move(data));
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kParseError, "cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Game read_game_file(const std::filesystem::path& path) {
  return parse_game(ReadTextFile(path));
}

BayesianGame read_bayes_file(const std::filesystem::path& path) {
  return parse_bayes(ReadTextFile(path));
}

std::string serialize_game(const Game& game) {
  json doc = json::object();
  doc["players"] = game.players();
  json actions = json::array();
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    actions.push_back(game.actions(i));
  }
  doc["actions"] = std::move(actions);
  doc["payoffs"] = TableToJson(game);
  return doc.dump(2) + "\n";
}

std::string serialize_bayes(const BayesianGame& bg) {
  json doc = json::object();
  doc["players"] = bg.players();
  json actions = json::array();
  json types = json::array();
  for (std::size_t i = 0; i < bg.num_players(); ++i) {
    actions.push_back(bg.actions(i));
    types.push_back(bg.types(i));
  }
  doc["actions"] = std::move(actions);
  doc["types"] = std::move(types);
  doc["thetas"] = bg.thetas();
  json prior = json::array();
  for (const auto& [key, p] : bg.prior()) {
    json names = json::array();
    for (std::size_t i = 0; i < key.second.size(); ++i) {
      names.push_back(bg.types(i)[key.second[i]]);
    }
    prior.push_back(json::array({bg.thetas()[key.first], names,
                                 RationalToJson(p)}));
  }
  doc["prior"] = std::move(prior);
  json payoffs = json::object();
  for (std::size_t s = 0; s < bg.num_thetas(); ++s) {
    payoffs[bg.thetas()[s]] = TableToJson(bg.state_game(s));
  }
  doc["payoffs"] = std::move(payoffs);
  return doc.dump(2) + "\n";
}

}  // namespace pgame
