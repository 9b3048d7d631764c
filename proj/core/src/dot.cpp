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

#include "pgame/dot.hpp"

#include <set>
#include <sstream>

namespace pgame {
namespace {

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const PeriodicityGraph& graph,
                       const std::vector<Cycle>& highlight) {
  std::set<Node> hot_nodes;
  std::set<Edge> hot_edges;
  for (const Cycle& c : highlight) {
    for (std::size_t k = 0; k < c.nodes.size(); ++k) {
      hot_nodes.insert(c.nodes[k]);
      hot_edges.insert({c.nodes[k], c.nodes[(k + 1) % c.nodes.size()]});
    }
  }

  std::ostringstream os;
  os << "digraph periodicity {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=ellipse];\n";
  for (std::size_t i = 0; i < graph.num_players(); ++i) {
    os << "  subgraph " << Quote("cluster_" + graph.player_names()[i])
       << " {\n";
    os << "    label=" << Quote(graph.player_names()[i]) << ";\n";
    for (const Node& v : graph.nodes()) {
      if (v.player != i) continue;
      std::vector<std::string> attrs{"label=" + Quote(graph.node_name(v))};
      std::vector<std::string> styles;
      if (hot_nodes.contains(v)) {
        attrs.push_back("color=red");
        styles.push_back("bold");
      }
      if (graph.degenerate_nodes().contains(v)) styles.push_back("dashed");
      if (!styles.empty()) {
        std::string s;
        for (const auto& st : styles) s += (s.empty() ? "" : ",") + st;
        attrs.push_back("style=" + Quote(s));
      }
      os << "    " << Quote(graph.node_name(v)) << " [";
      for (std::size_t k = 0; k < attrs.size(); ++k) {
        os << (k ? ", " : "") << attrs[k];
      }
      os << "];\n";
    }
    os << "  }\n";
  }
  for (const Edge& e : graph.edges()) {
    os << "  " << Quote(graph.node_name(e.from)) << " -> "
       << Quote(graph.node_name(e.to))
       << " [label=" << Quote(graph.player_names()[e.to.player]);
    if (hot_edges.contains(e)) os << ", color=red, penwidth=2";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace pgame
