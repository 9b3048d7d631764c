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

#ifndef PGAME_DOT_HPP
#define PGAME_DOT_HPP

#include <string>
#include <vector>

#include "pgame/periodicity.hpp"

namespace pgame {

// Graphviz digraph of a periodicity graph. Node ids are "player:action",
// edge labels name the target player, nodes and edges on a highlighted cycle
// are drawn bold red and degenerate nodes dashed. Output is deterministic.
std::string export_dot(const PeriodicityGraph& graph,
                       const std::vector<Cycle>& highlight = {});

}  // namespace pgame

#endif  // PGAME_DOT_HPP
