// Copyright 2026 The monopart Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MONOPART_JSON_IO_HPP
#define MONOPART_JSON_IO_HPP

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "monopart/cover.hpp"
#include "monopart/errors.hpp"
#include "monopart/graph.hpp"
#include "monopart/oracle.hpp"
#include "monopart/structure.hpp"
#include "monopart/trace.hpp"

namespace monopart {

using Json = nlohmann::json;

inline Json graph_to_json(const Graph& g) {
  return Json{{"n_top", g.n_top()}, {"n_bot", g.n_bot()}, {"rows", g.rows()}};
}

inline Graph graph_from_json(const Json& j) {
  try {
    const auto n_top = j.at("n_top").get<std::size_t>();
    const auto n_bot = j.at("n_bot").get<std::size_t>();
    const auto rows = j.at("rows").get<std::vector<std::string>>();
    if (rows.size() != n_top)
      throw InvalidInput("expected " + std::to_string(n_top) + " rows, got " +
                         std::to_string(rows.size()));
    Graph g = Graph::from_rows(rows, n_bot);
    if (g.n_bot() != n_bot)
      throw InvalidInput("rows have length " + std::to_string(g.n_bot()) +
                         ", expected " + std::to_string(n_bot));
    return g;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed graph JSON: ") + e.what());
  }
}

inline Graph graph_from_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("JSON parse error: ") + e.what());
  }
  return graph_from_json(j);
}

inline Json matching_to_json(const ConnectedMatching& m) {
  Json pairs = Json::array();
  for (const auto& [t, b] : m.pairs) pairs.push_back({t, b});
  return Json{{"colour", std::string(1, colour_char(m.colour))}, {"pairs", pairs}};
}

inline Json cover_to_json(const Cover& cov) {
  Json ms = Json::array();
  for (const auto& m : cov.matchings) ms.push_back(matching_to_json(m));
  return Json{{"matchings", ms},
              {"uncovered_top", cov.uncovered_top},
              {"uncovered_bot", cov.uncovered_bot}};
}

inline Cover cover_from_json(const Json& j) {
  try {
    Cover cov;
    for (const auto& jm : j.at("matchings")) {
      const auto tag = jm.at("colour").get<std::string>();
      const auto c = tag.size() == 1 ? colour_from_char(tag[0]) : std::nullopt;
      if (!c) throw InvalidInput("invalid matching colour '" + tag + "'");
      ConnectedMatching m{*c, {}, std::nullopt};
      for (const auto& p : jm.at("pairs")) {
        if (!p.is_array() || p.size() != 2)
          throw InvalidInput("a pair must be [top, bot]");
        m.pairs.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
      }
      cov.matchings.push_back(std::move(m));
    }
    cov.uncovered_top = j.at("uncovered_top").get<IndexSet>();
    cov.uncovered_bot = j.at("uncovered_bot").get<IndexSet>();
    return cov;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed cover JSON: ") + e.what());
  }
}

inline Json component_ref(const MonoComponent& c) {
  return Json{{"colour", std::string(1, colour_char(c.colour))}, {"id", c.id}};
}

inline Json classification_to_json(const TwoColourClass& cls) {
  Json w = Json::array();
  for (const auto& c : cls.witness) w.push_back(component_ref(c));
  Json j{{"variant", kind_name(cls.kind)}, {"witness", w}};
  if (cls.kind == TwoColourClass::Kind::VColouring)
    j["full_side"] = cls.full_side == Side::Top ? "Top" : "Bot";
  return j;
}

inline Json classification_to_json(const DenseTwoColourClass& cls) {
  Json w = Json::array();
  for (const auto& c : cls.witness) w.push_back(component_ref(c));
  Json j{{"variant", kind_name(cls.kind)}, {"witness", w}};
  if (cls.kind == DenseTwoColourClass::Kind::EpsV)
    j["full_side"] = cls.full_side == Side::Top ? "Top" : "Bot";
  return j;
}

/// One JSON object per line, one line per stage.
inline std::string trace_to_jsonl(const SolveTrace& trace) {
  std::ostringstream out;
  for (const auto& st : trace.stages) {
    Json ms = Json::array();
    for (const auto& m : st.matchings) ms.push_back(matching_to_json(m));
    out << Json{{"stage", stage_name(st.stage)}, {"branch", st.branch}, {"matchings", ms}}.dump()
        << '\n';
  }
  return out.str();
}

inline Json cycles_to_json(const CyclePartition& part) {
  Json cs = Json::array();
  for (const auto& cy : part.cycles) {
    Json vs = Json::array();
    for (const auto& v : cy.vertices)
      vs.push_back(Json{{"side", v.side == Side::Top ? "top" : "bot"}, {"index", v.index}});
    cs.push_back(Json{{"colour", std::string(1, colour_char(cy.colour))}, {"vertices", vs}});
  }
  return cs;
}

}  // namespace monopart

#endif  // MONOPART_JSON_IO_HPP
