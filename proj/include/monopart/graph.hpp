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

#ifndef MONOPART_GRAPH_HPP
#define MONOPART_GRAPH_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monopart/errors.hpp"

namespace monopart {

/// Edge colour. The enumerator order is the canonical tie-break order.
enum class Colour : std::uint8_t { Red = 0, Green = 1, Blue = 2 };

inline constexpr std::array<Colour, 3> kColours{Colour::Red, Colour::Green,
                                                Colour::Blue};

constexpr std::size_t index_of(Colour c) { return static_cast<std::size_t>(c); }
constexpr Colour colour_at(std::size_t i) { return static_cast<Colour>(i); }

constexpr char colour_char(Colour c) {
  switch (c) {
    case Colour::Red: return 'R';
    case Colour::Green: return 'G';
    case Colour::Blue: return 'B';
  }
  return '?';
}

constexpr std::string_view colour_name(Colour c) {
  switch (c) {
    case Colour::Red: return "Red";
    case Colour::Green: return "Green";
    case Colour::Blue: return "Blue";
  }
  return "?";
}

inline std::optional<Colour> colour_from_char(char ch) {
  switch (ch) {
    case 'R': return Colour::Red;
    case 'G': return Colour::Green;
    case 'B': return Colour::Blue;
    default: return std::nullopt;
  }
}

enum class Side : std::uint8_t { Top, Bot };

/// Sorted list of vertex indices on one side.
using IndexSet = std::vector<std::size_t>;

/// A (top, bottom) vertex pair.
using Edge = std::pair<std::size_t, std::size_t>;

/// Edge set in which no vertex repeats.
using Matching = std::vector<Edge>;

inline bool contains(const IndexSet& s, std::size_t v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline IndexSet iota_set(std::size_t n) {
  IndexSet s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = i;
  return s;
}

/// An edge-coloured bipartite graph with biparts of size n_top and n_bot.
/// Every (top, bot) cell holds a colour or is absent. Values are immutable.
class ColouredBipartiteGraph {
 public:
  static constexpr std::uint8_t kAbsent = 3;

  ColouredBipartiteGraph() = default;

  /// Graph with every edge absent.
  ColouredBipartiteGraph(std::size_t n_top, std::size_t n_bot)
      : n_top_(n_top), n_bot_(n_bot), cells_(n_top * n_bot, kAbsent) {}

  /// Builds the graph cell by cell from `f(t, b) -> std::optional<Colour>`.
  template <typename F>
  ColouredBipartiteGraph(std::size_t n_top, std::size_t n_bot, F&& f)
      : ColouredBipartiteGraph(n_top, n_bot) {
    for (std::size_t t = 0; t < n_top; ++t)
      for (std::size_t b = 0; b < n_bot; ++b) {
        std::optional<Colour> c = f(t, b);
        cells_[t * n_bot + b] = c ? static_cast<std::uint8_t>(*c) : kAbsent;
      }
  }

  static ColouredBipartiteGraph complete(std::size_t n_top, std::size_t n_bot,
                                         Colour c) {
    return ColouredBipartiteGraph(
        n_top, n_bot, [c](std::size_t, std::size_t) { return std::optional(c); });
  }

  /// One string per top vertex over {R, G, B, .}; all rows equally long.
  static ColouredBipartiteGraph from_rows(const std::vector<std::string>& rows,
                                          std::size_t n_bot_if_empty = 0) {
    const std::size_t n_top = rows.size();
    const std::size_t n_bot = rows.empty() ? n_bot_if_empty : rows[0].size();
    ColouredBipartiteGraph g(n_top, n_bot);
    for (std::size_t t = 0; t < n_top; ++t) {
      if (rows[t].size() != n_bot)
        throw InvalidInput("row " + std::to_string(t) + " has length " +
                           std::to_string(rows[t].size()) + ", expected " +
                           std::to_string(n_bot));
      for (std::size_t b = 0; b < n_bot; ++b) {
        const char ch = rows[t][b];
        if (ch == '.') continue;
        auto c = colour_from_char(ch);
        if (!c)
          throw InvalidInput(std::string("invalid colour character '") + ch +
                             "'");
        g.cells_[t * n_bot + b] = static_cast<std::uint8_t>(*c);
      }
    }
    return g;
  }

  std::size_t n_top() const { return n_top_; }
  std::size_t n_bot() const { return n_bot_; }
  std::size_t side_size(Side s) const { return s == Side::Top ? n_top_ : n_bot_; }

  std::optional<Colour> colour(std::size_t t, std::size_t b) const {
    const std::uint8_t v = cells_[t * n_bot_ + b];
    if (v == kAbsent) return std::nullopt;
    return static_cast<Colour>(v);
  }

  /// Raw cell code: 0..2 for a colour, kAbsent otherwise.
  std::uint8_t cell(std::size_t t, std::size_t b) const {
    return cells_[t * n_bot_ + b];
  }

  bool has_edge(std::size_t t, std::size_t b) const {
    return cells_[t * n_bot_ + b] != kAbsent;
  }

  bool has_edge(std::size_t t, std::size_t b, Colour c) const {
    return cells_[t * n_bot_ + b] == static_cast<std::uint8_t>(c);
  }

  bool is_complete() const {
    return std::none_of(cells_.begin(), cells_.end(),
                        [](std::uint8_t v) { return v == kAbsent; });
  }

  bool is_balanced() const { return n_top_ == n_bot_; }

  std::size_t edge_count() const {
    return static_cast<std::size_t>(
        std::count_if(cells_.begin(), cells_.end(),
                      [](std::uint8_t v) { return v != kAbsent; }));
  }

  std::size_t edge_count(Colour c) const {
    return static_cast<std::size_t>(
        std::count(cells_.begin(), cells_.end(), static_cast<std::uint8_t>(c)));
  }

  bool uses_colour(Colour c) const { return edge_count(c) > 0; }

  std::size_t degree_top(std::size_t t) const {
    std::size_t d = 0;
    for (std::size_t b = 0; b < n_bot_; ++b) d += has_edge(t, b) ? 1 : 0;
    return d;
  }

  std::size_t degree_bot(std::size_t b) const {
    std::size_t d = 0;
    for (std::size_t t = 0; t < n_top_; ++t) d += has_edge(t, b) ? 1 : 0;
    return d;
  }

  /// Biparts swapped.
  ColouredBipartiteGraph transposed() const {
    ColouredBipartiteGraph g(n_bot_, n_top_);
    for (std::size_t t = 0; t < n_top_; ++t)
      for (std::size_t b = 0; b < n_bot_; ++b)
        g.cells_[b * n_top_ + t] = cells_[t * n_bot_ + b];
    return g;
  }

  /// Relabels colours: an edge of colour c gets colour map[c].
  ColouredBipartiteGraph recoloured(const std::array<Colour, 3>& map) const {
    ColouredBipartiteGraph g = *this;
    for (auto& v : g.cells_)
      if (v != kAbsent) v = static_cast<std::uint8_t>(map[v]);
    return g;
  }

  /// Subgraph induced on the listed vertices, in list order.
  ColouredBipartiteGraph induced(const IndexSet& top, const IndexSet& bot) const {
    ColouredBipartiteGraph g(top.size(), bot.size());
    for (std::size_t i = 0; i < top.size(); ++i)
      for (std::size_t j = 0; j < bot.size(); ++j)
        g.cells_[i * bot.size() + j] = cells_[top[i] * n_bot_ + bot[j]];
    return g;
  }

  /// Same graph with every edge of colour c made absent.
  ColouredBipartiteGraph without_colour(Colour c) const {
    ColouredBipartiteGraph g = *this;
    for (auto& v : g.cells_)
      if (v == static_cast<std::uint8_t>(c)) v = kAbsent;
    return g;
  }

  std::vector<std::string> rows() const {
    std::vector<std::string> out(n_top_, std::string(n_bot_, '.'));
    for (std::size_t t = 0; t < n_top_; ++t)
      for (std::size_t b = 0; b < n_bot_; ++b) {
        const auto c = colour(t, b);
        if (c) out[t][b] = colour_char(*c);
      }
    return out;
  }

  friend bool operator==(const ColouredBipartiteGraph&,
                         const ColouredBipartiteGraph&) = default;

 private:
  std::size_t n_top_ = 0;
  std::size_t n_bot_ = 0;
  std::vector<std::uint8_t> cells_;
};

using Graph = ColouredBipartiteGraph;

/// Membership flags for a subset of the vertices of a host graph.
struct VertexMask {
  std::vector<char> top;
  std::vector<char> bot;

  static VertexMask all(const Graph& g) {
    return {std::vector<char>(g.n_top(), 1), std::vector<char>(g.n_bot(), 1)};
  }
  static VertexMask none(const Graph& g) {
    return {std::vector<char>(g.n_top(), 0), std::vector<char>(g.n_bot(), 0)};
  }
  static VertexMask of(const Graph& g, const IndexSet& t, const IndexSet& b) {
    VertexMask m = none(g);
    for (auto v : t) m.top[v] = 1;
    for (auto v : b) m.bot[v] = 1;
    return m;
  }

  std::size_t count_top() const {
    return static_cast<std::size_t>(std::count(top.begin(), top.end(), 1));
  }
  std::size_t count_bot() const {
    return static_cast<std::size_t>(std::count(bot.begin(), bot.end(), 1));
  }
  bool empty() const { return count_top() == 0 && count_bot() == 0; }

  IndexSet top_list() const { return list(top); }
  IndexSet bot_list() const { return list(bot); }

  void remove(const Matching& m) {
    for (const auto& [t, b] : m) {
      top[t] = 0;
      bot[b] = 0;
    }
  }

  friend bool operator==(const VertexMask&, const VertexMask&) = default;

 private:
  static IndexSet list(const std::vector<char>& f) {
    IndexSet out;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (f[i]) out.push_back(i);
    return out;
  }
};

}  // namespace monopart

#endif  // MONOPART_GRAPH_HPP
