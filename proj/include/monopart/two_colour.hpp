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

#ifndef MONOPART_TWO_COLOUR_HPP
#define MONOPART_TWO_COLOUR_HPP

#include <vector>

#include "monopart/components.hpp"
#include "monopart/cover.hpp"
#include "monopart/errors.hpp"
#include "monopart/graph.hpp"
#include "monopart/matching.hpp"
#include "monopart/structure.hpp"

namespace monopart {

/// Connected matchings partitioning the complete balanced subgraph induced by
/// `mask`, whose edges use only c1 and c2. Split colourings get two matchings
/// of the first colour and one of the second (roles reversed by `swap`);
/// otherwise one matching of each colour suffices. Empty matchings are
/// omitted.
inline std::vector<ConnectedMatching> two_colour_cover_within(
    const Graph& g, const VertexMask& mask, Colour c1, Colour c2,
    bool swap = false) {
  std::vector<ConnectedMatching> out;
  if (mask.empty()) return out;
  const TwoColourClass cls = classify_two_within(g, mask, c1, c2);
  VertexMask left = mask;
  auto take = [&](Colour c, const MonoComponent& comp) {
    Matching m = max_matching_in(g, comp, left);
    left.remove(m);
    if (!m.empty()) out.push_back({c, std::move(m), std::nullopt});
  };

  if (cls.kind == TwoColourClass::Kind::Split) {
    const auto& w = cls.witness;
    const bool first = !swap;
    const Colour a = first ? c1 : c2;
    const Colour b = first ? c2 : c1;
    const MonoComponent& a1 = first ? w[0] : w[2];
    const MonoComponent& a2 = first ? w[1] : w[3];
    const MonoComponent& b1 = first ? w[2] : w[0];
    const MonoComponent& b2 = first ? w[3] : w[1];
    take(a, a1);
    take(a, a2);
    take(b, b1);
    take(b, b2);
    return out;
  }

  const MonoComponent& r = cls.witness[0];
  const Colour other = r.colour == c1 ? c2 : c1;
  take(r.colour, r);
  // The residue is complete in `other`, hence one connected component.
  Matching m = max_matching(g, left, other);
  left.remove(m);
  if (!m.empty()) out.push_back({other, std::move(m), std::nullopt});
  return out;
}

/// Partition of a complete balanced 2-coloured graph into at most three
/// connected matchings.
inline Cover two_colour_cover(const Graph& g, Colour c1, Colour c2,
                              bool swap = false) {
  if (!g.is_balanced()) throw InvalidInput("graph is not balanced");
  const auto all = VertexMask::all(g);
  detail::require_two_coloured(g, all, c1, c2, false);
  return make_cover(g, two_colour_cover_within(g, all, c1, c2, swap));
}

}  // namespace monopart

#endif  // MONOPART_TWO_COLOUR_HPP
