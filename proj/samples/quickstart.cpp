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

// Builds the r = 3 blow-up, covers it with connected matchings, checks the
// cover, and compares with the exact minimum.

#include <iostream>

#include "monopart.hpp"

namespace mp = monopart;

int main() {
  const mp::Graph g = mp::blowup_lower_bound(3);
  for (const auto& row : g.rows()) std::cout << row << "\n";

  const auto res = mp::three_colour_cover(g);
  std::cout << "\n" << mp::trace_to_jsonl(res.trace);
  std::cout << "\ncover: " << mp::cover_to_json(res.cover).dump() << "\n";

  const auto report = mp::verify_cover(g, res.cover, /*require_partition=*/true);
  std::cout << "valid: " << (report.ok() ? "yes" : "no") << ", matchings used: "
            << res.cover.non_empty_count() << "\n";

  if (const auto best = mp::min_matching_cover_exact(g, 5))
    std::cout << "exact minimum: " << best->first << "\n";

  const auto cls = mp::classify_two(mp::split_colouring(2, 1, 1, 2), mp::Colour::Red,
                                    mp::Colour::Blue);
  std::cout << "split_colouring(2,1,1,2) classifies as " << mp::kind_name(cls.kind) << "\n";
  return report.ok() ? 0 : 1;
}
