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

#ifndef MONOPART_TRACE_HPP
#define MONOPART_TRACE_HPP

#include <string>
#include <utility>
#include <vector>

#include "monopart/matching.hpp"

namespace monopart {

enum class Stage {
  Claim1Branch,
  Claim2Branch,
  SplitResidue,
  Figure4Terminal,
  ExactFallback,
  Preprocess,
  GreedyResidue,
};

inline const char* stage_name(Stage s) {
  switch (s) {
    case Stage::Claim1Branch: return "Claim1Branch";
    case Stage::Claim2Branch: return "Claim2Branch";
    case Stage::SplitResidue: return "SplitResidue";
    case Stage::Figure4Terminal: return "Figure4Terminal";
    case Stage::ExactFallback: return "ExactFallback";
    case Stage::Preprocess: return "Preprocess";
    case Stage::GreedyResidue: return "GreedyResidue";
  }
  return "?";
}

struct TraceStage {
  Stage stage;
  std::string branch;
  std::vector<ConnectedMatching> matchings;

  friend bool operator==(const TraceStage&, const TraceStage&) = default;
};

/// Ordered record of the pipeline stages a solver went through.
struct SolveTrace {
  std::vector<TraceStage> stages;

  void add(Stage s, std::string branch, std::vector<ConnectedMatching> ms = {}) {
    stages.push_back({s, std::move(branch), std::move(ms)});
  }
  bool visited(Stage s) const {
    for (const auto& st : stages)
      if (st.stage == s) return true;
    return false;
  }
  const TraceStage* last() const {
    return stages.empty() ? nullptr : &stages.back();
  }

  friend bool operator==(const SolveTrace&, const SolveTrace&) = default;
};

}  // namespace monopart

#endif  // MONOPART_TRACE_HPP
