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

#ifndef MONOPART_HPP
#define MONOPART_HPP

#include "monopart/canonical.hpp"
#include "monopart/components.hpp"
#include "monopart/cover.hpp"
#include "monopart/dense.hpp"
#include "monopart/errors.hpp"
#include "monopart/figure4.hpp"
#include "monopart/generators.hpp"
#include "monopart/graph.hpp"
#include "monopart/harness.hpp"
#include "monopart/json_io.hpp"
#include "monopart/matching.hpp"
#include "monopart/oracle.hpp"
#include "monopart/solver.hpp"
#include "monopart/structure.hpp"
#include "monopart/trace.hpp"
#include "monopart/two_colour.hpp"

#endif  // MONOPART_HPP
