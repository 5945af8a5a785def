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

#ifndef MONOPART_ERRORS_HPP
#define MONOPART_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace monopart {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph, cover or arguments; also violated preconditions of the
// exact (complete-graph) algorithms.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A density or degree hypothesis of the dense algorithms does not hold.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

// The proof-guided solver reached a state none of its branches handles and
// fallback was not allowed.
class PipelineIncomplete : public Error {
 public:
  using Error::Error;
};

// An exhaustive engine was asked for an instance above its hard ceiling.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace monopart

#endif  // MONOPART_ERRORS_HPP
