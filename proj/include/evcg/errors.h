// Copyright 2026 The Authors.
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

#ifndef EVCG_ERRORS_H_
#define EVCG_ERRORS_H_

#include <stdexcept>
#include <string>

namespace evcg {

// Malformed input: bad dataset, reserve off the grid, invalid parameters.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size cap (sub-profile budget, brute-force evaluations, solver
// rows) would be exceeded. Callers refuse rather than downsample.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The LP solver failed to produce an optimal point for a well-formed model.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace evcg

#endif  // EVCG_ERRORS_H_
