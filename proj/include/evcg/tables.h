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

#ifndef EVCG_TABLES_H_
#define EVCG_TABLES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace evcg {

// One cell of the three bound tables. Unused coordinates are NaN: the first
// table is indexed by (y, x), the second by alpha, the third by y.
struct TableCell {
  int table = 0;
  double y;
  double x;
  double alpha;
  std::optional<double> value;  // nullopt for an invalid cell
  std::string expected;         // printed text from a snapshot, "-" if invalid
};

// Every cell of the default grids, in snapshot order, with `expected` empty.
std::vector<TableCell> ComputeTables();

// Reads "table,y,x,alpha,printed" rows; throws ValidationError naming the
// line on malformed input.
std::vector<TableCell> ParseSnapshot(std::string_view csv);

// A printed entry with d decimals matches when the value is within 0.005 of
// it, either as is or truncated to d decimals. "-" matches only nullopt.
bool PrintedMatches(const std::optional<double>& value, std::string_view printed);

// Same cell coordinates (to 1e-9).
bool SameCell(const TableCell& a, const TableCell& b);

}  // namespace evcg

#endif  // EVCG_TABLES_H_
