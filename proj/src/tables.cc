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

#include "evcg/tables.h"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "evcg/bounds.h"
#include "evcg/errors.h"

namespace evcg {
namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

bool SameCoordinate(double a, double b) {
  if (std::isnan(a) || std::isnan(b)) return std::isnan(a) && std::isnan(b);
  return std::abs(a - b) <= 1e-9;
}

double ParseField(std::string_view text, int line, const char* name) {
  if (text.empty()) return kNan;
  double v = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ValidationError("snapshot line " + std::to_string(line) + ": bad " + name +
                          " '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

std::vector<TableCell> ComputeTables() {
  std::vector<TableCell> out;
  for (double y : kTableY) {
    for (double x : kTableX) out.push_back({1, y, x, kNan, Table1Lower(y, x), ""});
  }
  for (double alpha : kTableAlpha) {
    out.push_back({2, kNan, kNan, alpha, Table2Lower(alpha), ""});
  }
  for (double y : kTableY) out.push_back({3, y, kNan, kNan, Table3Lower(y), ""});
  return out;
}

std::vector<TableCell> ParseSnapshot(std::string_view csv) {
  std::vector<TableCell> out;
  std::istringstream in{std::string(csv)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.starts_with('#')) continue;
    if (number == 1 && line.starts_with("table")) continue;
    std::vector<std::string_view> fields;
    std::string_view rest = line;
    while (true) {
      const size_t comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != 5) {
      throw ValidationError("snapshot line " + std::to_string(number) +
                            ": expected 5 fields, got " + std::to_string(fields.size()));
    }
    TableCell cell;
    const double table = ParseField(fields[0], number, "table");
    if (table != 1 && table != 2 && table != 3) {
      throw ValidationError("snapshot line " + std::to_string(number) +
                            ": table must be 1, 2 or 3");
    }
    cell.table = static_cast<int>(table);
    cell.y = ParseField(fields[1], number, "y");
    cell.x = ParseField(fields[2], number, "x");
    cell.alpha = ParseField(fields[3], number, "alpha");
    cell.expected = std::string(fields[4]);
    if (cell.expected != "-") ParseField(cell.expected, number, "printed value");
    if (cell.expected.empty()) {
      throw ValidationError("snapshot line " + std::to_string(number) +
                            ": missing printed value");
    }
    out.push_back(std::move(cell));
  }
  return out;
}

bool PrintedMatches(const std::optional<double>& value, std::string_view printed) {
  if (printed == "-") return !value.has_value();
  if (!value.has_value()) return false;
  double p = 0.0;
  const auto [end, ec] =
      std::from_chars(printed.data(), printed.data() + printed.size(), p);
  if (ec != std::errc() || end != printed.data() + printed.size()) return false;
  const size_t dot = printed.find('.');
  const int decimals =
      dot == std::string_view::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
  const double unit = std::pow(10.0, decimals);
  // The small nudge keeps values like 0.8 * 10 from flooring to 7.
  const double truncated = std::floor(*value * unit + 1e-9) / unit;
  return std::min(std::abs(*value - p), std::abs(truncated - p)) <= 0.005 + 1e-12;
}

bool SameCell(const TableCell& a, const TableCell& b) {
  return a.table == b.table && SameCoordinate(a.y, b.y) && SameCoordinate(a.x, b.x) &&
         SameCoordinate(a.alpha, b.alpha);
}

}  // namespace evcg
