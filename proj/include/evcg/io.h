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

#ifndef EVCG_IO_H_
#define EVCG_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "evcg/dataset.h"
#include "evcg/lp_model.h"

namespace evcg {

// Dataset document:
//   {"num_items": 2, "scale": 2, "buyers": ["b1", "b2"],
//    "auctions": [{"weight": 1, "bids": ["8.50", "2"]}, ...]}
// Bids are decimal strings (plain integers are accepted) parsed exactly at
// `scale`; "scale" defaults to 0. Auxiliary buyers are added on load and never
// written. Errors name the line or the offending field.
BidDataset ParseDataset(std::string_view text);
std::string DatasetToJson(const BidDataset& dataset);

// Reserve vector document, real buyers only:
//   {"scale": 0, "reserves": {"b1": "8", "b2": "1"}}
ReserveVector ParseReserves(std::string_view text, const BidDataset& dataset);
std::string ReservesToJson(const BidDataset& dataset, const ReserveVector& reserves);

// Named-variable mass document, real buyers only; auxiliaries get {0: 1}:
//   {"scale": 0, "masses": {"x_b2_1": "0.975", "x_b2_2": "0.025", ...}}
// Probabilities are written as shortest round-trip decimals.
std::vector<ReserveMass> ParseMasses(std::string_view text, const BidDataset& dataset);
std::string MassesToJson(const BidDataset& dataset,
                         const std::vector<ReserveMass>& masses);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view content);

// Shortest decimal text that parses back to the same double.
std::string FormatDouble(double value);
// Fixed-point text with `digits` decimals; "-0" normalized to "0".
std::string FormatFixed(double value, int digits);

}  // namespace evcg

#endif  // EVCG_IO_H_
