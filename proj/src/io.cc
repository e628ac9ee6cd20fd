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

#include "evcg/io.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "evcg/errors.h"
#include "json.hpp"

namespace evcg {
namespace {

using Json = nlohmann::ordered_json;

Json ParseJson(std::string_view text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const size_t stop = std::min<size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    int line = 1, column = 1;
    for (size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ValidationError(std::string(what) + ": parse error at line " +
                          std::to_string(line) + ", column " + std::to_string(column));
  }
}

const Json& Field(const Json& object, const char* key, const std::string& where) {
  if (!object.is_object()) throw ValidationError(where + ": expected an object");
  auto it = object.find(key);
  if (it == object.end()) {
    throw ValidationError(where + ": missing field '" + key + "'");
  }
  return *it;
}

std::int64_t IntegerField(const Json& value, const std::string& where) {
  if (!value.is_number_integer()) throw ValidationError(where + ": expected an integer");
  return value.get<std::int64_t>();
}

Money MoneyField(const Json& value, int scale, const std::string& where) {
  try {
    if (value.is_string()) return ParseDecimal(value.get<std::string>(), scale);
    if (value.is_number_unsigned()) {
      return ParseDecimal(std::to_string(value.get<std::uint64_t>()), scale);
    }
  } catch (const ValidationError& e) {
    throw ValidationError(where + ": " + e.what());
  }
  if (value.is_number_integer()) throw ValidationError(where + ": value must be non-negative");
  throw ValidationError(where + ": expected a decimal string");
}

int ScaleField(const Json& doc, const std::string& where) {
  if (!doc.contains("scale")) return 0;
  const std::int64_t scale = IntegerField(doc["scale"], where + ".scale");
  if (scale < 0 || scale > 12) throw ValidationError(where + ".scale must be in [0, 12]");
  return static_cast<int>(scale);
}

void CheckScale(const Json& doc, const BidDataset& dataset, const std::string& where) {
  const int scale = ScaleField(doc, where);
  if (scale != dataset.scale()) {
    throw ValidationError(where + ": scale " + std::to_string(scale) +
                          " does not match the dataset scale " +
                          std::to_string(dataset.scale()));
  }
}

std::size_t BuyerIndex(const BidDataset& dataset, const std::string& id,
                       const std::string& where) {
  for (std::size_t b = 0; b < dataset.num_real_buyers(); ++b) {
    if (dataset.buyers()[b] == id) return b;
  }
  throw ValidationError(where + ": unknown buyer '" + id + "'");
}

double ParseProbability(const std::string& text, const std::string& where) {
  double v = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(v)) {
    throw ValidationError(where + ": malformed probability '" + text + "'");
  }
  return v;
}

}  // namespace

BidDataset ParseDataset(std::string_view text) {
  const Json doc = ParseJson(text, "dataset");
  const std::string root = "dataset";
  const int scale = ScaleField(doc, root);
  const std::int64_t items = IntegerField(Field(doc, "num_items", root), root + ".num_items");
  if (items < 1 || items > 1000000) throw ValidationError(root + ".num_items must be positive");
  const Json& buyers_json = Field(doc, "buyers", root);
  if (!buyers_json.is_array()) throw ValidationError(root + ".buyers: expected a list");
  std::vector<std::string> buyers;
  for (size_t b = 0; b < buyers_json.size(); ++b) {
    if (!buyers_json[b].is_string()) {
      throw ValidationError(root + ".buyers[" + std::to_string(b) + "]: expected a string");
    }
    buyers.push_back(buyers_json[b].get<std::string>());
  }
  const Json& auctions_json = Field(doc, "auctions", root);
  if (!auctions_json.is_array()) throw ValidationError(root + ".auctions: expected a list");
  std::vector<Auction> auctions;
  for (size_t a = 0; a < auctions_json.size(); ++a) {
    const std::string where = root + ".auctions[" + std::to_string(a) + "]";
    const Json& item = auctions_json[a];
    Auction auction;
    auction.weight = item.is_object() && item.contains("weight")
                         ? IntegerField(item["weight"], where + ".weight")
                         : 1;
    const Json& bids = Field(item, "bids", where);
    if (!bids.is_array()) throw ValidationError(where + ".bids: expected a list");
    if (bids.size() != buyers.size()) {
      throw ValidationError(where + ".bids: expected " + std::to_string(buyers.size()) +
                            " bids, got " + std::to_string(bids.size()));
    }
    for (size_t b = 0; b < bids.size(); ++b) {
      auction.bids.push_back(
          MoneyField(bids[b], scale, where + ".bids[" + std::to_string(b) + "]"));
    }
    auctions.push_back(std::move(auction));
  }
  try {
    return AddAuxiliaryBuyers(BidDataset(static_cast<int>(items), std::move(buyers),
                                         std::move(auctions), scale));
  } catch (const ValidationError& e) {
    throw ValidationError(root + ": " + e.what());
  }
}

std::string DatasetToJson(const BidDataset& dataset) {
  const std::size_t n = dataset.num_real_buyers();
  // Written by hand so each auction stays on one line.
  std::ostringstream out;
  out << "{\n  \"num_items\": " << dataset.num_items() << ",\n  \"scale\": "
      << dataset.scale() << ",\n  \"buyers\": [";
  for (std::size_t b = 0; b < n; ++b) {
    out << (b ? ", " : "") << Json(dataset.buyers()[b]).dump();
  }
  out << "],\n  \"auctions\": [";
  for (std::size_t a = 0; a < dataset.num_auctions(); ++a) {
    out << (a ? ",\n" : "\n") << "    {\"weight\": " << dataset.weight(a) << ", \"bids\": [";
    for (std::size_t b = 0; b < n; ++b) {
      out << (b ? ", " : "") << '"' << FormatDecimal(dataset.bid(a, b), dataset.scale())
          << '"';
    }
    out << "]}";
  }
  out << (dataset.num_auctions() ? "\n  ]\n}\n" : "]\n}\n");
  return out.str();
}

ReserveVector ParseReserves(std::string_view text, const BidDataset& dataset) {
  const Json doc = ParseJson(text, "reserves");
  CheckScale(doc, dataset, "reserves");
  const Json& map = Field(doc, "reserves", "reserves");
  if (!map.is_object()) throw ValidationError("reserves.reserves: expected an object");
  ReserveVector r = ZeroReserves(dataset);
  std::vector<bool> seen(dataset.num_real_buyers(), false);
  for (const auto& [id, value] : map.items()) {
    const std::string where = "reserves." + id;
    const std::size_t b = BuyerIndex(dataset, id, where);
    r.reserves[b] = MoneyField(value, dataset.scale(), where);
    seen[b] = true;
  }
  for (std::size_t b = 0; b < seen.size(); ++b) {
    if (!seen[b]) {
      throw ValidationError("reserves: missing buyer '" + dataset.buyers()[b] + "'");
    }
  }
  ValidateReserves(dataset, r);
  return r;
}

std::string ReservesToJson(const BidDataset& dataset, const ReserveVector& reserves) {
  ValidateReserves(dataset, reserves);
  Json doc;
  doc["scale"] = dataset.scale();
  Json map = Json::object();
  for (std::size_t b = 0; b < dataset.num_real_buyers(); ++b) {
    map[dataset.buyers()[b]] = FormatDecimal(reserves[b], dataset.scale());
  }
  doc["reserves"] = std::move(map);
  return doc.dump(2) + "\n";
}

std::vector<ReserveMass> ParseMasses(std::string_view text, const BidDataset& dataset) {
  const Json doc = ParseJson(text, "masses");
  CheckScale(doc, dataset, "masses");
  const Json& map = Field(doc, "masses", "masses");
  if (!map.is_object()) throw ValidationError("masses.masses: expected an object");
  std::vector<std::map<Money, double>> by_buyer(dataset.num_real_buyers());
  for (const auto& [name, value] : map.items()) {
    const std::string where = "masses." + name;
    const size_t cut = name.rfind('_');
    if (!name.starts_with("x_") || cut == std::string::npos || cut < 2) {
      throw ValidationError(where + ": variable names look like x_<buyer>_<reserve>");
    }
    const std::size_t b = BuyerIndex(dataset, name.substr(2, cut - 2), where);
    Money reserve;
    try {
      reserve = ParseDecimal(name.substr(cut + 1), dataset.scale());
    } catch (const ValidationError& e) {
      throw ValidationError(where + ": " + e.what());
    }
    if (!value.is_string()) throw ValidationError(where + ": expected a decimal string");
    if (by_buyer[b].count(reserve)) throw ValidationError(where + ": duplicate variable");
    by_buyer[b][reserve] = ParseProbability(value.get<std::string>(), where);
  }
  std::vector<ReserveMass> out(dataset.num_buyers(), ReserveMass{{kZeroMoney}, {1.0}});
  for (std::size_t b = 0; b < by_buyer.size(); ++b) {
    if (by_buyer[b].empty()) {
      throw ValidationError("masses: no variables for buyer '" + dataset.buyers()[b] + "'");
    }
    out[b] = ReserveMass{};
    for (const auto& [v, p] : by_buyer[b]) {
      out[b].values.push_back(v);
      out[b].probs.push_back(p);
    }
  }
  return out;
}

std::string MassesToJson(const BidDataset& dataset,
                         const std::vector<ReserveMass>& masses) {
  if (masses.size() != dataset.num_buyers()) {
    throw ValidationError("need one mass per buyer");
  }
  Json doc;
  doc["scale"] = dataset.scale();
  Json map = Json::object();
  for (std::size_t b = 0; b < dataset.num_real_buyers(); ++b) {
    const ReserveMass& m = masses[b];
    for (std::size_t j = 0; j < m.values.size(); ++j) {
      if (m.probs[j] == 0.0) continue;
      map["x_" + dataset.buyers()[b] + "_" + FormatDecimal(m.values[j], dataset.scale())] =
          FormatDouble(m.probs[j]);
    }
  }
  doc["masses"] = std::move(map);
  return doc.dump(2) + "\n";
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << content;
  if (!out) throw ValidationError("failed writing '" + path + "'");
}

std::string FormatDouble(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

std::string FormatFixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  std::string out(buf);
  if (out.starts_with('-') && out.find_first_not_of("-0.") == std::string::npos) {
    out.erase(0, 1);
  }
  return out;
}

}  // namespace evcg
