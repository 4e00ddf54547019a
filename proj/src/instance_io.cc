// Copyright 2026 The ifkp Authors
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

#include "ifkp/instance_io.h"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "ifkp/error.h"
#include "json.hpp"

namespace ifkp {

namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParseError, where + ": " + what);
}

size_t LineOf(std::string_view text, size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + std::count(text.begin(), text.begin() + byte, '\n');
}

void RejectUnknownKeys(const json& obj, const std::set<std::string>& allowed,
                       const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) Fail(where, "unknown field '" + key + "'");
  }
}

int64_t ReadInt(const json& obj, const std::string& key,
                const std::string& where, std::optional<int64_t> fallback) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    if (!fallback) Fail(where, "missing field '" + key + "'");
    return *fallback;
  }
  if (!it->is_number_integer()) {
    Fail(where + "." + key, "expected an integer");
  }
  if (it->is_number_unsigned() &&
      it->get<uint64_t>() >
          static_cast<uint64_t>(std::numeric_limits<int64_t>::max())) {
    Fail(where + "." + key, "integer exceeds 63 bits");
  }
  return it->get<int64_t>();
}

Rational ReadRational(const json& obj, const std::string& key,
                      const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) return Rational(1);
  if (it->is_number_integer()) return Rational(it->get<int64_t>());
  if (!it->is_string()) {
    Fail(where + "." + key, "expected \"num/den\" or an integer");
  }
  try {
    return Rational::Parse(it->get<std::string>());
  } catch (const Error& e) {
    Fail(where + "." + key, e.what());
  }
}

json RationalToJson(const Rational& r) { return r.ToString(); }

}  // namespace

InstanceDocument ParseDocument(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    Fail("line " + std::to_string(LineOf(text, e.byte)), e.what());
  }
  if (!doc.is_object()) Fail("document", "expected a JSON object");
  const bool inverse = doc.contains("x_star");
  RejectUnknownKeys(doc, {"b", "x_star", "items"}, "document");

  InstanceDocument out;
  out.base.budget = ReadInt(doc, "b", "document", std::nullopt);
  if (!doc.contains("items") || !doc["items"].is_array()) {
    Fail("document", "expected an 'items' array");
  }
  const json& items = doc["items"];
  const size_t n = items.size();

  InverseInstance inv;
  inv.bounds = ModificationBounds::Zeros(n);
  inv.weights = CostWeights::Uniform(n, Rational(1));
  for (size_t i = 0; i < n; ++i) {
    const std::string where = "items[" + std::to_string(i) + "]";
    const json& item = items[i];
    if (!item.is_object()) Fail(where, "expected an object");
    if (inverse) {
      RejectUnknownKeys(item,
                        {"p", "c", "u_bar", "v_bar", "lambda_bar", "mu_bar",
                         "w", "w_cost"},
                        where);
    } else {
      RejectUnknownKeys(item, {"p", "c"}, where);
    }
    out.base.items.push_back({ReadInt(item, "p", where, std::nullopt),
                              ReadInt(item, "c", where, std::nullopt)});
    if (inverse) {
      inv.bounds.u_bar[i] = ReadInt(item, "u_bar", where, 0);
      inv.bounds.v_bar[i] = ReadInt(item, "v_bar", where, 0);
      inv.bounds.lambda_bar[i] = ReadInt(item, "lambda_bar", where, 0);
      inv.bounds.mu_bar[i] = ReadInt(item, "mu_bar", where, 0);
      inv.weights.w[i] = ReadRational(item, "w", where);
      inv.weights.w_cost[i] = ReadRational(item, "w_cost", where);
    }
  }
  ValidateFkpInstance(out.base);

  if (inverse) {
    const json& xs = doc["x_star"];
    if (!xs.is_array()) Fail("document.x_star", "expected an array");
    for (size_t i = 0; i < xs.size(); ++i) {
      if (!xs[i].is_number_integer() ||
          (xs[i].get<int64_t>() != 0 && xs[i].get<int64_t>() != 1)) {
        Fail("x_star[" + std::to_string(i) + "]", "expected 0 or 1");
      }
      inv.x_star.values.push_back(xs[i].get<int>());
    }
    inv.base = out.base;
    ValidateInverseInstance(inv);
    out.inverse = std::move(inv);
  }
  return out;
}

InverseInstance ParseInstance(std::string_view text) {
  InstanceDocument doc = ParseDocument(text);
  if (!doc.inverse) Fail("document", "missing field 'x_star'");
  return std::move(*doc.inverse);
}

std::string SerializeInstance(const InverseInstance& inv) {
  json doc;
  doc["b"] = inv.base.budget;
  doc["x_star"] = inv.x_star.values;
  json items = json::array();
  for (size_t i = 0; i < inv.size(); ++i) {
    items.push_back({{"p", inv.base.items[i].profit},
                     {"c", inv.base.items[i].cost},
                     {"u_bar", inv.bounds.u_bar[i]},
                     {"v_bar", inv.bounds.v_bar[i]},
                     {"lambda_bar", inv.bounds.lambda_bar[i]},
                     {"mu_bar", inv.bounds.mu_bar[i]},
                     {"w", RationalToJson(inv.weights.w[i])},
                     {"w_cost", RationalToJson(inv.weights.w_cost[i])}});
  }
  doc["items"] = std::move(items);
  return doc.dump(2) + "\n";
}

std::string SerializeFkpInstance(const FkpInstance& inst) {
  json doc;
  doc["b"] = inst.budget;
  json items = json::array();
  for (const Item& item : inst.items) {
    items.push_back({{"p", item.profit}, {"c", item.cost}});
  }
  doc["items"] = std::move(items);
  return doc.dump(2) + "\n";
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << contents;
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path);
}

}  // namespace ifkp
